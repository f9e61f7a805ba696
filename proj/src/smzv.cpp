#include "mzv/smzv.hpp"

#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>

#include "mzv/errors.hpp"
#include "mzv/fmzv_verify.hpp"
#include "mzv/operators.hpp"

namespace mzv {

namespace {

Real signed_product(const PrefixSums& forward, const PrefixSums& backward, const Index& k,
                    bool half) {
  // Term i pairs ζ(k_1..k_i) with ζ(k_r..k_{i+1}), i.e. a forward prefix of
  // length i with a backward prefix of length r - i.
  const std::size_t r = k.depth();
  CompensatedSum total;
  std::uint64_t tail_weight = 0;  // k_{i+1} + ... + k_r
  for (std::size_t i = r + 1; i-- > 0;) {
    const auto& f = half ? forward.at_half : forward.at_cutoff;
    const auto& b = half ? backward.at_half : backward.at_cutoff;
    const Real term = f[i] * b[r - i];
    total.add(tail_weight % 2 == 0 ? term : Real(-term));
    if (i > 0) tail_weight += k[i - 1];
  }
  return total.value();
}

Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q).str()) /
         Real(boost::multiprecision::denominator(q).str());
}

// The symmetric sum at M and at floor(M/2).
std::pair<Real, Real> symmetric_sum_pair(const Index& k, std::uint64_t cutoff) {
  const PrefixSums forward = truncated_prefix_sums(k, cutoff, false);
  const PrefixSums backward = truncated_prefix_sums(reverse(k), cutoff, false);
  return {signed_product(forward, backward, k, false), signed_product(forward, backward, k, true)};
}

Real power_of_zeta2_zeta3(std::uint32_t k, std::uint64_t cutoff) {
  const Real z2 = zeta_reference(2, cutoff);
  if (k % 2 == 0) {
    Real out = 1;
    for (std::uint32_t e = 0; e < k / 2; ++e) out *= z2;
    return out;
  }
  return z2 * zeta_reference(3, cutoff);
}

}  // namespace

void CompensatedSum::add(const Real& x) {
  const Real t = sum_ + x;
  if (abs(sum_) >= abs(x)) {
    carry_ += (sum_ - t) + x;
  } else {
    carry_ += (x - t) + sum_;
  }
  sum_ = t;
}

PrefixSums truncated_prefix_sums(const Index& k, std::uint64_t cutoff, bool star) {
  if (cutoff < 1) throw DomainError("truncation cutoff must be >= 1");
  const std::size_t r = k.depth();
  std::uint32_t max_exponent = 1;
  for (auto v : k) max_exponent = std::max(max_exponent, v);

  std::vector<CompensatedSum> state(r + 1);
  state[0].add(1);
  std::vector<Real> level(r + 1, Real(0));
  level[0] = 1;
  std::vector<Real> powers(max_exponent + 1);
  PrefixSums out;
  const std::uint64_t half = cutoff / 2;
  auto snapshot = [&] {
    std::vector<Real> values(r + 1);
    for (std::size_t j = 0; j <= r; ++j) values[j] = state[j].value();
    return values;
  };
  if (half == 0) out.at_half = snapshot();
  for (std::uint64_t n = 1; n <= cutoff; ++n) {
    const Real inverse = Real(1) / Real(n);
    powers[1] = inverse;
    for (std::uint32_t e = 2; e <= max_exponent; ++e) powers[e] = powers[e - 1] * inverse;
    if (star) {
      for (std::size_t j = 1; j <= r; ++j) {
        state[j].add(level[j - 1] * powers[k[j - 1]]);
        level[j] = state[j].value();
      }
    } else {
      for (std::size_t j = r; j >= 1; --j) {
        state[j].add(level[j - 1] * powers[k[j - 1]]);
        level[j] = state[j].value();
      }
    }
    if (n == half) out.at_half = snapshot();
  }
  out.at_cutoff = snapshot();
  return out;
}

TruncatedValue truncated_mzv(const Index& k, std::uint64_t cutoff, bool star) {
  const PrefixSums sums = truncated_prefix_sums(k, cutoff, star);
  return {k, cutoff, star, sums.at_cutoff.back()};
}

SymmetricApprox smzv_star_approx(const Index& k, std::uint64_t cutoff) {
  if (k.empty()) throw DomainError("smzv_star_approx: empty index");
  const auto [value, half_value] = symmetric_sum_pair(k, cutoff);
  return {k, cutoff, false, value, abs(value - half_value)};
}

SymmetricApprox smzsv_approx(const Index& k, std::uint64_t cutoff) {
  CompensatedSum value, half_value;
  for (const auto& [term, coefficient] : star_expand(k)) {
    const auto [at_cutoff, at_half] = symmetric_sum_pair(term, cutoff);
    value.add(to_real(coefficient) * at_cutoff);
    half_value.add(to_real(coefficient) * at_half);
  }
  return {k, cutoff, true, value.value(), abs(value.value() - half_value.value())};
}

std::optional<Rational> rational_reconstruct(const Real& x, std::uint64_t max_den, const Real& tol) {
  constexpr double kLargestPartialQuotient = 9.0e18;
  if (!isfinite(x) || abs(x) > kLargestPartialQuotient) return std::nullopt;
  Integer h_prev = 1, h_prev2 = 0;  // numerators of the last two convergents
  Integer k_prev = 0, k_prev2 = 1;  // denominators
  Real y = x;
  while (true) {
    const Real a_real = floor(y);
    const Integer a(static_cast<long long>(a_real));
    const Integer h = a * h_prev + h_prev2;
    const Integer q = a * k_prev + k_prev2;
    if (q > max_den) return std::nullopt;
    const Rational convergent(h, q);
    if (abs(x - to_real(convergent)) <= tol) return convergent;
    const Real fraction = y - a_real;
    if (fraction == 0 || 1 / fraction > kLargestPartialQuotient) return std::nullopt;
    y = 1 / fraction;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = q;
  }
}

Real zeta_reference(unsigned s, std::uint64_t cutoff) {
  if (s < 2) throw DomainError("zeta_reference: need s >= 2");
  static std::mutex mutex;
  static std::map<std::pair<unsigned, std::uint64_t>, Real> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({s, cutoff}); it != memo.end()) return it->second;
  }
  CompensatedSum partial;
  // Smallest terms first.
  for (std::uint64_t n = cutoff; n >= 1; --n) {
    const Real inverse = Real(1) / Real(n);
    Real term = inverse;
    for (unsigned e = 1; e < s; ++e) term *= inverse;
    partial.add(term);
  }
  // Tail Σ_{n>N} n^{-s} ≈ N^{1-s}/(s-1) - N^{-s}/2 + s N^{-s-1}/12 - s(s+1)(s+2) N^{-s-3}/720.
  const Real big_n = Real(cutoff);
  const Real n_s = pow(big_n, static_cast<int>(s));
  Real tail = big_n / (n_s * (s - 1)) - 1 / (2 * n_s) + Real(s) / (12 * n_s * big_n) -
              Real(s) * (s + 1) * (s + 2) / (720 * n_s * big_n * big_n * big_n);
  const Real value = partial.value() + tail;
  std::lock_guard lock(mutex);
  memo.emplace(std::make_pair(s, cutoff), value);
  return value;
}

SmzvReport verify_smzv_weighted_sum(std::uint32_t k, std::uint32_t r, std::uint32_t i, bool star,
                                    const SmzvOptions& options) {
  require_kri(k, r, i);
  if (r % 2 == 0) throw DomainError("weighted sum formula: r must be odd, got r=" + std::to_string(r));
  if (k > 5) {
    throw DomainError("symmetric weighted sum check supports k <= 5, got k=" + std::to_string(k));
  }
  IndexCombination terms;
  for (const auto& [composition, weight] : weighted_sum_combination(k, r, i)) {
    if (star) {
      terms += weight * star_expand(composition);
    } else {
      terms.add(composition, weight);
    }
  }
  CompensatedSum total;
  for (const auto& [index, coefficient] : terms) {
    total.add(to_real(coefficient) *
              smzv_star_approx(index, options.cutoff).value);
  }

  SmzvReport report{k, r, i, star, options.cutoff, total.value(), "none", std::nullopt, 0, false,
                    k % 2 == 1 ? "verified" : "consistent"};
  const Real tol = options.tol;
  if (k == 1 || k == 3) {
    report.residual = abs(report.sum);
    report.pass = report.residual <= tol;
    return report;
  }
  report.basis = k == 2 ? "zeta2" : k == 4 ? "zeta2^2" : "zeta2*zeta3";
  const Real basis = power_of_zeta2_zeta3(k, 100 * options.cutoff);
  report.q = rational_reconstruct(report.sum / basis, options.max_den, tol);
  if (report.q) {
    report.residual = abs(report.sum - to_real(*report.q) * basis);
    report.pass = report.residual <= tol;
  } else {
    report.residual = abs(report.sum);
    report.pass = false;
  }
  return report;
}

std::string format_real(const Real& x, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << x;
  return out.str();
}

}  // namespace mzv
