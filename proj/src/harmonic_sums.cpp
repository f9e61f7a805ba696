#include "mzv/harmonic_sums.hpp"

#include <algorithm>
#include <numeric>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

// Partial-sum columns above this many words fall back to the rolling DP.
constexpr std::size_t kMaxSharedWords = std::size_t{1} << 27;

std::uint32_t max_entry(std::span<const Index> indices) {
  std::uint32_t m = 1;
  for (const Index& k : indices) {
    for (auto v : k) m = std::max(m, v);
  }
  return m;
}

std::size_t max_depth(std::span<const Index> indices) {
  std::size_t d = 0;
  for (const Index& k : indices) d = std::max(d, k.depth());
  return d;
}

std::vector<std::uint64_t> reference_row(std::span<const Index> indices, std::uint64_t p,
                                         bool star) {
  const auto inverses = inverse_table(p);
  std::vector<std::uint64_t> row(indices.size());
  for (std::size_t b = 0; b < indices.size(); ++b) {
    row[b] = harmonic_sum_reference(indices[b], inverses, p, star);
  }
  return row;
}

}  // namespace

PrimeContext::PrimeContext(std::uint64_t p, std::uint32_t max_exponent)
    : p_(p), max_exponent_(std::max<std::uint32_t>(max_exponent, 1)), inverses_(inverse_table(p)) {
  powers_.assign(static_cast<std::size_t>(max_exponent_) * p_, 0);
  std::copy(inverses_.begin(), inverses_.end(), powers_.begin());
  for (std::uint32_t e = 2; e <= max_exponent_; ++e) {
    auto previous = powers_.begin() + static_cast<std::ptrdiff_t>((e - 2) * p_);
    auto current = powers_.begin() + static_cast<std::ptrdiff_t>((e - 1) * p_);
    for (std::uint64_t n = 1; n < p_; ++n) current[n] = mul_mod(previous[n], inverses_[n], p_);
  }
}

std::uint64_t harmonic_sum_reference(const Index& k, std::span<const std::uint64_t> inverses,
                                     std::uint64_t p, bool star) {
  const std::size_t r = k.depth();
  // state[j] = sum over n_1 <(=) ... <(=) n_j <= n of the first j factors.
  std::vector<std::uint64_t> state(r + 1, 0);
  state[0] = 1 % p;
  for (std::uint64_t n = 1; n < p; ++n) {
    if (star) {
      for (std::size_t j = 1; j <= r; ++j) {
        const std::uint64_t term = mul_mod(state[j - 1], pow_mod(inverses[n], k[j - 1], p), p);
        state[j] = (state[j] + term) % p;
      }
    } else {
      for (std::size_t j = r; j >= 1; --j) {
        const std::uint64_t term = mul_mod(state[j - 1], pow_mod(inverses[n], k[j - 1], p), p);
        state[j] = (state[j] + term) % p;
      }
    }
  }
  return state[r];
}

PrimeFieldValue fmzv_mod_p(const Index& k, std::uint64_t p) {
  return PrimeFieldValue(p, harmonic_sum_reference(k, inverse_table(p), p, false));
}

PrimeFieldValue fmzsv_mod_p(const Index& k, std::uint64_t p) {
  return PrimeFieldValue(p, harmonic_sum_reference(k, inverse_table(p), p, true));
}

std::vector<std::uint64_t> harmonic_sums_shared(std::span<const Index> indices,
                                                const PrimeContext& context, bool star) {
  const std::uint64_t p = context.prime();
  if (max_entry(indices) > context.max_exponent()) {
    throw DomainError("harmonic_sums_shared: prime context lacks the needed inverse powers");
  }
  // Visit indices in lexicographic order so that shared prefixes are adjacent.
  std::vector<std::size_t> order(indices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(indices[a].begin(), indices[a].end(),
                                        indices[b].begin(), indices[b].end());
  });

  // columns[j][n] = partial sum of the current length-j prefix over n_j <= n.
  const std::size_t depth = max_depth(indices);
  std::vector<std::vector<std::uint64_t>> columns(depth + 1);
  columns[0].assign(p, 1 % p);
  const Index* previous = nullptr;
  std::vector<std::uint64_t> out(indices.size());
  for (std::size_t position : order) {
    const Index& k = indices[position];
    std::size_t common = 0;
    if (previous != nullptr) {
      while (common < k.depth() && common < previous->depth() && k[common] == (*previous)[common]) {
        ++common;
      }
    }
    for (std::size_t j = common + 1; j <= k.depth(); ++j) {
      const auto powers = context.inverse_powers(k[j - 1]);
      const std::vector<std::uint64_t>& below = columns[j - 1];
      std::vector<std::uint64_t>& column = columns[j];
      column.assign(p, 0);
      std::uint64_t running = 0;
      for (std::uint64_t n = 1; n < p; ++n) {
        const std::uint64_t lower = star ? below[n] : below[n - 1];
        running = (running + mul_mod(lower, powers[n], p)) % p;
        column[n] = running;
      }
    }
    out[position] = columns[k.depth()][p - 1];
    previous = &k;
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> harmonic_sum_table(std::span<const Index> indices,
                                                           std::span<const std::uint64_t> primes,
                                                           bool star,
                                                           const SweepOptions& options) {
  const std::uint32_t exponent = max_entry(indices);
  const std::size_t depth = max_depth(indices);
  std::vector<std::vector<std::uint64_t>> table(primes.size());
  const auto count = static_cast<std::ptrdiff_t>(primes.size());
#pragma omp parallel for schedule(dynamic) num_threads(options.workers < 1 ? 1 : options.workers)
  for (std::ptrdiff_t a = 0; a < count; ++a) {
    const std::uint64_t p = primes[a];
    const bool shared_fits = (depth + 1 + exponent) * p <= kMaxSharedWords;
    if (options.kernel == Kernel::PrefixShared && shared_fits) {
      table[a] = harmonic_sums_shared(indices, PrimeContext(p, exponent), star);
    } else {
      table[a] = reference_row(indices, p, star);
    }
  }
  return table;
}

std::uint64_t reduce_mod_p(const Rational& q, std::uint64_t p) {
  const Integer modulus(p);
  Integer num = boost::multiprecision::numerator(q) % modulus;
  if (num < 0) num += modulus;
  const Integer den = boost::multiprecision::denominator(q) % modulus;
  if (den == 0) {
    throw BadPrimeError("coefficient " + to_string(q) + " has a denominator divisible by p=" +
                        std::to_string(p));
  }
  const auto n = num.convert_to<std::uint64_t>();
  const auto d = den.convert_to<std::uint64_t>();
  return mul_mod(n, pow_mod(d, p - 2, p), p);
}

PrimeFieldValue eval_combination_mod_p(const IndexCombination& c, std::uint64_t p, bool star) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::vector<Index> indices;
  std::vector<std::uint64_t> coefficients;
  for (const auto& [k, q] : c) {
    coefficients.push_back(reduce_mod_p(q, p));
    indices.push_back(k);
  }
  PrimeFieldValue total(p, 0);
  if (indices.empty()) return total;
  const std::uint64_t primes[] = {p};
  const auto row = harmonic_sum_table(indices, primes, star).front();
  for (std::size_t b = 0; b < indices.size(); ++b) {
    total += PrimeFieldValue(p, mul_mod(coefficients[b], row[b], p));
  }
  return total;
}

}  // namespace mzv
