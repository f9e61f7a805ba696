#include "mzv/fmzv_verify.hpp"

#include <algorithm>
#include <numeric>

#include "mzv/errors.hpp"
#include "mzv/operators.hpp"

namespace mzv {

namespace {

constexpr std::size_t kMaxSymmetricDepth = 8;

// p - 1 | w makes Σ n^{-w} ≡ -1, so p = w + 1 is a genuine exception.
std::uint64_t exception_bound(std::uint64_t weight) { return weight + 1; }

PrimeSweepReport make_report(std::string identity, SweepParams params, PrimeRange range,
                             std::uint64_t enforced_above, const std::vector<std::uint64_t>& primes,
                             const std::vector<std::uint64_t>& residues) {
  PrimeSweepReport report{std::move(identity), std::move(params), range, enforced_above, {}};
  for (std::size_t a = 0; a < primes.size(); ++a) {
    report.results.push_back({primes[a], residues[a], residues[a] == 0});
  }
  return report;
}

std::vector<std::uint64_t> combination_residues(const IndexCombination& c,
                                                const std::vector<std::uint64_t>& primes,
                                                bool star, const SweepOptions& options) {
  std::vector<Index> indices;
  std::vector<Rational> coefficients;
  for (const auto& [k, q] : c) {
    indices.push_back(k);
    coefficients.push_back(q);
  }
  const auto table = harmonic_sum_table(indices, primes, star, options);
  std::vector<std::uint64_t> residues(primes.size(), 0);
  for (std::size_t a = 0; a < primes.size(); ++a) {
    const std::uint64_t p = primes[a];
    std::uint64_t total = 0;
    for (std::size_t b = 0; b < indices.size(); ++b) {
      total = (total + mul_mod(reduce_mod_p(coefficients[b], p), table[a][b], p)) % p;
    }
    residues[a] = total;
  }
  return residues;
}

PrimeSweepReport sweep_combination(std::string identity, SweepParams params,
                                   const IndexCombination& c, PrimeRange range, bool star,
                                   std::uint64_t enforced_above, const SweepOptions& options) {
  const auto primes = primes_in(range.lo, range.hi);
  return make_report(std::move(identity), std::move(params), range, enforced_above, primes,
                     combination_residues(c, primes, star, options));
}

void require_nonempty(const Index& k, const char* what) {
  if (k.empty()) throw DomainError(std::string(what) + ": empty index");
}

}  // namespace

std::optional<std::uint64_t> PrimeSweepReport::first_failure() const {
  for (const PrimeResult& result : results) {
    if (!result.pass && result.p > enforced_above) return result.p;
  }
  return std::nullopt;
}

PrimeSweepReport verify_phi_duality(const Index& k, PrimeRange range, const SweepOptions& options) {
  require_nonempty(k, "verify_phi_duality");
  SweepParams params;
  params.index = k;
  params.star = false;
  return sweep_combination("phi", std::move(params), IndexCombination(k) - phi(k), range, false,
                           exception_bound(k.weight()), options);
}

PrimeSweepReport verify_oyama(const Index& k, std::uint32_t l, PrimeRange range,
                              const SweepOptions& options) {
  require_nonempty(k, "verify_oyama");
  SweepParams params;
  params.index = k;
  params.l = l;
  params.star = false;
  return sweep_combination("oyama", std::move(params), build_G(k, l), range, false,
                           exception_bound(k.weight() + l), options);
}

PrimeSweepReport verify_antipode(const Index& k, PrimeRange range, const SweepOptions& options) {
  require_nonempty(k, "verify_antipode");
  const std::size_t r = k.depth();
  // prefixes[l] = (k_1..k_l), reversed_suffixes[l] = (k_r..k_{l+1}).
  std::vector<Index> prefixes, reversed_suffixes;
  for (std::size_t l = 0; l <= r; ++l) {
    prefixes.emplace_back(std::vector<Index::value_type>(k.begin(), k.begin() + l));
    reversed_suffixes.push_back(
        reverse(Index(std::vector<Index::value_type>(k.begin() + l, k.end()))));
  }
  const auto primes = primes_in(range.lo, range.hi);
  const auto star_table = harmonic_sum_table(prefixes, primes, true, options);
  const auto plain_table = harmonic_sum_table(reversed_suffixes, primes, false, options);
  std::vector<std::uint64_t> residues(primes.size());
  for (std::size_t a = 0; a < primes.size(); ++a) {
    const std::uint64_t p = primes[a];
    std::uint64_t total = 0;
    for (std::size_t l = 0; l <= r; ++l) {
      const std::uint64_t term = mul_mod(star_table[a][l], plain_table[a][l], p);
      total = (l % 2 == 0) ? (total + term) % p : (total + p - term) % p;
    }
    residues[a] = total;
  }
  SweepParams params;
  params.index = k;
  return make_report("antipode", std::move(params), range, exception_bound(k.weight()), primes,
                     residues);
}

IndexCombination symmetric_sum_combination(const Index& k) {
  if (k.depth() > kMaxSymmetricDepth) {
    throw DomainError("symmetric sum: depth " + std::to_string(k.depth()) + " exceeds " +
                      std::to_string(kMaxSymmetricDepth));
  }
  std::vector<std::size_t> positions(k.depth());
  std::iota(positions.begin(), positions.end(), 0);
  IndexCombination out;
  do {
    std::vector<Index::value_type> parts;
    for (std::size_t pos : positions) parts.push_back(k[pos]);
    out.add(Index(std::move(parts)), 1);
  } while (std::next_permutation(positions.begin(), positions.end()));
  return out;
}

PrimeSweepReport verify_symmetric_sum(const Index& k, PrimeRange range, bool star,
                                      const SweepOptions& options) {
  require_nonempty(k, "verify_symmetric_sum");
  SweepParams params;
  params.index = k;
  params.star = star;
  return sweep_combination("symsum", std::move(params), symmetric_sum_combination(k), range, star,
                           exception_bound(k.weight()), options);
}

IndexCombination weighted_sum_combination(std::uint32_t k, std::uint32_t r, std::uint32_t i) {
  require_kri(k, r, i);
  IndexCombination out;
  for (const Index& composition : compositions(k, r)) {
    out.add(composition, power_of_two(static_cast<int>(composition[i - 1])));
  }
  return out;
}

PrimeSweepReport verify_weighted_sum(std::uint32_t k, std::uint32_t r, std::uint32_t i,
                                     PrimeRange range, bool star, const SweepOptions& options) {
  require_kri(k, r, i);
  if (r % 2 == 0) throw DomainError("weighted sum formula: r must be odd, got r=" + std::to_string(r));
  SweepParams params;
  params.k = k;
  params.r = r;
  params.i = i;
  params.star = star;
  return sweep_combination("fmzv-wsf", std::move(params), weighted_sum_combination(k, r, i), range,
                           star, exception_bound(k), options);
}

}  // namespace mzv
