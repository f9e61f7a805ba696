#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mzv/combination.hpp"
#include "mzv/index.hpp"
#include "mzv/prime_field.hpp"
#include "mzv/rational.hpp"

namespace mzv {

// Inverses and inverse-power columns n^{-e} mod p for one prime.
class PrimeContext {
 public:
  PrimeContext(std::uint64_t p, std::uint32_t max_exponent);

  std::uint64_t prime() const { return p_; }
  std::uint32_t max_exponent() const { return max_exponent_; }
  std::span<const std::uint64_t> inverses() const { return inverses_; }
  // Entry n holds n^{-e} mod p (entry 0 unused). Requires 1 <= e <= max_exponent.
  std::span<const std::uint64_t> inverse_powers(std::uint32_t e) const {
    return {powers_.data() + static_cast<std::size_t>(e - 1) * p_, p_};
  }

 private:
  std::uint64_t p_;
  std::uint32_t max_exponent_;
  std::vector<std::uint64_t> inverses_;
  std::vector<std::uint64_t> powers_;  // exponent-major
};

// Σ_{0<n_1<...<n_r<p} Π n_j^{-k_j} mod p (star: ≤ instead of <), by the
// rolling O(r)-state recurrence with n^{-k_j} from pow_mod of the inverse
// table. This is the serial reference. The empty index gives 1.
std::uint64_t harmonic_sum_reference(const Index& k, std::span<const std::uint64_t> inverses,
                                     std::uint64_t p, bool star);

PrimeFieldValue fmzv_mod_p(const Index& k, std::uint64_t p);
PrimeFieldValue fmzsv_mod_p(const Index& k, std::uint64_t p);

// Harmonic sums for many indices at one prime. Indices sharing a prefix
// share the partial-sum columns of that prefix (depth-first over the
// prefix trie), so the cost is O(p) per distinct prefix. Output order
// matches the input order.
std::vector<std::uint64_t> harmonic_sums_shared(std::span<const Index> indices,
                                                const PrimeContext& context, bool star);

enum class Kernel { Reference, PrefixShared };

struct SweepOptions {
  int workers = 1;
  Kernel kernel = Kernel::PrefixShared;
};

// table[a][b] = harmonic sum of indices[b] modulo primes[a]. Primes are
// processed independently (OpenMP when workers > 1); the table does not
// depend on the worker count or kernel.
std::vector<std::vector<std::uint64_t>> harmonic_sum_table(std::span<const Index> indices,
                                                           std::span<const std::uint64_t> primes,
                                                           bool star,
                                                           const SweepOptions& options = {});

// q mod p; throws BadPrimeError naming q when p divides its denominator.
std::uint64_t reduce_mod_p(const Rational& q, std::uint64_t p);

// Σ coeff * ζ^{(⋆)}_p(index) mod p.
PrimeFieldValue eval_combination_mod_p(const IndexCombination& c, std::uint64_t p, bool star);

}  // namespace mzv
