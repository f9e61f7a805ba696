#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mzv/harmonic_sums.hpp"
#include "mzv/index.hpp"

namespace mzv {

struct PrimeRange {
  std::uint64_t lo = 2;
  std::uint64_t hi = 200;
};

struct SweepParams {
  std::optional<std::uint32_t> k, r, i, l;
  std::optional<bool> star;
  std::optional<Index> index;
};

struct PrimeResult {
  std::uint64_t p;
  std::uint64_t residue;
  bool pass;  // residue == 0
};

// Results for every prime in the range, ascending. The identities hold in the
// ring of residues modulo all but finitely many primes; primes
// p <= enforced_above (= weight + 1) are recorded but never fail the summary.
struct PrimeSweepReport {
  std::string identity;
  SweepParams params;
  PrimeRange primes;
  std::uint64_t enforced_above = 0;
  std::vector<PrimeResult> results;

  std::optional<std::uint64_t> first_failure() const;
  bool all_pass() const { return !first_failure().has_value(); }
};

// ζ(k) - ζ(phi(k)) for every prime in range.
PrimeSweepReport verify_phi_duality(const Index& k, PrimeRange range,
                                    const SweepOptions& options = {});

// ζ(G(k, l)).
PrimeSweepReport verify_oyama(const Index& k, std::uint32_t l, PrimeRange range,
                              const SweepOptions& options = {});

// Σ_{l=0}^{r} (-1)^l ζ⋆(k_1..k_l) ζ(k_r..k_{l+1}).
PrimeSweepReport verify_antipode(const Index& k, PrimeRange range,
                                 const SweepOptions& options = {});

// Σ over all r! orderings of the entries of k (with multiplicity). Depth <= 8.
PrimeSweepReport verify_symmetric_sum(const Index& k, PrimeRange range, bool star,
                                      const SweepOptions& options = {});

// Σ_{k_1+..+k_r=k} 2^{k_i} ζ^{(⋆)}(k_1..k_r). Requires 1 <= i <= r <= k, r odd.
PrimeSweepReport verify_weighted_sum(std::uint32_t k, std::uint32_t r, std::uint32_t i,
                                     PrimeRange range, bool star,
                                     const SweepOptions& options = {});

// The linear combination behind verify_weighted_sum.
IndexCombination weighted_sum_combination(std::uint32_t k, std::uint32_t r, std::uint32_t i);

// The permutation sum behind verify_symmetric_sum.
IndexCombination symmetric_sum_combination(const Index& k);

}  // namespace mzv
