#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mzv/combination.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

enum class LemmaId {
  Lemma1,
  Lemma2,
  KeyLemma,
  BinomialIdentity,
  MultiplicityA,
  MultiplicityB,
  PhiInvolution,
  DualInvolution,
};

std::string_view to_string(LemmaId id);

struct LemmaParams {
  std::optional<std::uint32_t> k, r, i, d, max_weight;
  std::optional<Index> target;

  bool operator==(const LemmaParams&) const = default;
};

// pass holds exactly when residual (LHS - RHS) is empty.
struct LemmaCheckResult {
  LemmaId lemma;
  LemmaParams params;
  bool pass = false;
  IndexCombination residual;
};

// F(k,r,i) minus the G1 correction equals 2^{k-r-1} (peak index). The
// closed form needs k > r; at k = r this checks F(r,r,i) = ({1}^r) instead.
LemmaCheckResult check_lemma1(std::uint32_t k, std::uint32_t r, std::uint32_t i);

// Coefficient of `a` in the G1 correction, by literal expansion, against
// 2^{a_i-1} (a_i <= k-r) or 2^{k-r-1} (a_i = k-r+1). Requires k > r and
// `a` a composition of k into r parts.
std::pair<Integer, Integer> multiplicity_oracle_A(std::uint32_t k, std::uint32_t r,
                                                  std::uint32_t i, const Index& a);
LemmaCheckResult check_multiplicity_A(std::uint32_t k, std::uint32_t r, std::uint32_t i,
                                      const Index& a);

// B + phi(B), B the G2 correction, against
// -2^{k-r-1}(m + phi(m)) + [k even]({1}^k) with m the peak index. r odd.
LemmaCheckResult check_lemma2(std::uint32_t k, std::uint32_t r, std::uint32_t i);

// Coefficient of `a` in B + phi(B) (literal phi) against 2^{k-r-1} for
// interior targets and 2^{k-r-1} + [k even] for ({1}^k). r odd, k > r.
std::pair<Integer, Integer> multiplicity_oracle_B(std::uint32_t k, std::uint32_t r,
                                                  std::uint32_t i, const Index& a);
LemmaCheckResult check_multiplicity_B(std::uint32_t k, std::uint32_t r, std::uint32_t i,
                                      const Index& a);

// Every index ({1}^{i-1}, a_1..a_d, {1}^{r-i}) with Σa = k-r+1 and
// 2 <= d <= k-r, followed by ({1}^k). Empty when k <= r.
std::vector<Index> multiplicity_B_targets(std::uint32_t k, std::uint32_t r, std::uint32_t i);

// Σ_{l=0}^{d-2} (-2)^l C(d-1, l) = (-1)^{d-1} - (-2)^{d-1}. Requires d >= 2.
LemmaCheckResult check_binomial_identity(std::uint32_t d);

// H + phi(H) against ({1}^k) for even k, 0 for odd k. Requires r odd.
LemmaCheckResult check_key_lemma(std::uint32_t k, std::uint32_t r, std::uint32_t i);

// Same comparison without the parity requirement on r (negative controls).
LemmaCheckResult key_lemma_residual(std::uint32_t k, std::uint32_t r, std::uint32_t i);

LemmaCheckResult check_phi_involution(std::uint32_t max_weight);
LemmaCheckResult check_dual_involution(std::uint32_t max_weight);

// Parameter sweeps in canonical (k, r, i[, target]) order. `workers` only
// affects scheduling, never the result.
std::vector<LemmaCheckResult> sweep_lemma1(std::uint32_t max_k, int workers = 1);
std::vector<LemmaCheckResult> sweep_lemma2(std::uint32_t max_k, int workers = 1);
std::vector<LemmaCheckResult> sweep_key_lemma(std::uint32_t max_k, int workers = 1);
std::vector<LemmaCheckResult> sweep_multiplicity_A(std::uint32_t max_k, int workers = 1);
std::vector<LemmaCheckResult> sweep_multiplicity_B(std::uint32_t max_k, int workers = 1);
std::vector<LemmaCheckResult> sweep_binomial_identity(std::uint32_t max_d);

bool all_pass(const std::vector<LemmaCheckResult>& results);

}  // namespace mzv
