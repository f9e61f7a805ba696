#pragma once

#include <cstdint>

#include "mzv/combination.hpp"
#include "mzv/index.hpp"

namespace mzv {

// (-1)^dep(k) times the sum over every way of writing each block k_j as
// 1□1□...□1 with □ a comma or a plus. Requires k nonempty.
IndexCombination phi(const Index& k);

// Linear extension of phi. Chooses, per weight, between literal term-by-term
// expansion and a superset-sum transform over comma masks; both are exact.
IndexCombination phi(const IndexCombination& c);

// Linear extension of phi by literal term-by-term expansion only.
IndexCombination phi_literal(const IndexCombination& c);

// Sum of all contractions k_1□...□k_r, □ ∈ {',', '+'}, each with coefficient 1.
IndexCombination star_expand(const Index& k);

// Σ_{k_1+...+k_r = k} 2^{k_i - 1} (k_1, ..., k_r). Requires 1 <= i <= r <= k.
IndexCombination build_F(std::uint32_t k, std::uint32_t r, std::uint32_t i);

// Σ_{wt(e)=l, dep(e)=dep(k)} (k ⊕ e), multiplicities accumulated.
IndexCombination build_G1(const Index& k, std::uint32_t l);
// Σ_{wt(e)=l, dep(e)=dep(k^∨)} (k^∨ ⊕ e)^∨.
IndexCombination build_G2(const Index& k, std::uint32_t l);
IndexCombination build_G(const Index& k, std::uint32_t l);

enum class GOperator { G1, G2, G };

// Σ_{l=1}^{k-r-1} 2^{l-1} X(({1}^{i-1}, l+1, {1}^{r-i}), k-r-l) + X(({1}^r), k-r)
// for X one of the G-operators. Requires 1 <= i <= r <= k.
IndexCombination g_correction(std::uint32_t k, std::uint32_t r, std::uint32_t i,
                              GOperator op);

// F(k,r,i) - g_correction(k, r, i, G).
IndexCombination build_H(std::uint32_t k, std::uint32_t r, std::uint32_t i);

// ({1}^{i-1}, k-r+1, {1}^{r-i}), the one index of F(k,r,i) that the
// G1 correction does not cancel completely.
Index peak_index(std::uint32_t k, std::uint32_t r, std::uint32_t i);

// Throws DomainError unless 1 <= i <= r <= k.
void require_kri(std::uint32_t k, std::uint32_t r, std::uint32_t i);

}  // namespace mzv
