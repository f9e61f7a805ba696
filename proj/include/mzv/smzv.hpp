#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/float128.hpp>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

// 113-bit binary floating point (about 34 significant decimal digits).
using Real = boost::multiprecision::float128;

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(const Real& x);
  Real value() const { return sum_ + carry_; }

 private:
  Real sum_ = 0;
  Real carry_ = 0;
};

struct TruncatedValue {
  Index index;
  std::uint64_t cutoff;
  bool star;
  Real value;
};

// Σ_{0<n_1<...<n_r<=M} Π n_j^{-k_j} (≤ between the n_j when star), ascending
// n with compensated accumulation. The empty index gives 1.
TruncatedValue truncated_mzv(const Index& k, std::uint64_t cutoff, bool star);

// at_cutoff[j] = truncated value of (k_1..k_j) at M, at_half[j] the same at
// floor(M/2); both taken from a single pass. Entry 0 is 1.
struct PrefixSums {
  std::vector<Real> at_cutoff;
  std::vector<Real> at_half;
};
PrefixSums truncated_prefix_sums(const Index& k, std::uint64_t cutoff, bool star);

struct SymmetricApprox {
  Index index;
  std::uint64_t cutoff;
  bool star;  // false: the symmetric sum itself; true: summed over star_expand
  Real value;
  Real cauchy_gap;  // |value(M) - value(M/2)|
};

// Σ_{i=0}^{r} (-1)^{k_{i+1}+...+k_r} ζ_M(k_1..k_i) ζ_M(k_r..k_{i+1}).
SymmetricApprox smzv_star_approx(const Index& k, std::uint64_t cutoff);

// Σ over star_expand(k) of smzv_star_approx.
SymmetricApprox smzsv_approx(const Index& k, std::uint64_t cutoff);

// First continued-fraction convergent p/q of x with q <= max_den and
// |x - p/q| <= tol, if any.
std::optional<Rational> rational_reconstruct(const Real& x, std::uint64_t max_den, const Real& tol);

// ζ(s) for s >= 2: partial sum to `cutoff` plus an Euler-Maclaurin tail.
// Memoized per (s, cutoff).
Real zeta_reference(unsigned s, std::uint64_t cutoff);

struct SmzvReport {
  std::uint32_t k, r, i;
  bool star;
  std::uint64_t cutoff;
  Real sum;            // S
  std::string basis;   // "none", "zeta2", "zeta2^2" or "zeta2*zeta3"
  std::optional<Rational> q;
  Real residual;       // |S - q * basis|, or |S| when the basis is "none"
  bool pass;
  std::string label;   // "verified" for odd k, "consistent" for even k
};

struct SmzvOptions {
  std::uint64_t cutoff = 100000;
  std::uint64_t max_den = 64;
  double tol = 1e-3;
};

// S = Σ_{k_1+..+k_r=k} 2^{k_i} ζ*_S-approximation (or its star-expanded
// sum), tested for membership in (ζ(2)) at weight k. Supports k <= 5, r odd.
SmzvReport verify_smzv_weighted_sum(std::uint32_t k, std::uint32_t r, std::uint32_t i, bool star,
                                    const SmzvOptions& options = {});

std::string format_real(const Real& x, int digits = 20);

}  // namespace mzv
