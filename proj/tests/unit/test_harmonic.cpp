#include "doctest.h"

#include <functional>

#include "mzv/errors.hpp"
#include "mzv/harmonic_sums.hpp"
#include "mzv/operators.hpp"
#include "mzv/prime_field.hpp"

using namespace mzv;

namespace {

// Enumerate every tuple 0 < n_1 < ... < n_r < p (or <=) and add up the
// products of n_j^{-k_j}, with inverses found by search.
std::uint64_t brute_force(const Index& k, std::uint64_t p, bool star) {
  std::vector<std::uint64_t> inv(p, 0);
  for (std::uint64_t n = 1; n < p; ++n)
    for (std::uint64_t m = 1; m < p; ++m)
      if (n * m % p == 1) inv[n] = m;
  std::uint64_t total = 0;
  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> walk =
      [&](std::size_t j, std::uint64_t lo, std::uint64_t product) {
        if (j == k.depth()) {
          total = (total + product) % p;
          return;
        }
        for (std::uint64_t n = lo; n < p; ++n) {
          std::uint64_t term = product;
          for (std::uint32_t e = 0; e < k[j]; ++e) term = term * inv[n] % p;
          walk(j + 1, star ? n : n + 1, term);
        }
      };
  walk(0, 1, 1);
  return total;
}

}  // namespace

TEST_CASE("spot values at p = 5") {
  CHECK(fmzv_mod_p(Index{1}, 5).residue() == 0);
  CHECK(fmzv_mod_p(Index{1, 1, 1}, 5).residue() == 0);
  CHECK(fmzv_mod_p(Index{1, 2}, 5).residue() == 1);
  CHECK(fmzv_mod_p(Index{2, 1}, 5).residue() == 4);
  CHECK(fmzv_mod_p(Index{3}, 5).residue() == 0);
  CHECK(fmzsv_mod_p(Index{1, 2}, 5).residue() == 1);
  auto oyama = fmzv_mod_p(Index{3}, 5) - fmzv_mod_p(Index{1, 2}, 5) - fmzv_mod_p(Index{2, 1}, 5);
  CHECK(oyama.is_zero());
  CHECK(fmzsv_mod_p(Index{1, 1}, 7) == fmzv_mod_p(Index{1, 1}, 7) + fmzv_mod_p(Index{2}, 7));
  CHECK(fmzv_mod_p(Index{}, 7).residue() == 1);
}

TEST_CASE("dynamic program matches tuple enumeration") {
  const auto indices = indices_up_to_weight(5);
  for (std::uint64_t p : primes_in(2, 31)) {
    const PrimeContext ctx(p, 5);
    for (bool star : {false, true}) {
      const auto shared = harmonic_sums_shared(indices, ctx, star);
      for (std::size_t j = 0; j < indices.size(); ++j) {
        const auto expected = brute_force(indices[j], p, star);
        CHECK(harmonic_sum_reference(indices[j], ctx.inverses(), p, star) == expected);
        CHECK(shared[j] == expected);
      }
    }
  }
}

TEST_CASE("star values are sums over contractions") {
  const auto indices = indices_up_to_weight(7);
  for (std::uint64_t p : primes_in(11, 101)) {
    for (const Index& k : indices) {
      CHECK(fmzsv_mod_p(k, p) == eval_combination_mod_p(star_expand(k), p, false));
    }
  }
}

TEST_CASE("kernels and worker counts agree") {
  const auto indices = indices_up_to_weight(8);
  const auto primes = primes_in(2, 200);
  for (bool star : {false, true}) {
    const auto ref = harmonic_sum_table(indices, primes, star, {1, Kernel::Reference});
    CHECK(harmonic_sum_table(indices, primes, star, {1, Kernel::PrefixShared}) == ref);
    CHECK(harmonic_sum_table(indices, primes, star, {4, Kernel::PrefixShared}) == ref);
    CHECK(harmonic_sum_table(indices, primes, star, {8, Kernel::Reference}) == ref);
  }
}

TEST_CASE("shared kernel keeps input order and duplicates") {
  std::vector<Index> indices{{2, 1}, {1}, {2, 1}, {1, 2}, {}};
  const PrimeContext ctx(5, 2);
  CHECK(harmonic_sums_shared(indices, ctx, false) == std::vector<std::uint64_t>{4, 0, 4, 1, 1});
}

TEST_CASE("reduction of rationals") {
  CHECK(reduce_mod_p(Rational(1, 2), 5) == 3);
  CHECK(reduce_mod_p(Rational(-1, 3), 7) == 2);
  CHECK_THROWS_AS(reduce_mod_p(Rational(1, 10), 5), BadPrimeError);
}
