#include "doctest.h"

#include "mzv/errors.hpp"
#include "mzv/prime_field.hpp"

using namespace mzv;

TEST_CASE("inverse tables") {
  CHECK(inverse_table(5) == std::vector<std::uint64_t>{0, 1, 3, 2, 4});
  CHECK(inverse_table(3) == std::vector<std::uint64_t>{0, 1, 2});
  for (std::uint64_t p : primes_in(2, 500)) {
    auto t = inverse_table(p);
    for (std::uint64_t n = 1; n < p; ++n) CHECK(n * t[n] % p == 1);
  }
  CHECK_THROWS_AS(inverse_table(9), DomainError);
}

TEST_CASE("primes") {
  CHECK(primes_in(2, 20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(primes_in(7, 101).size() == 23);
  CHECK(is_prime(4294967291ull));
  CHECK_FALSE(is_prime(1));
  CHECK(pow_mod(3, 4, 5) == 1);
}

TEST_CASE("prime field values") {
  PrimeFieldValue a(7, 3), b(7, 5);
  CHECK(a.residue() == 3);
  CHECK_THROWS_AS(PrimeFieldValue(7, 10), DomainError);
  CHECK((a + b).residue() == 1);
  CHECK((a - b).residue() == 5);
  CHECK((a * b).residue() == 1);
  CHECK((-a).residue() == 4);
  CHECK_THROWS_AS(a + PrimeFieldValue(5, 1), ModulusMismatchError);
  CHECK_THROWS_AS(PrimeFieldValue(1, 0), DomainError);
}
