#pragma once

#include <cstdint>
#include <vector>

namespace mzv {

// A residue modulo a prime p < 2^32, carrying p. Arithmetic between values
// with different moduli throws ModulusMismatchError.
class PrimeFieldValue {
 public:
  PrimeFieldValue(std::uint64_t modulus, std::uint64_t residue);

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t residue() const { return residue_; }
  bool is_zero() const { return residue_ == 0; }

  PrimeFieldValue& operator+=(const PrimeFieldValue& other);
  PrimeFieldValue& operator-=(const PrimeFieldValue& other);
  PrimeFieldValue& operator*=(const PrimeFieldValue& other);

  friend PrimeFieldValue operator+(PrimeFieldValue a, const PrimeFieldValue& b) { return a += b; }
  friend PrimeFieldValue operator-(PrimeFieldValue a, const PrimeFieldValue& b) { return a -= b; }
  friend PrimeFieldValue operator*(PrimeFieldValue a, const PrimeFieldValue& b) { return a *= b; }
  PrimeFieldValue operator-() const;

  bool operator==(const PrimeFieldValue&) const = default;

 private:
  void require_same_modulus(const PrimeFieldValue& other) const;

  std::uint64_t modulus_;
  std::uint64_t residue_;
};

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a * b % p;
}
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p);

bool is_prime(std::uint64_t n);

// All primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// t[n] * n ≡ 1 (mod p) for 1 <= n < p; t[0] is unused and set to 0.
// Linear time via t[n] = -(p / n) * t[p mod n].
std::vector<std::uint64_t> inverse_table(std::uint64_t p);

}  // namespace mzv
