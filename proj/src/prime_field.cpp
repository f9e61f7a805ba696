#include "mzv/prime_field.hpp"

#include <string>

#include "mzv/errors.hpp"

namespace mzv {

namespace {
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;
}

PrimeFieldValue::PrimeFieldValue(std::uint64_t modulus, std::uint64_t residue)
    : modulus_(modulus), residue_(residue) {
  if (modulus < 2 || modulus >= kMaxModulus) {
    throw DomainError("modulus " + std::to_string(modulus) + " outside [2, 2^32)");
  }
  if (residue >= modulus) {
    throw DomainError("residue " + std::to_string(residue) + " not reduced mod " +
                      std::to_string(modulus));
  }
}

void PrimeFieldValue::require_same_modulus(const PrimeFieldValue& other) const {
  if (modulus_ != other.modulus_) {
    throw ModulusMismatchError("mixing residues mod " + std::to_string(modulus_) +
                               " and mod " + std::to_string(other.modulus_));
  }
}

PrimeFieldValue& PrimeFieldValue::operator+=(const PrimeFieldValue& other) {
  require_same_modulus(other);
  residue_ = (residue_ + other.residue_) % modulus_;
  return *this;
}

PrimeFieldValue& PrimeFieldValue::operator-=(const PrimeFieldValue& other) {
  require_same_modulus(other);
  residue_ = (residue_ + modulus_ - other.residue_) % modulus_;
  return *this;
}

PrimeFieldValue& PrimeFieldValue::operator*=(const PrimeFieldValue& other) {
  require_same_modulus(other);
  residue_ = mul_mod(residue_, other.residue_, modulus_);
  return *this;
}

PrimeFieldValue PrimeFieldValue::operator-() const {
  return PrimeFieldValue(modulus_, residue_ == 0 ? 0 : modulus_ - residue_);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t n = 2; n <= hi; ++n) {
    if (composite[n]) continue;
    if (n >= lo) out.push_back(n);
    for (std::uint64_t m = n * n; m <= hi; m += n) composite[m] = true;
  }
  return out;
}

std::vector<std::uint64_t> inverse_table(std::uint64_t p) {
  if (!is_prime(p) || p >= kMaxModulus) {
    throw DomainError("inverse_table: " + std::to_string(p) + " is not a prime below 2^32");
  }
  std::vector<std::uint64_t> t(p, 0);
  if (p > 1) t[1] = 1;
  for (std::uint64_t n = 2; n < p; ++n) {
    t[n] = (p - mul_mod(p / n, t[p % n], p)) % p;
  }
  return t;
}

}  // namespace mzv
