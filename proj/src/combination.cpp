#include "mzv/combination.hpp"

namespace mzv {

IndexCombination::IndexCombination(const Index& k, const Rational& coefficient) {
  add(k, coefficient);
}

void IndexCombination::add(const Index& k, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

Rational IndexCombination::coefficient(const Index& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

IndexCombination& IndexCombination::operator+=(const IndexCombination& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

IndexCombination& IndexCombination::operator-=(const IndexCombination& other) {
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

IndexCombination& IndexCombination::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

std::string to_string(const IndexCombination& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, coefficient] : c) {
    if (!first) out += " + ";
    first = false;
    if (coefficient == -1) {
      out += "-";
    } else if (coefficient != 1) {
      out += to_string(coefficient) + "*";
    }
    out += "(" + to_string(k) + ")";
  }
  return out;
}

}  // namespace mzv
