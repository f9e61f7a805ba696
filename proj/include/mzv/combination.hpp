#pragma once

#include <map>
#include <string>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

// A finite Q-linear combination of indices. Zero coefficients are never
// stored and iteration follows the canonical index order, so two equal
// combinations compare and print identically however they were built.
class IndexCombination {
 public:
  using Terms = std::map<Index, Rational>;

  IndexCombination() = default;
  explicit IndexCombination(const Index& k, const Rational& coefficient = 1);

  void add(const Index& k, const Rational& coefficient);

  Rational coefficient(const Index& k) const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  IndexCombination& operator+=(const IndexCombination& other);
  IndexCombination& operator-=(const IndexCombination& other);
  IndexCombination& operator*=(const Rational& scalar);

  friend IndexCombination operator+(IndexCombination a, const IndexCombination& b) {
    return a += b;
  }
  friend IndexCombination operator-(IndexCombination a, const IndexCombination& b) {
    return a -= b;
  }
  friend IndexCombination operator-(IndexCombination a) { return a *= Rational(-1); }
  friend IndexCombination operator*(const Rational& s, IndexCombination a) {
    return a *= s;
  }

  bool operator==(const IndexCombination&) const = default;

 private:
  Terms terms_;
};

// Terms "c*(i1,...,ir)" joined by " + " in canonical order. A coefficient of
// 1 is omitted and -1 is written as a bare '-'. The empty combination is "0".
std::string to_string(const IndexCombination& c);

}  // namespace mzv
