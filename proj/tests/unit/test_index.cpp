#include "doctest.h"

#include <bit>
#include <string>

#include "mzv/combination.hpp"
#include "mzv/errors.hpp"
#include "mzv/index.hpp"

using namespace mzv;

namespace {

// Dual by spelling out the 1s: write "1" blocks separated by '+' inside a
// part and ',' between parts, swap the separators, then count runs.
Index dual_by_spelling(const Index& k) {
  std::string s;
  for (std::size_t j = 0; j < k.depth(); ++j) {
    if (j) s += ',';
    for (std::uint32_t t = 0; t < k[j]; ++t) {
      if (t) s += '+';
      s += '1';
    }
  }
  for (char& c : s) {
    if (c == '+') c = ',';
    else if (c == ',') c = '+';
  }
  std::vector<std::uint32_t> parts{0};
  for (char c : s) {
    if (c == '1') ++parts.back();
    else if (c == ',') parts.push_back(0);
  }
  return Index(parts);
}

}  // namespace

TEST_CASE("index basics") {
  Index k{1, 2, 2};
  CHECK(k.depth() == 3);
  CHECK(k.weight() == 5);
  CHECK(to_string(k) == "1,2,2");
  CHECK(parse_index("1,2,2") == k);
  CHECK(parse_index("").empty());
  CHECK_THROWS_AS(Index({1, 0}), DomainError);
  CHECK_THROWS_AS(parse_index("1,,2"), DomainError);
  CHECK_THROWS_AS(parse_index("1, 2"), DomainError);
  CHECK_THROWS_AS(parse_index("a"), DomainError);
  CHECK_THROWS_AS(parse_index("-1"), DomainError);
}

TEST_CASE("canonical order is depth then lexicographic") {
  CHECK(Index{5} < Index{1, 1});
  CHECK(Index{1, 3} < Index{2, 2});
  CHECK(Index{} < Index{1});
}

TEST_CASE("oplus") {
  CHECK(oplus(Index{2, 3}, NonNegSeq{{1, 0}}) == Index{3, 3});
  CHECK_THROWS_AS(oplus(Index{2, 3}, NonNegSeq{{1}}), DimensionError);
}

TEST_CASE("hoffman dual examples") {
  CHECK(hoffman_dual(Index{2, 1}) == Index{1, 2});
  CHECK(hoffman_dual(Index{2, 3}) == Index{1, 2, 1, 1});
  CHECK(hoffman_dual(Index{3}) == Index{1, 1, 1});
  CHECK_THROWS_AS(hoffman_dual(Index{}), DomainError);
}

TEST_CASE("hoffman dual matches the spelled-out swap and is an involution") {
  for (const Index& k : indices_up_to_weight(12)) {
    Index d = hoffman_dual(k);
    REQUIRE(d == dual_by_spelling(k));
    CHECK(d.weight() == k.weight());
    CHECK(d.depth() == k.weight() + 1 - k.depth());
    CHECK(hoffman_dual(d) == k);
  }
}

TEST_CASE("compositions") {
  auto c = compositions(4, 3);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Index{1, 1, 2});
  CHECK(c[1] == Index{1, 2, 1});
  CHECK(c[2] == Index{2, 1, 1});
  CHECK_THROWS_AS(compositions(2, 3), DomainError);
  CHECK_THROWS_AS(compositions(3, 0), DomainError);

  // C(n-1, r-1) of them, all distinct and increasing
  std::uint64_t binom[13][13] = {};
  for (int n = 0; n <= 12; ++n) {
    binom[n][0] = 1;
    for (int r = 1; r <= n; ++r) binom[n][r] = binom[n - 1][r - 1] + binom[n - 1][r];
  }
  for (std::uint32_t n = 1; n <= 12; ++n)
    for (std::uint32_t r = 1; r <= n; ++r) {
      auto all = compositions(n, r);
      CHECK(all.size() == binom[n - 1][r - 1]);
      for (std::size_t j = 1; j < all.size(); ++j) CHECK(all[j - 1] < all[j]);
    }
}

TEST_CASE("weak compositions") {
  CHECK(weak_compositions(2, 2).size() == 3);
  CHECK(weak_compositions(0, 3).size() == 1);
  CHECK(weak_compositions(3, 3).size() == 10);
  for (const auto& e : weak_compositions(4, 3)) CHECK(e.weight() == 4);
}

TEST_CASE("indices up to weight") {
  auto all = indices_up_to_weight(10);
  CHECK(all.size() == (1u << 10) - 1);
  for (std::size_t j = 1; j < all.size(); ++j) CHECK(all[j - 1] < all[j]);
}

TEST_CASE("comma mask round trip") {
  for (const Index& k : indices_up_to_weight(9)) {
    auto m = comma_mask(k);
    CHECK(std::popcount(m) == static_cast<int>(k.depth()) - 1);
    CHECK(index_from_comma_mask(m, static_cast<std::uint32_t>(k.weight())) == k);
  }
}

TEST_CASE("combination text and arithmetic") {
  IndexCombination c;
  CHECK(to_string(c) == "0");
  c.add(Index{2, 1}, 2);
  c.add(Index{1, 2}, 1);
  CHECK(to_string(c) == "(1,2) + 2*(2,1)");
  c.add(Index{2, 1}, -2);
  CHECK(c.size() == 1);
  CHECK(c.coefficient(Index{2, 1}) == 0);
  IndexCombination d = c - c;
  CHECK(d.empty());
  IndexCombination e = Rational(-1) * c;
  CHECK(to_string(e) == "-(1,2)");
  e *= Rational(1, 3);
  CHECK(to_string(e) == "-1/3*(1,2)");
  e *= 0;
  CHECK(e.empty());
}

TEST_CASE("rational text") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK(power_of_two(-2) == Rational(1, 4));
  CHECK(power_of_two(5) == 32);
}
