#include "doctest.h"

#include "mzv/errors.hpp"
#include "mzv/report_json.hpp"
#include "mzv/smzv.hpp"

using namespace mzv;

namespace {
double d(const Real& x) { return static_cast<double>(x); }
}  // namespace

TEST_CASE("truncated values") {
  CHECK(d(truncated_mzv(Index{2}, 100000, false).value) == doctest::Approx(1.6449340668).epsilon(2e-5));
  CHECK(d(truncated_mzv(Index{3}, 100000, false).value) == doctest::Approx(1.2020569031).epsilon(1e-9));
  CHECK(d(truncated_mzv(Index{1, 2}, 100000, false).value) == doctest::Approx(1.2020569031).epsilon(1e-3));
  CHECK(d(truncated_mzv(Index{}, 10, false).value) == 1.0);
  // (H_3^2 ± H_3^(2)) / 2
  CHECK(d(truncated_mzv(Index{1, 1}, 3, true).value) == doctest::Approx(85.0 / 36));
  CHECK(d(truncated_mzv(Index{1, 1}, 3, false).value) == doctest::Approx(1.0));

  auto ps = truncated_prefix_sums(Index{2, 1}, 1000, false);
  REQUIRE(ps.at_cutoff.size() == 3);
  CHECK(ps.at_cutoff[0] == 1);
  CHECK(ps.at_cutoff[2] == truncated_mzv(Index{2, 1}, 1000, false).value);
  CHECK(ps.at_half[1] == truncated_mzv(Index{2}, 500, false).value);
}

TEST_CASE("reference constants") {
  CHECK(d(zeta_reference(2, 1000)) == doctest::Approx(1.6449340668482264).epsilon(1e-15));
  CHECK(d(zeta_reference(3, 1000)) == doctest::Approx(1.2020569031595943).epsilon(1e-15));
  CHECK(d(zeta_reference(4, 1000)) == doctest::Approx(1.0823232337111382).epsilon(1e-15));
}

TEST_CASE("rational reconstruction") {
  auto q = rational_reconstruct(Real(-6) + Real(1e-4), 64, Real(1e-3));
  REQUIRE(q.has_value());
  CHECK(*q == -6);
  q = rational_reconstruct(Real(64) / 5 + Real(1e-6), 64, Real(1e-3));
  REQUIRE(q.has_value());
  CHECK(*q == Rational(64, 5));
  CHECK(rational_reconstruct(Real(1) / 3, 64, Real(1e-12)) == Rational(1, 3));
  // pi needs 355/113 for this tolerance
  CHECK_FALSE(rational_reconstruct(Real("3.14159265358979"), 64, Real(1e-6)).has_value());
}

TEST_CASE("symmetric approximations") {
  for (std::uint64_t m : {10, 1000, 100000}) {
    CHECK(smzv_star_approx(Index{1}, m).value == 0);
    CHECK(std::abs(d(smzv_star_approx(Index{1, 1, 1}, m).value)) < 1e-12 * std::log(double(m)) * 10);
  }
  auto a = smzv_star_approx(Index{1, 2}, 100000);
  CHECK(d(a.value) == doctest::Approx(3 * 1.2020569031595943).epsilon(1e-3));
  auto coarse = smzv_star_approx(Index{1, 2}, 10000);
  CHECK(d(coarse.cauchy_gap) >= 1.5 * d(a.cauchy_gap));

  // star version is the sum over contractions: (1,2) and (3)
  auto s = smzsv_approx(Index{1, 2}, 1000);
  auto parts = smzv_star_approx(Index{1, 2}, 1000).value + smzv_star_approx(Index{3}, 1000).value;
  CHECK(d(s.value) == doctest::Approx(d(parts)).epsilon(1e-20));
}

TEST_CASE("weighted sum in the symmetric setting") {
  for (std::uint64_t m : {1000, 100000}) {
    auto r = verify_smzv_weighted_sum(3, 3, 1, false, {m, 64, 1e-3});
    CHECK(r.pass);
    CHECK(r.basis == "none");
    CHECK(std::abs(d(r.sum)) <= 1e-12 * std::max(1.0, std::log(double(m))));
  }
  SmzvOptions near{100000, 64, 1e-3}, far{200000, 64, 1e-3};
  for (bool star : {false, true})
    for (std::uint32_t i = 1; i <= 3; ++i) {
      auto a = verify_smzv_weighted_sum(5, 3, i, star, near);
      auto b = verify_smzv_weighted_sum(5, 3, i, star, far);
      CHECK(a.pass);
      CHECK(a.basis == "zeta2*zeta3");
      CHECK(a.label == "verified");
      REQUIRE(a.q.has_value());
      CHECK(a.q == b.q);
    }
  CHECK_THROWS_AS(verify_smzv_weighted_sum(5, 2, 1, false), DomainError);
  CHECK_THROWS_AS(verify_smzv_weighted_sum(7, 3, 1, false), DomainError);
  auto even = verify_smzv_weighted_sum(4, 1, 1, false, {10000, 64, 1e-3});
  CHECK(even.label == "consistent");
  CHECK(to_json(even)["identity"] == "smzv-wsf");
}
