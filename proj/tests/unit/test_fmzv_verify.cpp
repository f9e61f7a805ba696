#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "mzv/errors.hpp"
#include "mzv/fmzv_verify.hpp"
#include "mzv/report_json.hpp"
#include "mzv/value_cache.hpp"

using namespace mzv;

TEST_CASE("phi duality") {
  CHECK(verify_phi_duality(Index{2}, {3, 50}).all_pass());
  CHECK(verify_phi_duality(Index{1}, {3, 50}).all_pass());
  CHECK(verify_phi_duality(Index{1, 2}, {3, 50}).all_pass());
  auto r = verify_phi_duality(Index{2}, {5, 5});
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].residue == 0);
}

TEST_CASE("oyama") {
  auto r = verify_oyama(Index{2}, 1, {5, 5});
  CHECK(r.results.at(0).pass);
  CHECK(verify_oyama(Index{1, 2}, 2, {5, 100}).all_pass());
}

TEST_CASE("antipode") {
  CHECK(verify_antipode(Index{1, 2}, {5, 5}).results.at(0).pass);
  CHECK(verify_antipode(Index{2, 2, 1}, {5, 100}).all_pass());
}

TEST_CASE("symmetric sums") {
  CHECK(verify_symmetric_sum(Index{1, 2}, {5, 5}, false).results.at(0).pass);
  CHECK(verify_symmetric_sum(Index{1, 1, 2}, {7, 100}, true).all_pass());
  for (std::uint32_t k = 1; k <= 6; ++k)
    CHECK(verify_symmetric_sum(Index{k}, {k + 2, 100}, false).all_pass());
  CHECK(symmetric_sum_combination(Index{1, 1, 2}).coefficient(Index{1, 1, 2}) == 2);
  CHECK_THROWS_AS(verify_symmetric_sum(Index{1, 1, 1, 1, 1, 1, 1, 1, 1}, {5, 7}, false),
                  DomainError);
}

TEST_CASE("weighted sum") {
  CHECK(verify_weighted_sum(3, 3, 1, {5, 5}, false).results.at(0).pass);
  CHECK(verify_weighted_sum(4, 3, 1, {5, 200}, false).all_pass());
  CHECK(verify_weighted_sum(6, 3, 2, {7, 200}, true).all_pass());
  CHECK(weighted_sum_combination(4, 3, 1).coefficient(Index{2, 1, 1}) == 4);
  CHECK_THROWS_AS(verify_weighted_sum(8, 2, 1, {2, 200}, false), DomainError);
}

TEST_CASE("small primes are recorded but not enforced") {
  auto r = verify_weighted_sum(2, 1, 1, {2, 50}, false);
  CHECK(r.enforced_above == 3);
  CHECK_FALSE(r.results.at(1).pass);  // p = 3
  CHECK(r.all_pass());
}

TEST_CASE("reports do not depend on the worker count or kernel") {
  auto run = [](int workers, Kernel kernel) {
    SweepOptions o{workers, kernel};
    Json all = Json::array();
    all.push_back(to_json(verify_weighted_sum(7, 3, 2, {2, 200}, true, o)));
    all.push_back(to_json(verify_oyama(Index{1, 2, 1}, 2, {2, 200}, o)));
    all.push_back(to_json(verify_symmetric_sum(Index{1, 2, 3}, {2, 200}, false, o)));
    return all.dump();
  };
  const auto one = run(1, Kernel::PrefixShared);
  CHECK(run(4, Kernel::PrefixShared) == one);
  CHECK(run(8, Kernel::PrefixShared) == one);
  CHECK(run(8, Kernel::Reference) == one);
}

TEST_CASE("value cache") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "mzv-cache-test";
  fs::remove_all(dir);
  {
    ValueCache cold(dir);
    CHECK(cold.size() == 0);
    CHECK(cached_harmonic_sum(&cold, Index{1, 2}, 5, false).residue() == 1);
    CHECK(cached_harmonic_sum(&cold, Index{2, 1}, 5, false).residue() == 4);
    CHECK(cached_harmonic_sum(&cold, Index{1, 2}, 5, false).residue() == 1);
    CHECK(cold.size() == 2);
  }
  ValueCache warm(dir);
  CHECK(warm.size() == 2);
  CHECK(warm.lookup(5, Index{2, 1}, false) == 4u);
  CHECK_FALSE(warm.lookup(5, Index{2, 1}, true).has_value());
  for (const Index& k : indices_up_to_weight(5))
    for (std::uint64_t p : {7, 11, 13})
      for (bool star : {false, true})
        CHECK(cached_harmonic_sum(&warm, k, p, star) == (star ? fmzsv_mod_p(k, p) : fmzv_mod_p(k, p)));
  ValueCache reread(dir);
  CHECK(reread.size() == warm.size());
  CHECK(cached_harmonic_sum(nullptr, Index{1}, 5, false).residue() == 0);
  fs::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
  CHECK(resolve_cache_directory(std::filesystem::path("x")) == std::filesystem::path("x"));
}
