#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <tuple>

#include "mzv/index.hpp"
#include "mzv/prime_field.hpp"

namespace mzv {

// Append-only JSON-lines store of harmonic sums mod p, one record
// {"p":..,"index":"k1,..,kr","star":..,"residue":..} per line, in
// <directory>/fmzv-values.jsonl.
class ValueCache {
 public:
  static constexpr const char* kEnvironmentVariable = "MZV_CACHE_DIR";
  static constexpr const char* kFileName = "fmzv-values.jsonl";

  explicit ValueCache(std::filesystem::path directory);

  std::optional<std::uint64_t> lookup(std::uint64_t p, const Index& k, bool star) const;
  // No-op when the key is already present.
  void store(std::uint64_t p, const Index& k, bool star, std::uint64_t residue);

  const std::filesystem::path& file() const { return file_; }
  std::size_t size() const { return entries_.size(); }

 private:
  using Key = std::tuple<std::uint64_t, Index, bool>;
  std::filesystem::path file_;
  std::map<Key, std::uint64_t> entries_;
};

// The explicit directory if given, else $MZV_CACHE_DIR if set, else none.
std::optional<std::filesystem::path> resolve_cache_directory(
    const std::optional<std::filesystem::path>& explicit_directory);

// fmzv_mod_p / fmzsv_mod_p consulting and updating `cache` when non-null.
PrimeFieldValue cached_harmonic_sum(ValueCache* cache, const Index& k, std::uint64_t p, bool star);

}  // namespace mzv
