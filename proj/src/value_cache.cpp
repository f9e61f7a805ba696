#include "mzv/value_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "mzv/harmonic_sums.hpp"

namespace mzv {

ValueCache::ValueCache(std::filesystem::path directory) : file_(directory / kFileName) {
  std::filesystem::create_directories(directory);
  std::ifstream in(file_);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      const auto record = nlohmann::json::parse(line);
      entries_[{record.at("p").get<std::uint64_t>(),
                parse_index(record.at("index").get<std::string>()),
                record.at("star").get<bool>()}] = record.at("residue").get<std::uint64_t>();
    } catch (const std::exception& e) {
      throw std::runtime_error(file_.string() + ":" + std::to_string(line_number) +
                               ": bad cache record: " + e.what());
    }
  }
}

std::optional<std::uint64_t> ValueCache::lookup(std::uint64_t p, const Index& k, bool star) const {
  auto it = entries_.find({p, k, star});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ValueCache::store(std::uint64_t p, const Index& k, bool star, std::uint64_t residue) {
  auto [it, inserted] = entries_.try_emplace({p, k, star}, residue);
  if (!inserted) return;
  nlohmann::ordered_json record;
  record["p"] = p;
  record["index"] = to_string(k);
  record["star"] = star;
  record["residue"] = residue;
  std::ofstream out(file_, std::ios::app);
  out << record.dump() << '\n';
  if (!out) throw std::runtime_error("cannot append to " + file_.string());
}

std::optional<std::filesystem::path> resolve_cache_directory(
    const std::optional<std::filesystem::path>& explicit_directory) {
  if (explicit_directory) return explicit_directory;
  if (const char* env = std::getenv(ValueCache::kEnvironmentVariable); env && *env) {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

PrimeFieldValue cached_harmonic_sum(ValueCache* cache, const Index& k, std::uint64_t p, bool star) {
  if (cache != nullptr) {
    if (auto hit = cache->lookup(p, k, star)) return PrimeFieldValue(p, *hit);
  }
  const PrimeFieldValue value = star ? fmzsv_mod_p(k, p) : fmzv_mod_p(k, p);
  if (cache != nullptr) cache->store(p, k, star, value.residue());
  return value;
}

}  // namespace mzv
