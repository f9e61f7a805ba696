#include "mzv/index.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mzv/errors.hpp"

namespace mzv {

Index::Index(std::vector<value_type> parts) : parts_(std::move(parts)) {
  for (value_type v : parts_) {
    if (v == 0) throw DomainError("index entries must be positive");
  }
}

Index::Index(std::initializer_list<value_type> parts)
    : Index(std::vector<value_type>(parts)) {}

std::uint64_t Index::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::strong_ordering Index::operator<=>(const Index& other) const {
  if (auto c = parts_.size() <=> other.parts_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end());
}

std::uint64_t NonNegSeq::weight() const {
  return std::accumulate(entries.begin(), entries.end(), std::uint64_t{0});
}

Index ones(std::size_t m) { return Index(std::vector<Index::value_type>(m, 1)); }

Index concat(std::initializer_list<Index> pieces) {
  std::vector<Index::value_type> out;
  for (const Index& piece : pieces) out.insert(out.end(), piece.begin(), piece.end());
  return Index(std::move(out));
}

Index oplus(const Index& k, const NonNegSeq& e) {
  if (k.depth() != e.length()) {
    throw DimensionError("oplus: depth " + std::to_string(k.depth()) +
                         " does not match length " + std::to_string(e.length()));
  }
  std::vector<Index::value_type> out(k.begin(), k.end());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += e.entries[j];
  return Index(std::move(out));
}

Index reverse(const Index& k) {
  return Index(std::vector<Index::value_type>(k.parts().rbegin(), k.parts().rend()));
}

Index hoffman_dual(const Index& k) {
  if (k.empty()) throw DomainError("hoffman_dual: empty index");
  // Separators between consecutive 1s of the all-ones spelling.
  std::string separators;
  for (std::size_t j = 0; j < k.depth(); ++j) {
    if (j > 0) separators.push_back(',');
    separators.append(k[j] - 1, '+');
  }
  for (char& c : separators) c = (c == ',') ? '+' : ',';

  std::vector<Index::value_type> out;
  Index::value_type block = 1;
  for (char c : separators) {
    if (c == '+') {
      ++block;
    } else {
      out.push_back(block);
      block = 1;
    }
  }
  out.push_back(block);
  return Index(std::move(out));
}

namespace {

void compositions_into(std::uint32_t remaining, std::uint32_t parts_left,
                       std::vector<Index::value_type>& prefix,
                       std::vector<Index>& out) {
  if (parts_left == 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::uint32_t first = 1; first + (parts_left - 1) <= remaining; ++first) {
    prefix.push_back(first);
    compositions_into(remaining - first, parts_left - 1, prefix, out);
    prefix.pop_back();
  }
}

void weak_compositions_into(std::uint32_t remaining, std::size_t slots_left,
                            std::vector<std::uint32_t>& prefix,
                            std::vector<NonNegSeq>& out) {
  if (slots_left == 0) {
    if (remaining == 0) out.push_back(NonNegSeq{prefix});
    return;
  }
  if (slots_left == 1) {
    prefix.push_back(remaining);
    out.push_back(NonNegSeq{prefix});
    prefix.pop_back();
    return;
  }
  for (std::uint32_t first = 0; first <= remaining; ++first) {
    prefix.push_back(first);
    weak_compositions_into(remaining - first, slots_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Index> compositions(std::uint32_t total, std::uint32_t parts) {
  if (parts < 1 || parts > total) {
    throw DomainError("compositions: need 1 <= r <= k, got k=" +
                      std::to_string(total) + " r=" + std::to_string(parts));
  }
  std::vector<Index> out;
  std::vector<Index::value_type> prefix;
  compositions_into(total, parts, prefix, out);
  return out;
}

std::vector<NonNegSeq> weak_compositions(std::uint32_t total, std::size_t length) {
  std::vector<NonNegSeq> out;
  std::vector<std::uint32_t> prefix;
  weak_compositions_into(total, length, prefix, out);
  return out;
}

std::vector<Index> indices_up_to_weight(std::uint32_t max_weight) {
  std::vector<Index> out;
  for (std::uint32_t w = 1; w <= max_weight; ++w) {
    for (std::uint32_t r = 1; r <= w; ++r) {
      auto level = compositions(w, r);
      out.insert(out.end(), level.begin(), level.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t comma_mask(const Index& k) {
  if (k.weight() > 64) throw DomainError("comma_mask: weight exceeds 64");
  std::uint64_t mask = 0;
  std::uint64_t position = 0;
  for (std::size_t j = 0; j + 1 < k.depth(); ++j) {
    position += k[j];
    mask |= std::uint64_t{1} << (position - 1);
  }
  return mask;
}

Index index_from_comma_mask(std::uint64_t mask, std::uint32_t weight) {
  std::vector<Index::value_type> out;
  Index::value_type block = 1;
  for (std::uint32_t gap = 0; gap + 1 < weight; ++gap) {
    if (mask >> gap & 1) {
      out.push_back(block);
      block = 1;
    } else {
      ++block;
    }
  }
  if (weight > 0) out.push_back(block);
  return Index(std::move(out));
}

std::string to_string(const Index& k) {
  std::string out;
  for (std::size_t j = 0; j < k.depth(); ++j) {
    if (j > 0) out.push_back(',');
    out += std::to_string(k[j]);
  }
  return out;
}

Index parse_index(std::string_view text) {
  std::vector<Index::value_type> out;
  if (text.empty()) return Index();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token = text.substr(start, comma - start);
    Index::value_type value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
        value == 0) {
      throw DomainError("malformed index '" + std::string(text) +
                        "': expected comma-separated positive integers");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Index(std::move(out));
}

}  // namespace mzv
