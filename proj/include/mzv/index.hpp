#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

// A finite sequence of positive integers (k_1, ..., k_r). The empty
// index is a valid value; operations that need a nonempty argument say so.
class Index {
 public:
  using value_type = std::uint32_t;

  Index() = default;
  explicit Index(std::vector<value_type> parts);
  Index(std::initializer_list<value_type> parts);

  std::span<const value_type> parts() const { return parts_; }
  std::size_t depth() const { return parts_.size(); }
  std::uint64_t weight() const;
  bool empty() const { return parts_.empty(); }

  value_type operator[](std::size_t j) const { return parts_[j]; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  bool operator==(const Index&) const = default;
  // Canonical order: by depth first, then lexicographically.
  std::strong_ordering operator<=>(const Index& other) const;

 private:
  std::vector<value_type> parts_;
};

// A finite sequence of nonnegative integers, used as the shift in k ⊕ e.
struct NonNegSeq {
  std::vector<std::uint32_t> entries;

  std::size_t length() const { return entries.size(); }
  std::uint64_t weight() const;
  bool operator==(const NonNegSeq&) const = default;
};

inline std::uint64_t weight(const Index& k) { return k.weight(); }
inline std::size_t depth(const Index& k) { return k.depth(); }

// ({1}^m)
Index ones(std::size_t m);

// Concatenation of indices.
Index concat(std::initializer_list<Index> pieces);

// Componentwise sum; throws DimensionError when the lengths differ.
Index oplus(const Index& k, const NonNegSeq& e);

Index reverse(const Index& k);

// Hoffman's dual: spell k as 1s joined by '+' inside blocks and ','
// between blocks, swap the two separators, and read the result back.
Index hoffman_dual(const Index& k);

// All compositions of `total` into exactly `parts` positive parts, in
// canonical (lexicographic) order. Requires 1 <= parts <= total.
std::vector<Index> compositions(std::uint32_t total, std::uint32_t parts);

// All sequences of `length` nonnegative integers summing to `total`.
std::vector<NonNegSeq> weak_compositions(std::uint32_t total,
                                         std::size_t length);

// Every nonempty index of weight in [1, max_weight], canonical order.
std::vector<Index> indices_up_to_weight(std::uint32_t max_weight);

// Comma positions of k's all-ones spelling: bit g-1 is set when the gap
// after the g-th 1 is a comma. Requires weight(k) <= 64.
std::uint64_t comma_mask(const Index& k);
Index index_from_comma_mask(std::uint64_t mask, std::uint32_t weight);

// "1,2,2" (empty string for the empty index).
std::string to_string(const Index& k);
// Inverse of to_string; throws DomainError on malformed text.
Index parse_index(std::string_view text);

}  // namespace mzv
