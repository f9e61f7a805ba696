#include "mzv/operators.hpp"

#include <cmath>
#include <map>
#include <vector>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

// Free gaps are the positions inside blocks; gaps between blocks stay commas.
std::vector<std::uint32_t> free_gaps(const Index& k) {
  std::vector<std::uint32_t> gaps;
  std::uint32_t position = 0;
  for (auto block : k) {
    for (std::uint32_t g = 1; g < block; ++g) gaps.push_back(position + g - 1);
    position += block;
  }
  return gaps;
}

void add_phi_literal(const Index& k, const Rational& coefficient, IndexCombination& out) {
  if (k.empty()) throw DomainError("phi: empty index");
  const auto w = static_cast<std::uint32_t>(k.weight());
  const std::uint64_t base = comma_mask(k);
  const auto gaps = free_gaps(k);
  const Rational signed_coefficient = (k.depth() % 2 == 0) ? coefficient : Rational(-coefficient);
  const std::uint64_t choices = std::uint64_t{1} << gaps.size();
  for (std::uint64_t choice = 0; choice < choices; ++choice) {
    std::uint64_t mask = base;
    for (std::size_t b = 0; b < gaps.size(); ++b) {
      if (choice >> b & 1) mask |= std::uint64_t{1} << gaps[b];
    }
    out.add(index_from_comma_mask(mask, w), signed_coefficient);
  }
}

// phi on all terms of one weight at once: with S the comma mask of k,
// phi(k) = (-1)^{|S|+1} Σ_{T ⊇ S} T, so phi is a signed subset-sum transform.
void add_phi_dense(std::uint32_t w, const std::vector<const IndexCombination::Terms::value_type*>& terms,
                   IndexCombination& out) {
  const std::size_t size = std::size_t{1} << (w - 1);
  std::vector<Rational> table(size);
  for (const auto* term : terms) {
    const std::uint64_t mask = comma_mask(term->first);
    if (term->first.depth() % 2 == 0) {
      table[mask] += term->second;
    } else {
      table[mask] -= term->second;
    }
  }
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (mask & bit) table[mask] += table[mask ^ bit];
    }
  }
  for (std::size_t mask = 0; mask < size; ++mask) {
    if (table[mask] != 0) out.add(index_from_comma_mask(mask, w), table[mask]);
  }
}

}  // namespace

void require_kri(std::uint32_t k, std::uint32_t r, std::uint32_t i) {
  if (!(1 <= i && i <= r && r <= k)) {
    throw DomainError("need 1 <= i <= r <= k, got k=" + std::to_string(k) +
                      " r=" + std::to_string(r) + " i=" + std::to_string(i));
  }
}

IndexCombination phi(const Index& k) {
  IndexCombination out;
  add_phi_literal(k, 1, out);
  return out;
}

IndexCombination phi_literal(const IndexCombination& c) {
  IndexCombination out;
  for (const auto& [k, coefficient] : c) add_phi_literal(k, coefficient, out);
  return out;
}

IndexCombination phi(const IndexCombination& c) {
  constexpr std::uint32_t kMaxDenseWeight = 24;
  std::map<std::uint32_t, std::vector<const IndexCombination::Terms::value_type*>> by_weight;
  for (const auto& term : c) {
    if (term.first.empty()) throw DomainError("phi: empty index");
    by_weight[static_cast<std::uint32_t>(term.first.weight())].push_back(&term);
  }
  IndexCombination out;
  for (const auto& [w, terms] : by_weight) {
    double literal_cost = 0;
    for (const auto* term : terms) {
      literal_cost += std::ldexp(1.0, static_cast<int>(w - term->first.depth()));
    }
    const double dense_cost = std::ldexp(static_cast<double>(w), static_cast<int>(w - 1));
    if (w <= kMaxDenseWeight && dense_cost < literal_cost) {
      add_phi_dense(w, terms, out);
    } else {
      for (const auto* term : terms) add_phi_literal(term->first, term->second, out);
    }
  }
  return out;
}

IndexCombination star_expand(const Index& k) {
  if (k.empty()) throw DomainError("star_expand: empty index");
  IndexCombination out;
  const std::uint64_t choices = std::uint64_t{1} << (k.depth() - 1);
  for (std::uint64_t plus = 0; plus < choices; ++plus) {
    std::vector<Index::value_type> parts{k[0]};
    for (std::size_t j = 1; j < k.depth(); ++j) {
      if (plus >> (j - 1) & 1) {
        parts.back() += k[j];
      } else {
        parts.push_back(k[j]);
      }
    }
    out.add(Index(std::move(parts)), 1);
  }
  return out;
}

IndexCombination build_F(std::uint32_t k, std::uint32_t r, std::uint32_t i) {
  require_kri(k, r, i);
  IndexCombination out;
  for (const Index& composition : compositions(k, r)) {
    out.add(composition, power_of_two(static_cast<int>(composition[i - 1]) - 1));
  }
  return out;
}

IndexCombination build_G1(const Index& k, std::uint32_t l) {
  if (k.empty()) throw DomainError("G1: empty index");
  IndexCombination out;
  for (const NonNegSeq& e : weak_compositions(l, k.depth())) out.add(oplus(k, e), 1);
  return out;
}

IndexCombination build_G2(const Index& k, std::uint32_t l) {
  if (k.empty()) throw DomainError("G2: empty index");
  const Index dual = hoffman_dual(k);
  IndexCombination out;
  for (const NonNegSeq& e : weak_compositions(l, dual.depth())) {
    out.add(hoffman_dual(oplus(dual, e)), 1);
  }
  return out;
}

IndexCombination build_G(const Index& k, std::uint32_t l) {
  return build_G1(k, l) - build_G2(k, l);
}

Index peak_index(std::uint32_t k, std::uint32_t r, std::uint32_t i) {
  require_kri(k, r, i);
  return concat({ones(i - 1), Index{k - r + 1}, ones(r - i)});
}

IndexCombination g_correction(std::uint32_t k, std::uint32_t r, std::uint32_t i,
                              GOperator op) {
  require_kri(k, r, i);
  auto apply = [op](const Index& base, std::uint32_t l) {
    switch (op) {
      case GOperator::G1:
        return build_G1(base, l);
      case GOperator::G2:
        return build_G2(base, l);
      case GOperator::G:
        break;
    }
    return build_G(base, l);
  };
  IndexCombination out;
  for (std::uint32_t l = 1; l + r + 1 <= k; ++l) {
    const Index base = concat({ones(i - 1), Index{l + 1}, ones(r - i)});
    out += power_of_two(static_cast<int>(l) - 1) * apply(base, k - r - l);
  }
  out += apply(ones(r), k - r);
  return out;
}

IndexCombination build_H(std::uint32_t k, std::uint32_t r, std::uint32_t i) {
  return build_F(k, r, i) - g_correction(k, r, i, GOperator::G);
}

}  // namespace mzv
