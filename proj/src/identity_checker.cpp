#include "mzv/identity_checker.hpp"

#include <functional>

#include "mzv/errors.hpp"
#include "mzv/operators.hpp"

namespace mzv {

namespace {

LemmaCheckResult make_result(LemmaId id, LemmaParams params, IndexCombination residual) {
  LemmaCheckResult result{id, std::move(params), residual.empty(), std::move(residual)};
  return result;
}

LemmaParams kri(std::uint32_t k, std::uint32_t r, std::uint32_t i) {
  LemmaParams p;
  p.k = k;
  p.r = r;
  p.i = i;
  return p;
}

void require_odd_r(std::uint32_t r) {
  if (r % 2 == 0) throw DomainError("r must be odd, got r=" + std::to_string(r));
}

Integer as_integer(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw std::logic_error("expected an integer coefficient, got " + to_string(q));
  }
  return boost::multiprecision::numerator(q);
}

Integer pow2(std::uint32_t e) {
  Integer out = 1;
  out <<= e;
  return out;
}

// Integer pair (found, expected) as a residual on the target index.
IndexCombination pair_residual(const std::pair<Integer, Integer>& counts, const Index& a) {
  return IndexCombination(a, Rational(counts.first - counts.second));
}

void require_composition(std::uint32_t k, std::uint32_t r, const Index& a) {
  if (a.weight() != k || a.depth() != r) {
    throw DomainError("target " + to_string(a) + " is not a composition of " +
                      std::to_string(k) + " into " + std::to_string(r) + " parts");
  }
}

std::pair<Integer, Integer> multiplicity_A_from(const IndexCombination& correction,
                                                std::uint32_t k, std::uint32_t r,
                                                std::uint32_t i, const Index& a) {
  const std::uint32_t peak = a[i - 1];
  Integer closed = (peak <= k - r) ? pow2(peak - 1) : pow2(k - r - 1);
  return {as_integer(correction.coefficient(a)), std::move(closed)};
}

bool is_B_target(std::uint32_t k, std::uint32_t r, std::uint32_t i, const Index& a) {
  if (a == ones(k)) return true;
  if (a.weight() != k || a.depth() + 1 < r + 2) return false;
  const std::size_t d = a.depth() - r + 1;
  if (d < 2 || d > k - r) return false;
  for (std::size_t j = 0; j + 1 < i; ++j) {
    if (a[j] != 1) return false;
  }
  for (std::size_t j = a.depth() - (r - i); j < a.depth(); ++j) {
    if (a[j] != 1) return false;
  }
  return true;
}

std::pair<Integer, Integer> multiplicity_B_from(const IndexCombination& b_plus_phi_b,
                                                std::uint32_t k, std::uint32_t r,
                                                const Index& a) {
  Integer expected = pow2(k - r - 1);
  if (a == ones(k) && k % 2 == 0) expected += 1;
  return {as_integer(b_plus_phi_b.coefficient(a)), std::move(expected)};
}

std::vector<LemmaCheckResult> run_all(const std::vector<std::function<LemmaCheckResult()>>& jobs,
                                      int workers) {
  std::vector<LemmaCheckResult> results(jobs.size());
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers < 1 ? 1 : workers)
  for (std::ptrdiff_t j = 0; j < n; ++j) results[j] = jobs[j]();
  return results;
}

template <typename Fn>
std::vector<std::function<LemmaCheckResult()>> kri_jobs(std::uint32_t max_k, bool odd_r_only,
                                                        Fn check) {
  std::vector<std::function<LemmaCheckResult()>> jobs;
  for (std::uint32_t k = 1; k <= max_k; ++k) {
    for (std::uint32_t r = 1; r <= k; ++r) {
      if (odd_r_only && r % 2 == 0) continue;
      for (std::uint32_t i = 1; i <= r; ++i) {
        jobs.emplace_back([=] { return check(k, r, i); });
      }
    }
  }
  return jobs;
}

}  // namespace

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::Lemma1:
      return "lemma1";
    case LemmaId::Lemma2:
      return "lemma2";
    case LemmaId::KeyLemma:
      return "key-lemma";
    case LemmaId::BinomialIdentity:
      return "binomial-identity";
    case LemmaId::MultiplicityA:
      return "multiplicity-A";
    case LemmaId::MultiplicityB:
      return "multiplicity-B";
    case LemmaId::PhiInvolution:
      return "phi-involution";
    case LemmaId::DualInvolution:
      return "dual-involution";
  }
  return "unknown";
}

LemmaCheckResult check_lemma1(std::uint32_t k, std::uint32_t r, std::uint32_t i) {
  require_kri(k, r, i);
  if (k == r) {
    return make_result(LemmaId::Lemma1, kri(k, r, i), build_F(k, r, i) - IndexCombination(ones(r)));
  }
  IndexCombination lhs = build_F(k, r, i) - g_correction(k, r, i, GOperator::G1);
  IndexCombination rhs(peak_index(k, r, i), power_of_two(static_cast<int>(k - r) - 1));
  return make_result(LemmaId::Lemma1, kri(k, r, i), lhs - rhs);
}

std::pair<Integer, Integer> multiplicity_oracle_A(std::uint32_t k, std::uint32_t r,
                                                  std::uint32_t i, const Index& a) {
  require_kri(k, r, i);
  if (k == r) throw DomainError("multiplicity_oracle_A: requires k > r");
  require_composition(k, r, a);
  return multiplicity_A_from(g_correction(k, r, i, GOperator::G1), k, r, i, a);
}

LemmaCheckResult check_multiplicity_A(std::uint32_t k, std::uint32_t r, std::uint32_t i,
                                      const Index& a) {
  LemmaParams params = kri(k, r, i);
  params.target = a;
  return make_result(LemmaId::MultiplicityA, std::move(params),
                     pair_residual(multiplicity_oracle_A(k, r, i, a), a));
}

LemmaCheckResult check_lemma2(std::uint32_t k, std::uint32_t r, std::uint32_t i) {
  require_kri(k, r, i);
  require_odd_r(r);
  const IndexCombination b = g_correction(k, r, i, GOperator::G2);
  IndexCombination lhs = b + phi(b);
  const Index peak = peak_index(k, r, i);
  IndexCombination rhs = power_of_two(static_cast<int>(k - r) - 1) * (IndexCombination(peak) + phi(peak));
  rhs *= Rational(-1);
  if (k % 2 == 0) rhs.add(ones(k), 1);
  return make_result(LemmaId::Lemma2, kri(k, r, i), lhs - rhs);
}

std::vector<Index> multiplicity_B_targets(std::uint32_t k, std::uint32_t r, std::uint32_t i) {
  require_kri(k, r, i);
  std::vector<Index> out;
  if (k == r) return out;
  for (std::uint32_t d = 2; d <= k - r; ++d) {
    for (const Index& middle : compositions(k - r + 1, d)) {
      out.push_back(concat({ones(i - 1), middle, ones(r - i)}));
    }
  }
  out.push_back(ones(k));
  return out;
}

std::pair<Integer, Integer> multiplicity_oracle_B(std::uint32_t k, std::uint32_t r,
                                                  std::uint32_t i, const Index& a) {
  require_kri(k, r, i);
  require_odd_r(r);
  if (k == r) throw DomainError("multiplicity_oracle_B: requires k > r");
  if (!is_B_target(k, r, i, a)) {
    throw DomainError("target " + to_string(a) + " is not admissible for (k,r,i)=(" +
                      std::to_string(k) + "," + std::to_string(r) + "," + std::to_string(i) + ")");
  }
  const IndexCombination b = g_correction(k, r, i, GOperator::G2);
  return multiplicity_B_from(b + phi_literal(b), k, r, a);
}

LemmaCheckResult check_multiplicity_B(std::uint32_t k, std::uint32_t r, std::uint32_t i,
                                      const Index& a) {
  LemmaParams params = kri(k, r, i);
  params.target = a;
  return make_result(LemmaId::MultiplicityB, std::move(params),
                     pair_residual(multiplicity_oracle_B(k, r, i, a), a));
}

LemmaCheckResult check_binomial_identity(std::uint32_t d) {
  if (d < 2) throw DomainError("binomial identity: need d >= 2");
  Integer lhs = 0;
  Integer binom = 1;  // C(d-1, l)
  Integer power = 1;  // (-2)^l
  for (std::uint32_t l = 0; l + 2 <= d; ++l) {
    lhs += power * binom;
    binom = binom * (d - 1 - l) / (l + 1);
    power *= -2;
  }
  Integer minus_one = (d % 2 == 0) ? Integer(-1) : Integer(1);  // (-1)^{d-1}
  Integer minus_two = 1;
  for (std::uint32_t e = 0; e + 1 < d; ++e) minus_two *= -2;  // (-2)^{d-1}
  LemmaParams params;
  params.d = d;
  return make_result(LemmaId::BinomialIdentity, std::move(params),
                     IndexCombination(Index(), Rational(lhs - (minus_one - minus_two))));
}

LemmaCheckResult key_lemma_residual(std::uint32_t k, std::uint32_t r, std::uint32_t i) {
  require_kri(k, r, i);
  const IndexCombination h = build_H(k, r, i);
  IndexCombination residual = h + phi(h);
  if (k % 2 == 0) residual.add(ones(k), -1);
  return make_result(LemmaId::KeyLemma, kri(k, r, i), std::move(residual));
}

LemmaCheckResult check_key_lemma(std::uint32_t k, std::uint32_t r, std::uint32_t i) {
  require_kri(k, r, i);
  require_odd_r(r);
  return key_lemma_residual(k, r, i);
}

LemmaCheckResult check_phi_involution(std::uint32_t max_weight) {
  if (max_weight < 1) throw DomainError("phi involution: need max_weight >= 1");
  IndexCombination residual;
  for (const Index& k : indices_up_to_weight(max_weight)) {
    IndexCombination back = phi(phi(k));
    back.add(k, -1);
    residual += back;
  }
  LemmaParams params;
  params.max_weight = max_weight;
  return make_result(LemmaId::PhiInvolution, std::move(params), std::move(residual));
}

LemmaCheckResult check_dual_involution(std::uint32_t max_weight) {
  if (max_weight < 1) throw DomainError("dual involution: need max_weight >= 1");
  IndexCombination residual;
  for (const Index& k : indices_up_to_weight(max_weight)) {
    const Index back = hoffman_dual(hoffman_dual(k));
    if (back != k) {
      residual.add(back, 1);
      residual.add(k, -1);
    }
  }
  LemmaParams params;
  params.max_weight = max_weight;
  return make_result(LemmaId::DualInvolution, std::move(params), std::move(residual));
}

std::vector<LemmaCheckResult> sweep_lemma1(std::uint32_t max_k, int workers) {
  return run_all(kri_jobs(max_k, false, check_lemma1), workers);
}

std::vector<LemmaCheckResult> sweep_lemma2(std::uint32_t max_k, int workers) {
  return run_all(kri_jobs(max_k, true, check_lemma2), workers);
}

std::vector<LemmaCheckResult> sweep_key_lemma(std::uint32_t max_k, int workers) {
  return run_all(kri_jobs(max_k, true, check_key_lemma), workers);
}

std::vector<LemmaCheckResult> sweep_multiplicity_A(std::uint32_t max_k, int workers) {
  // One job per (k, r, i); each expands the correction once for all targets.
  std::vector<std::function<std::vector<LemmaCheckResult>()>> jobs;
  for (std::uint32_t k = 2; k <= max_k; ++k) {
    for (std::uint32_t r = 1; r < k; ++r) {
      for (std::uint32_t i = 1; i <= r; ++i) {
        jobs.emplace_back([=] {
          const IndexCombination correction = g_correction(k, r, i, GOperator::G1);
          std::vector<LemmaCheckResult> out;
          for (const Index& a : compositions(k, r)) {
            LemmaParams params = kri(k, r, i);
            params.target = a;
            out.push_back(make_result(LemmaId::MultiplicityA, std::move(params),
                                      pair_residual(multiplicity_A_from(correction, k, r, i, a), a)));
          }
          return out;
        });
      }
    }
  }
  std::vector<std::vector<LemmaCheckResult>> chunks(jobs.size());
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers < 1 ? 1 : workers)
  for (std::ptrdiff_t j = 0; j < n; ++j) chunks[j] = jobs[j]();
  std::vector<LemmaCheckResult> results;
  for (auto& chunk : chunks) {
    for (auto& result : chunk) results.push_back(std::move(result));
  }
  return results;
}

std::vector<LemmaCheckResult> sweep_multiplicity_B(std::uint32_t max_k, int workers) {
  std::vector<std::function<std::vector<LemmaCheckResult>()>> jobs;
  for (std::uint32_t k = 2; k <= max_k; ++k) {
    for (std::uint32_t r = 1; r < k; r += 2) {
      for (std::uint32_t i = 1; i <= r; ++i) {
        jobs.emplace_back([=] {
          const IndexCombination b = g_correction(k, r, i, GOperator::G2);
          const IndexCombination total = b + phi_literal(b);
          std::vector<LemmaCheckResult> out;
          for (const Index& a : multiplicity_B_targets(k, r, i)) {
            LemmaParams params = kri(k, r, i);
            params.target = a;
            out.push_back(make_result(LemmaId::MultiplicityB, std::move(params),
                                      pair_residual(multiplicity_B_from(total, k, r, a), a)));
          }
          return out;
        });
      }
    }
  }
  std::vector<std::vector<LemmaCheckResult>> chunks(jobs.size());
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers < 1 ? 1 : workers)
  for (std::ptrdiff_t j = 0; j < n; ++j) chunks[j] = jobs[j]();
  std::vector<LemmaCheckResult> results;
  for (auto& chunk : chunks) {
    for (auto& result : chunk) results.push_back(std::move(result));
  }
  return results;
}

std::vector<LemmaCheckResult> sweep_binomial_identity(std::uint32_t max_d) {
  std::vector<LemmaCheckResult> results;
  for (std::uint32_t d = 2; d <= max_d; ++d) results.push_back(check_binomial_identity(d));
  return results;
}

bool all_pass(const std::vector<LemmaCheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace mzv
