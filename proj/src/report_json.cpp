#include "mzv/report_json.hpp"

namespace mzv {

namespace {

double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace

Json to_json(const IndexCombination& c) {
  Json terms = Json::array();
  for (const auto& [k, q] : c) terms.push_back({{"index", to_string(k)}, {"coefficient", to_string(q)}});
  return {{"text", to_string(c)}, {"terms", std::move(terms)}};
}

Json to_json(const LemmaCheckResult& result) {
  Json params = Json::object();
  const LemmaParams& p = result.params;
  if (p.k) params["k"] = *p.k;
  if (p.r) params["r"] = *p.r;
  if (p.i) params["i"] = *p.i;
  if (p.d) params["d"] = *p.d;
  if (p.max_weight) params["max_weight"] = *p.max_weight;
  if (p.target) params["target"] = to_string(*p.target);
  return {{"lemma", std::string(to_string(result.lemma))},
          {"params", std::move(params)},
          {"pass", result.pass},
          {"residual", to_string(result.residual)}};
}

Json to_json(const PrimeSweepReport& report) {
  Json params = Json::object();
  const SweepParams& p = report.params;
  if (p.k) params["k"] = *p.k;
  if (p.r) params["r"] = *p.r;
  if (p.i) params["i"] = *p.i;
  if (p.star) params["star"] = *p.star;
  if (p.index) params["index"] = to_string(*p.index);
  if (p.l) params["l"] = *p.l;
  Json results = Json::array();
  for (const PrimeResult& r : report.results) {
    results.push_back({{"p", r.p}, {"residue", r.residue}, {"pass", r.pass}});
  }
  const auto failure = report.first_failure();
  return {{"identity", report.identity},
          {"params", std::move(params)},
          {"primes", {{"lo", report.primes.lo}, {"hi", report.primes.hi}}},
          {"results", std::move(results)},
          {"summary",
           {{"all_pass", report.all_pass()},
            {"first_failure", failure ? Json(*failure) : Json(nullptr)},
            {"enforced_above", report.enforced_above}}}};
}

Json to_json(const SmzvReport& report) {
  return {{"identity", "smzv-wsf"},
          {"params",
           {{"k", report.k}, {"r", report.r}, {"i", report.i}, {"star", report.star}, {"M", report.cutoff}}},
          {"S", to_double(report.sum)},
          {"basis", report.basis},
          {"q", report.q ? Json(to_string(*report.q)) : Json(nullptr)},
          {"residual", to_double(report.residual)},
          {"pass", report.pass},
          {"label", report.label}};
}

}  // namespace mzv
