// mzv: expand indices, verify identities, compute values, time the kernels.
//
// Exit status: 0 when every check passes, 1 when an identity fails, 2 on a
// usage error (bad flags, malformed index, violated preconditions).

#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mzv/errors.hpp"
#include "mzv/fmzv_verify.hpp"
#include "mzv/harmonic_sums.hpp"
#include "mzv/identity_checker.hpp"
#include "mzv/operators.hpp"
#include "mzv/report_json.hpp"
#include "mzv/smzv.hpp"
#include "mzv/value_cache.hpp"

using namespace mzv;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string kind;  // expand kind, verify target or compute value

  std::string index_text;
  std::optional<std::uint32_t> k, r, i, l, max_k, max_weight;
  bool all_ri = false;
  bool star = false;
  bool both = false;
  std::uint64_t pmin = 2;
  std::uint64_t pmax = 200;
  std::optional<std::uint64_t> prime;
  std::uint64_t cutoff = 100000;
  std::uint64_t max_den = 64;
  double tol = 1e-3;

  std::string out;
  std::optional<std::string> cache;
  int workers = std::max(1u, std::thread::hardware_concurrency());
  bool json = false;
};

Index require_index(const RunConfig& c) {
  if (c.index_text.empty()) throw UsageError("--index is required");
  Index k = parse_index(c.index_text);
  if (k.empty()) throw UsageError("--index must be nonempty");
  return k;
}

std::uint32_t require(const std::optional<std::uint32_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

std::vector<bool> statements(const RunConfig& c) {
  if (c.both) return {false, true};
  return {c.star};
}

PrimeRange prime_range(const RunConfig& c) {
  if (c.pmin > c.pmax) throw UsageError("--pmin exceeds --pmax");
  if (c.pmax >= (1ull << 32)) throw UsageError("--pmax must be below 2^32");
  return {c.pmin, c.pmax};
}

void require_odd_r(std::uint32_t k, std::uint32_t r, std::uint32_t i) {
  require_kri(k, r, i);
  if (r % 2 == 0) throw UsageError("r must be odd");
}

// (k, r, i) triples selected by --k/--r/--i or --all-ri, validated up front.
std::vector<std::array<std::uint32_t, 3>> kri_grid(const RunConfig& c) {
  std::vector<std::uint32_t> ks;
  if (c.k) {
    ks.push_back(*c.k);
  } else if (c.max_k && c.all_ri) {
    for (std::uint32_t k = 1; k <= *c.max_k; ++k) ks.push_back(k);
  } else {
    throw UsageError("--k is required (or --max-k with --all-ri)");
  }
  std::vector<std::array<std::uint32_t, 3>> grid;
  for (std::uint32_t k : ks) {
    if (c.all_ri) {
      if (c.r || c.i) throw UsageError("--all-ri excludes --r and --i");
      for (std::uint32_t r = 1; r <= k; r += 2)
        for (std::uint32_t i = 1; i <= r; ++i) grid.push_back({k, r, i});
    } else {
      const std::uint32_t r = require(c.r, "--r");
      const std::uint32_t i = require(c.i, "--i");
      require_odd_r(k, r, i);
      grid.push_back({k, r, i});
    }
  }
  return grid;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// ---- expand ----

int cmd_expand(const RunConfig& c) {
  std::optional<Index> single;
  IndexCombination combo;
  const std::string& kind = c.kind;
  if (kind == "phi") {
    combo = phi(require_index(c));
  } else if (kind == "dual") {
    single = hoffman_dual(require_index(c));
  } else if (kind == "star") {
    combo = star_expand(require_index(c));
  } else if (kind == "G1" || kind == "G2" || kind == "G") {
    const Index k = require_index(c);
    const std::uint32_t l = require(c.l, "--l");
    combo = kind == "G1" ? build_G1(k, l) : kind == "G2" ? build_G2(k, l) : build_G(k, l);
  } else {
    const std::uint32_t k = require(c.k, "--k");
    const std::uint32_t r = require(c.r, "--r");
    const std::uint32_t i = require(c.i, "--i");
    require_kri(k, r, i);
    combo = kind == "F" ? build_F(k, r, i) : build_H(k, r, i);
  }

  Output out(c.out);
  if (c.json) {
    Json j = {{"expand", kind}};
    if (single) {
      j["index"] = to_string(*single);
    } else {
      j["result"] = to_json(combo);
    }
    out.stream() << j.dump(2) << '\n';
  } else {
    out.stream() << (single ? to_string(*single) : to_string(combo)) << '\n';
  }
  return kExitPass;
}

// ---- verify ----

struct VerifyRun {
  Json reports = Json::array();
  std::size_t checks = 0;
  std::size_t failed = 0;
  Json first_counterexample = nullptr;

  void add(const Json& report, bool pass) {
    ++checks;
    if (!pass) {
      ++failed;
      if (first_counterexample.is_null()) first_counterexample = report;
    }
    reports.push_back(report);
  }
  void add(const LemmaCheckResult& r) { add(to_json(r), r.pass); }
  void add(const PrimeSweepReport& r) { add(to_json(r), r.all_pass()); }
  void add(const SmzvReport& r) { add(to_json(r), r.pass); }
};

std::vector<Index> index_grid(const RunConfig& c, std::size_t max_depth = 0) {
  if (!c.index_text.empty()) return {require_index(c)};
  std::vector<Index> all;
  for (Index& k : indices_up_to_weight(c.max_weight.value_or(12)))
    if (max_depth == 0 || k.depth() <= max_depth) all.push_back(std::move(k));
  return all;
}

void verify_lemmas(const RunConfig& c, VerifyRun& run) {
  const auto sweep = c.kind == "key-lemma" ? sweep_key_lemma
                     : c.kind == "lemma1"  ? sweep_lemma1
                                           : sweep_lemma2;
  if (c.k) {
    const std::uint32_t k = *c.k;
    const std::uint32_t r = require(c.r, "--r");
    const std::uint32_t i = require(c.i, "--i");
    require_kri(k, r, i);
    if (c.kind == "lemma1") {
      run.add(check_lemma1(k, r, i));
    } else {
      if (r % 2 == 0) throw UsageError("r must be odd");
      run.add(c.kind == "key-lemma" ? check_key_lemma(k, r, i) : check_lemma2(k, r, i));
    }
    return;
  }
  const std::uint32_t max_k = c.max_k.value_or(12);
  if (max_k == 0) throw UsageError("--max-k must be positive");
  for (const auto& r : sweep(max_k, c.workers)) run.add(r);
}

void verify_fmzv(const RunConfig& c, VerifyRun& run) {
  const PrimeRange range = prime_range(c);
  const SweepOptions options{c.workers, Kernel::PrefixShared};
  if (c.kind == "fmzv-wsf") {
    const auto grid = kri_grid(c);
    for (const auto& [k, r, i] : grid)
      for (bool star : statements(c)) run.add(verify_weighted_sum(k, r, i, range, star, options));
    return;
  }
  if (c.kind == "oyama") {
    std::vector<std::uint32_t> ls;
    if (c.l) {
      ls.push_back(*c.l);
    } else {
      ls = {0, 1, 2, 3};
    }
    for (const Index& k : index_grid(c))
      for (std::uint32_t l : ls) run.add(verify_oyama(k, l, range, options));
    return;
  }
  if (c.kind == "symsum") {
    const auto grid = index_grid(c, 4);
    for (const Index& k : grid)
      if (k.depth() > 8) throw UsageError("symsum supports depth <= 8");
    for (const Index& k : grid)
      for (bool star : statements(c)) run.add(verify_symmetric_sum(k, range, star, options));
    return;
  }
  for (const Index& k : index_grid(c))
    run.add(c.kind == "phi" ? verify_phi_duality(k, range, options) : verify_antipode(k, range, options));
}

void verify_smzv(const RunConfig& c, VerifyRun& run) {
  const auto grid = kri_grid(c);
  for (const auto& [k, r, i] : grid)
    if (k > 5) throw UsageError("smzv-wsf supports k <= 5");
  if (c.cutoff < 2) throw UsageError("--M must be at least 2");
  const SmzvOptions options{c.cutoff, c.max_den, c.tol};
  for (const auto& [k, r, i] : grid)
    for (bool star : statements(c)) run.add(verify_smzv_weighted_sum(k, r, i, star, options));
}

int cmd_verify(const RunConfig& c) {
  VerifyRun run;
  const std::string& t = c.kind;
  if (t == "key-lemma" || t == "lemma1" || t == "lemma2") {
    verify_lemmas(c, run);
  } else if (t == "smzv-wsf") {
    verify_smzv(c, run);
  } else {
    verify_fmzv(c, run);
  }

  Json report = {{"verify", t},
                 {"reports", std::move(run.reports)},
                 {"summary",
                  {{"checks", run.checks},
                   {"failed", run.failed},
                   {"all_pass", run.failed == 0},
                   {"first_counterexample", run.first_counterexample}}}};
  Output out(c.out);
  out.stream() << report.dump(2) << '\n';
  std::cerr << t << ": " << run.checks - run.failed << "/" << run.checks << " checks pass\n";
  return run.failed == 0 ? kExitPass : kExitFail;
}

// ---- compute ----

int cmd_compute(const RunConfig& c) {
  const Index k = c.kind == "fmzv" || c.kind == "fmzsv" ? parse_index(c.index_text) : require_index(c);
  Json j = {{"value", c.kind}, {"index", to_string(k)}};
  std::string text;

  if (c.kind == "fmzv" || c.kind == "fmzsv") {
    if (!c.prime) throw UsageError("--prime is required");
    const std::uint64_t p = *c.prime;
    if (p >= (1ull << 32) || !is_prime(p)) throw UsageError("--prime must be a prime below 2^32");
    const bool star = c.kind == "fmzsv";
    std::optional<ValueCache> cache;
    std::optional<std::filesystem::path> explicit_dir;
    if (c.cache) explicit_dir = *c.cache;
    if (auto dir = resolve_cache_directory(explicit_dir)) cache.emplace(*dir);
    const auto v = cached_harmonic_sum(cache ? &*cache : nullptr, k, p, star);
    j["p"] = p;
    j["star"] = star;
    j["residue"] = v.residue();
    text = c.kind + "(" + to_string(k) + ") mod " + std::to_string(p) + " = " + std::to_string(v.residue());
  } else {
    if (c.cutoff < 2) throw UsageError("--M must be at least 2");
    Real value = 0;
    Json extra = Json::object();
    if (c.kind == "mzv-trunc") {
      value = truncated_mzv(k, c.cutoff, c.star).value;
    } else {
      const auto a = c.star ? smzsv_approx(k, c.cutoff) : smzv_star_approx(k, c.cutoff);
      value = a.value;
      extra["cauchy_gap"] = format_real(a.cauchy_gap, 6);
    }
    j["M"] = c.cutoff;
    j["star"] = c.star;
    j["value"] = format_real(value, 30);
    for (auto& [key, v] : extra.items()) j[key] = v;
    text = c.kind + (c.star ? " star" : "") + "(" + to_string(k) + ") at M=" + std::to_string(c.cutoff) +
           " = " + format_real(value, 30);
  }

  Output out(c.out);
  out.stream() << (c.json ? j.dump(2) : text) << '\n';
  return kExitPass;
}

// ---- bench ----

int cmd_bench(const RunConfig& c) {
  const auto indices = indices_up_to_weight(c.max_weight.value_or(8));
  const auto primes = primes_in(c.pmin, c.pmax);
  const double pairs = static_cast<double>(indices.size() * primes.size());

  auto time = [&](SweepOptions o) {
    const auto start = std::chrono::steady_clock::now();
    auto table = harmonic_sum_table(indices, primes, false, o);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::pair{s, std::move(table)};
  };
  const auto [t_ref, ref] = time({1, Kernel::Reference});
  const auto [t_shared, shared] = time({1, Kernel::PrefixShared});
  const auto [t_par, par] = time({c.workers, Kernel::PrefixShared});

  Json j = {{"grid", {{"max_weight", c.max_weight.value_or(8)}, {"indices", indices.size()},
                      {"primes", primes.size()}, {"pmin", c.pmin}, {"pmax", c.pmax}}},
            {"kernels",
             {{{"kernel", "reference"}, {"workers", 1}, {"seconds", t_ref}, {"pairs_per_second", pairs / t_ref}},
              {{"kernel", "prefix-shared"}, {"workers", 1}, {"seconds", t_shared},
               {"pairs_per_second", pairs / t_shared}},
              {{"kernel", "prefix-shared"}, {"workers", c.workers}, {"seconds", t_par},
               {"pairs_per_second", pairs / t_par}}}},
            {"tables_agree", ref == shared && shared == par}};
  Output out(c.out);
  if (c.json) {
    out.stream() << j.dump(2) << '\n';
  } else {
    out.stream() << indices.size() << " indices x " << primes.size() << " primes\n";
    for (const auto& row : j["kernels"])
      out.stream() << "  " << row["kernel"].get<std::string>() << " workers=" << row["workers"].get<int>()
                   << "  " << row["seconds"].get<double>() << " s  "
                   << static_cast<std::uint64_t>(row["pairs_per_second"].get<double>()) << " pairs/s\n";
  }
  return ref == shared && shared == par ? kExitPass : kExitFail;
}

void add_common(CLI::App* app, RunConfig& c) {
  app->add_option("--out", c.out, "write output here instead of stdout");
  app->add_option("--cache", c.cache, "value cache directory (overrides $MZV_CACHE_DIR)");
  app->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
  app->add_flag("--json", c.json, "print JSON");
}

void add_index_params(CLI::App* app, RunConfig& c) {
  app->add_option("--index", c.index_text, "index as k1,k2,...,kr");
  app->add_option("--k", c.k, "weight");
  app->add_option("--r", c.r, "depth");
  app->add_option("--i", c.i, "position");
  app->add_option("--l", c.l, "added weight for the G-operators");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite and symmetric multiple zeta values: identity checks"};
  app.require_subcommand(1);
  RunConfig c;

  auto* expand = app.add_subcommand("expand", "print an operator applied to an index");
  expand->add_option("kind", c.kind, "phi, dual, star, F, G1, G2, G or H")
      ->required()
      ->check(CLI::IsMember({"phi", "dual", "star", "F", "G1", "G2", "G", "H"}));
  add_index_params(expand, c);
  add_common(expand, c);

  auto* verify = app.add_subcommand("verify", "check an identity and write a JSON report");
  verify->add_option("target", c.kind)
      ->required()
      ->check(CLI::IsMember(
          {"key-lemma", "lemma1", "lemma2", "fmzv-wsf", "phi", "oyama", "antipode", "symsum", "smzv-wsf"}));
  add_index_params(verify, c);
  verify->add_option("--max-k", c.max_k, "largest k for sweeps (default 12)");
  verify->add_option("--max-weight", c.max_weight, "largest index weight for sweeps (default 12)");
  verify->add_flag("--all-ri", c.all_ri, "every odd r and every i for the given k");
  verify->add_flag("--star", c.star, "star statement");
  verify->add_flag("--both", c.both, "both plain and star statements");
  verify->add_option("--pmin", c.pmin, "smallest prime (default 2)");
  verify->add_option("--pmax", c.pmax, "largest prime (default 200)");
  verify->add_option("--M", c.cutoff, "truncation cutoff (default 100000)");
  verify->add_option("--max-den", c.max_den, "largest denominator in reconstruction (default 64)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", c.tol, "reconstruction tolerance (default 1e-3)")->check(CLI::PositiveNumber);
  add_common(verify, c);

  auto* compute = app.add_subcommand("compute", "evaluate one value");
  compute->add_option("value", c.kind, "fmzv, fmzsv, mzv-trunc or smzv")
      ->required()
      ->check(CLI::IsMember({"fmzv", "fmzsv", "mzv-trunc", "smzv"}));
  compute->add_option("--index", c.index_text, "index as k1,k2,...,kr");
  compute->add_option("--prime", c.prime, "prime modulus");
  compute->add_option("--M", c.cutoff, "truncation cutoff (default 100000)");
  compute->add_flag("--star", c.star, "star version");
  add_common(compute, c);

  auto* bench = app.add_subcommand("bench", "throughput of the harmonic sum kernels");
  bench->add_option("--max-weight", c.max_weight, "largest index weight (default 8)");
  bench->add_option("--pmin", c.pmin, "smallest prime (default 2)");
  bench->add_option("--pmax", c.pmax, "largest prime (default 200)");
  add_common(bench, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*expand) return cmd_expand(c);
    if (*verify) return cmd_verify(c);
    if (*compute) return cmd_compute(c);
    return cmd_bench(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  }
  return kExitUsage;
}
