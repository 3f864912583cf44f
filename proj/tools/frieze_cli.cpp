// frieze: verify, analyze, bound and enumerate friezes of Dynkin type.
//
// Exit status: 0 success, 1 domain failure (mesh violation, dead-end seed,
// refused or incomplete enumeration), 2 usage or input error.

#include "frieze/bounds.hpp"
#include "frieze/frieze.hpp"
#include "frieze/io.hpp"
#include "frieze/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace frieze;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FriezePattern load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_frieze(ss.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

DynkinType parse_type(const std::string& token) {
  try {
    return DynkinType::parse(token);
  } catch (const InadmissibleType& e) {
    throw UsageError(e.what());
  }
}

void print_violations(const std::vector<MeshViolation>& violations) {
  for (const auto& v : violations) {
    std::cout << "violation vertex=" << v.vertex + 1 << " column=" << v.column << " lhs=" << v.lhs
              << " rhs=" << v.rhs << "\n";
  }
}

int cmd_verify(const std::string& file) {
  const FriezePattern f = load(file);
  const auto violations = verify_pattern(f);
  if (violations.empty()) {
    std::cout << "OK " << f.dynkin().name() << " period " << f.period() << ": "
              << f.rank() * f.period() << " mesh relations hold\n";
    return kOk;
  }
  print_violations(violations);
  return kDomainFailure;
}

int cmd_analyze(const std::string& file, std::size_t period, bool json) {
  const FriezePattern f = load(file);
  if (const auto violations = verify_pattern(f); !violations.empty()) {
    std::cerr << file << ": not a frieze\n";
    print_violations(violations);
    return kDomainFailure;
  }
  if (period == 0) period = f.period();
  if (period % f.period() != 0) {
    throw UsageError("--period " + std::to_string(period) + " is not a multiple of the stored period " +
                     std::to_string(f.period()));
  }
  const LogVector logs = a_vector(f, period);
  const LemmaCertificate lemma = lemma_check_exact(f, period);
  const ProductCheck bounds = check_pattern_against_bounds(f, period);
  if (json) {
    std::cout << analysis_json(f, period, logs, lemma, bounds).dump(2) << "\n";
  } else {
    std::cout << analysis_text(f, period, logs, lemma, bounds);
  }
  return lemma.passed() && bounds.passed() ? kOk : kDomainFailure;
}

int cmd_bounds(const std::string& type_token, std::size_t period, bool min2, bool json) {
  const DynkinType t = parse_type(type_token);
  if (period == 0) period = static_cast<std::size_t>(type_profile(t).period_cap);
  const BoundsReport report = bounds_report(t, period);
  if (json) {
    std::cout << bounds_json(report, min2).dump(2) << "\n";
  } else {
    std::cout << bounds_text(report, min2);
  }
  return kOk;
}

int cmd_enumerate(const std::string& type_token, const std::string& strategy, const std::string& cap,
                  std::size_t period_cap, unsigned jobs, std::uint64_t budget, bool json) {
  SearchConfig cfg{parse_type(type_token)};
  try {
    cfg.strategy = parse_strategy(strategy);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.period_cap = period_cap;
  cfg.jobs = jobs;
  cfg.node_budget = budget;
  cfg.progress = &std::cerr;
  if (!cap.empty()) {
    BigInt c;
    if (c.set_str(cap, 10) != 0 || c < 1) throw UsageError("--cap must be a positive integer");
    cfg.entry_cap_override = c;
  }
  const Family fam = cfg.dynkin.family();
  if ((fam == Family::D || fam == Family::E) && !cfg.entry_cap_override) {
    const TypeProfile prof = type_profile(cfg.dynkin);
    const std::size_t p = period_cap ? period_cap : static_cast<std::size_t>(prof.period_cap);
    const BoundsReport report = bounds_report(cfg.dynkin, p);
    std::cerr << "refusing to enumerate " << cfg.dynkin.name()
              << " at full caps; a certified run needs entries up to 2^(p*b_i) with p=" << p
              << ", exponents:";
    for (const auto& e : report.entry_cap_exponents) std::cerr << " " << to_string(e);
    std::cerr << "\npass --cap to run a truncated (incomplete) search\n";
    return kDomainFailure;
  }
  std::optional<SearchOutcome> result;
  try {
    result = enumerate_friezes(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SearchOutcome& outcome = *result;
  if (json) {
    std::cout << enumeration_json(outcome).dump(2) << "\n";
  } else {
    std::cout << enumeration_text(outcome);
  }
  return outcome.complete ? kOk : kDomainFailure;
}

std::vector<BigInt> parse_seed(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    BigInt v;
    if (v.set_str(item, 10) != 0 || v < 1) throw UsageError("seed entries must be positive integers");
    out.push_back(v);
  }
  return out;
}

int cmd_period(const std::string& file, const std::string& seed, const std::string& type_token,
               std::size_t cap) {
  std::optional<FriezeSlice> start;
  try {
    if (!file.empty()) {
      const FriezePattern f = load(file);
      start = f.columns().front();
    } else {
      if (type_token.empty()) throw UsageError("--seed needs --type");
      start = FriezeSlice(parse_type(type_token), parse_seed(seed));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cap == 0) cap = static_cast<std::size_t>(type_profile(start->dynkin()).period_cap);
  const PeriodResult r = detect_period(*start, cap);
  if (const auto* found = std::get_if<PeriodFound>(&r)) {
    std::cout << "period " << found->period << "\n";
    for (const auto& col : found->columns) {
      std::cout << "column";
      for (const auto& v : col.values()) std::cout << " " << v;
      std::cout << "\n";
    }
    return kOk;
  }
  if (const auto* dead = std::get_if<DeadEnd>(&r)) {
    std::cout << "dead end at step " << dead->step << " vertex " << dead->vertex + 1 << "\n";
    return kDomainFailure;
  }
  std::cout << "no recurrence within " << std::get<NoRecurrence>(r).cap << " steps\n";
  return kDomainFailure;
}

int cmd_quiver(const std::string& type_token, long from, long to, const std::string& file) {
  const DynkinType t = parse_type(type_token);
  if (from > to) throw UsageError("--from must not exceed --to");
  std::optional<FriezePattern> f;
  if (!file.empty()) f = load(file);
  std::cout << emit_quiver_dot(t, from, to, f ? &*f : nullptr);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify, analyze, bound and enumerate friezes of Dynkin type"};
  app.require_subcommand(1);

  std::string file, type_token, strategy = "row_seeded", cap, seed;
  std::size_t period = 0, period_cap = 0, cap_steps = 0;
  unsigned jobs = 1;
  std::uint64_t budget = 100'000'000;
  bool json = false, min2 = false;
  long from = 0, to = 0;

  auto* verify = app.add_subcommand("verify", "Check every mesh relation of a frieze document");
  verify->add_option("file", file, "Frieze document")->required();

  auto* analyze = app.add_subcommand("analyze", "Average logarithms, exact lemma and row-product checks");
  analyze->add_option("file", file, "Frieze document")->required();
  analyze->add_option("--period", period, "Nominal period (a multiple of the stored period)");
  analyze->add_flag("--json", json, "Emit JSON");

  auto* bounds = app.add_subcommand("bounds", "Entry and count bounds for a type");
  bounds->add_option("type", type_token, "Dynkin type, e.g. E8")->required();
  bounds->add_option("--period", period, "Period p (default: Coxeter number + 2)");
  bounds->add_flag("--min2", min2, "Also report the refined bounds for entries >= 2");
  bounds->add_flag("--json", json, "Emit JSON");

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustively enumerate friezes");
  enumerate->add_option("type", type_token, "Dynkin type")->required();
  enumerate->add_option("--strategy", strategy, "column_dfs or row_seeded")
      ->check(CLI::IsMember({"column_dfs", "row_seeded"}));
  enumerate->add_option("--cap", cap, "Entry cap override (marks the result incomplete)");
  enumerate->add_option("--period-cap", period_cap, "Period used for the caps (default: Coxeter number + 2)");
  enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--budget", budget, "Branching node budget");
  enumerate->add_flag("--json", json, "Emit JSON");

  auto* per = app.add_subcommand("period", "Detect the minimal period of a seed column");
  per->add_option("file", file, "Frieze document (its column 0 is the seed)");
  per->add_option("--seed", seed, "Comma-separated seed column");
  per->add_option("--type", type_token, "Dynkin type of --seed");
  per->add_option("--cap", cap_steps, "Maximum number of steps (default: Coxeter number + 2)");

  auto* quiver = app.add_subcommand("quiver", "Emit the repetition quiver as Graphviz DOT");
  quiver->add_option("type", type_token, "Dynkin type")->required();
  quiver->add_option("--from", from, "First column");
  quiver->add_option("--to", to, "Last column");
  quiver->add_option("file", file, "Frieze document supplying labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(file);
    if (*analyze) return cmd_analyze(file, period, json);
    if (*bounds) return cmd_bounds(type_token, period, min2, json);
    if (*enumerate) return cmd_enumerate(type_token, strategy, cap, period_cap, jobs, budget, json);
    if (*per) {
      if (file.empty() == seed.empty()) throw UsageError("give exactly one of a file or --seed");
      return cmd_period(file, seed, type_token, cap_steps);
    }
    if (*quiver) return cmd_quiver(type_token, from, to, file);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
