#include "hillwalk/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hillwalk/criteria.hpp"
#include "hillwalk/report.hpp"
#include "hillwalk/spectra.hpp"
#include "hillwalk/verify.hpp"

namespace hillwalk {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

long to_long(const nlohmann::json& j, const char* what) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    try {
      std::size_t used = 0;
      const long v = std::stol(j.get<std::string>(), &used);
      if (used == j.get<std::string>().size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw UsageError(std::string("expected an integer for ") + what);
}

double to_double(const nlohmann::json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return std::stod(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw UsageError(std::string("expected a number for ") + what);
}

// JSON object, "@file", or the "a,b,R,S" shorthand.
nlohmann::json potential_json(const nlohmann::json& value) {
  if (value.is_object()) return value;
  if (!value.is_string()) throw UsageError("potential must be an object or a string");
  std::string text = value.get<std::string>();
  if (!text.empty() && text.front() == '@') text = read_file(text.substr(1));
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return nlohmann::json::parse(text);
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("potential shorthand is a,b,R,S");
  return {{"a", parts[0]}, {"b", parts[1]}, {"R", std::stol(parts[2])}, {"S", std::stol(parts[3])}};
}

std::vector<long> long_list(const nlohmann::json& value) {
  std::vector<long> out;
  if (value.is_array()) {
    for (const auto& v : value) out.push_back(to_long(v, "n-list"));
  } else {
    for (const auto& part : split(value.get<std::string>(), ',')) out.push_back(to_long(part, "n-list"));
  }
  return out;
}

struct RunConfig {
  std::optional<PotentialSpec> potential;
  BoundaryCondition bc = BoundaryCondition::PeriodicPlus;
  long K = 64;
  std::optional<long> N;
  ShellCaps caps;
  std::optional<mpfr_prec_t> precision;
  std::optional<std::string> delta;
  long lo = 1;
  long hi = 12;
  bool range_given = false;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<std::vector<long>> n_list;
  ExactScalar z;
  std::string criterion = "C1";
  std::optional<double> pair_tol;
  Rational perturbation = 0;
  Thresholds thresholds;
};

RunConfig interpret(const nlohmann::json& c) {
  RunConfig cfg;
  if (c.contains("potential")) cfg.potential = parse_potential(potential_json(c.at("potential")));
  if (c.contains("bc")) cfg.bc = parse_boundary_condition(c.at("bc").get<std::string>());
  if (c.contains("K")) cfg.K = to_long(c.at("K"), "K");
  if (cfg.K < 1) throw UsageError("K must be positive");
  if (c.contains("N")) {
    cfg.N = to_long(c.at("N"), "N");
    if (*cfg.N < 0) throw UsageError("N must be non-negative");
  }
  if (c.contains("caps")) {
    const auto caps = long_list(c.at("caps"));
    if (caps.size() != 2 || caps[0] < 0 || caps[1] < 0) {
      throw UsageError("caps are two non-negative integers p,q");
    }
    cfg.caps.x = caps[0];
    cfg.caps.y = caps[1];
  }
  if (c.contains("precision")) {
    cfg.precision = to_long(c.at("precision"), "precision");
    require_precision(*cfg.precision);
  }
  if (c.contains("delta")) cfg.delta = c.at("delta").get<std::string>();
  if (c.contains("range")) {
    const auto text = c.at("range").get<std::string>();
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("range is lo:hi");
    cfg.lo = to_long(text.substr(0, colon), "range");
    cfg.hi = to_long(text.substr(colon + 1), "range");
    if (cfg.lo < 1 || cfg.hi < cfg.lo) throw UsageError("range needs 1 <= lo <= hi");
    cfg.range_given = true;
  }
  if (c.contains("format")) {
    cfg.format = c.at("format").get<std::string>();
    if (*cfg.format != "json" && *cfg.format != "csv") throw UsageError("format is json or csv");
  }
  if (c.contains("out")) cfg.out = c.at("out").get<std::string>();
  if (c.contains("n_list")) {
    cfg.n_list = long_list(c.at("n_list"));
    for (long n : *cfg.n_list) {
      if (n < 1) throw UsageError("indices must be positive");
    }
  }
  if (c.contains("z")) cfg.z = parse_scalar(c.at("z"));
  if (c.contains("criterion")) cfg.criterion = c.at("criterion").get<std::string>();
  if (c.contains("pair_tol")) {
    cfg.pair_tol = to_double(c.at("pair_tol"), "pair-tol");
    if (!(*cfg.pair_tol > 0)) throw UsageError("pair-tol must be positive");
  }
  if (c.contains("perturb")) cfg.perturbation = parse_scalar(c.at("perturb")).re();
  if (c.contains("thresholds")) {
    const auto& t = c.at("thresholds");
    cfg.thresholds.divergence = t.value("divergence", cfg.thresholds.divergence);
    cfg.thresholds.cap = t.value("cap", cfg.thresholds.cap);
    cfg.thresholds.monotone_window = t.value("monotone_window", cfg.thresholds.monotone_window);
    cfg.thresholds.growth_guard = t.value("growth_guard", cfg.thresholds.growth_guard);
  }
  return cfg;
}

const TwoTermPotential require_two_term(const RunConfig& cfg, const char* what) {
  if (!cfg.potential) throw UsageError("--potential is required");
  if (!cfg.potential->params) {
    throw UsageError(std::string(what) + " needs a two-term potential a e^{-2iRx} + b e^{2iSx}");
  }
  return {cfg.potential->potential, *cfg.potential->params};
}

std::vector<long> beta_indices(const RunConfig& cfg) {
  if (cfg.n_list) return *cfg.n_list;
  std::vector<long> ns;
  for (long n = cfg.lo; n <= cfg.hi; ++n) ns.push_back(n);
  return ns;
}

void emit_beta(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.potential) throw UsageError("--potential is required");
  const auto rows = beta_table(*cfg.potential, beta_indices(cfg), cfg.z, cfg.caps);
  if (cfg.format.value_or("csv") == "csv") {
    write_beta_csv(out, rows);
  } else {
    out << beta_table_json(rows).dump(2) << '\n';
  }
}

SpectrumOptions spectrum_options(const RunConfig& cfg) {
  SpectrumOptions opts;
  opts.K = cfg.K;
  opts.N = cfg.N.value_or(-1);
  opts.n_max = cfg.hi;
  opts.precision = cfg.precision.value_or(0);
  if (cfg.pair_tol) opts.pairing_tolerance = *cfg.pair_tol;
  return opts;
}

void emit_spectrum(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.potential) throw UsageError("--potential is required");
  const auto report = compute_spectrum(cfg.potential->potential, cfg.bc, spectrum_options(cfg));
  if (cfg.format.value_or("csv") == "csv") {
    write_spectrum_csv(out, report);
  } else {
    out << spectrum_to_json(report).dump(2) << '\n';
  }
}

// Pairs refined at high precision, restricted to lo ≤ n ≤ hi.
std::vector<SpectralPair> refined_pairs(const RunConfig& cfg, const TwoTermPotential& pot) {
  SpectrumOptions opts = spectrum_options(cfg);
  opts.precision = cfg.precision.value_or(kDefaultPrecision);
  opts.pairing_tolerance = cfg.pair_tol.value_or(1e-40);
  if (!cfg.N) opts.N = cfg.lo - 1;
  std::vector<SpectralPair> pairs;
  for (auto& p : compute_spectrum(pot.potential, cfg.bc, opts).pairs) {
    if (p.n >= cfg.lo && p.n <= cfg.hi) pairs.push_back(std::move(p));
  }
  return pairs;
}

void write_verdict(const RunConfig& cfg, const BasisVerdict& verdict, std::ostream& out) {
  if (cfg.format.value_or("json") == "json") {
    out << verdict_to_json(verdict).dump(2) << '\n';
    return;
  }
  out << "n,set,value\n";
  for (const auto& row : verdict.rows) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", row.value);
    out << row.n << ',' << (row.structural_zero ? "delta0" : "delta1") << ','
        << (row.structural_zero ? "" : buf) << '\n';
  }
  out << "# conclusion," << to_string(verdict.conclusion) << '\n';
}

void emit_verdict(const RunConfig& cfg, std::ostream& out) {
  const TwoTermPotential pot = require_two_term(cfg, "verdict");
  const TwoTermParams& p = pot.params;
  FamilyOptions family;
  family.caps = cfg.caps;
  if (cfg.precision) family.precision = *cfg.precision;
  const std::string& c = cfg.criterion;

  if (c == "commensurate") {
    write_verdict(cfg, commensurate_report(p.a, p.b, p.R, p.S, cfg.bc, cfg.lo, cfg.hi, family), out);
  } else if (c == "near-multiple") {
    if (p.R != 1) throw UsageError("near-multiple needs R = 1");
    write_verdict(cfg, near_multiple_report(p.a, p.b, p.S, cfg.lo, cfg.hi, family), out);
  } else if (c == "equal-frequency") {
    if (p.R != p.S) throw UsageError("equal-frequency needs R = S");
    write_verdict(cfg, equal_frequency_verdict(p.a, p.b, p.R, cfg.bc, cfg.hi, cfg.caps), out);
  } else if (c == "compare") {
    ComparisonOptions opts;
    opts.spectrum = spectrum_options(cfg);
    opts.spectrum.precision = cfg.precision.value_or(kDefaultPrecision);
    opts.spectrum.pairing_tolerance = cfg.pair_tol.value_or(1e-40);
    if (!cfg.N) opts.spectrum.N = cfg.lo - 1;
    opts.caps = cfg.caps;
    opts.thresholds = cfg.thresholds;
    const auto comparison = compare_criteria(pot, cfg.bc, opts);
    if (cfg.format.value_or("json") == "json") {
      out << comparison_to_json(comparison).dump(2) << '\n';
    } else {
      write_verdict(cfg, comparison.walk_ratio, out);
      write_verdict(cfg, comparison.centered_ratio, out);
      write_verdict(cfg, comparison.deviation_ratio, out);
    }
  } else if (c == "C1") {
    std::vector<long> indices;
    if (cfg.n_list) {
      indices = *cfg.n_list;
    } else if (cfg.delta) {
      indices = IndexSet::parse(*cfg.delta, cfg.lo, cfg.hi, parity_for(cfg.bc)).indices(p);
    } else {
      for (long n = cfg.lo; n <= cfg.hi; ++n) {
        if (in_parity_class(cfg.bc, n)) indices.push_back(n);
      }
    }
    WalkCriterionOptions opts;
    opts.z = cfg.z;
    opts.caps = cfg.caps;
    opts.thresholds = cfg.thresholds;
    write_verdict(cfg, beta_ratio_verdict(pot, indices, opts), out);
  } else if (c == "C2") {
    if (cfg.bc == BoundaryCondition::Dirichlet) throw UsageError("C2 needs per+ or per-");
    write_verdict(cfg, centered_ratio_verdict(refined_pairs(cfg, pot), pot, cfg.caps, cfg.thresholds),
                  out);
  } else if (c == "C3") {
    if (cfg.bc == BoundaryCondition::Dirichlet) throw UsageError("C3 needs per+ or per-");
    write_verdict(cfg, deviation_ratio_verdict(refined_pairs(cfg, pot), cfg.thresholds), out);
  } else {
    throw UsageError("unknown criterion " + c);
  }
}

int emit_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opts;
  if (cfg.precision) opts.precision = *cfg.precision;
  opts.perturbation = cfg.perturbation;
  const auto results = run_identity_suite(opts);
  bool ok = true;
  if (cfg.format.value_or("text") == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"expected", r.expected},
                     {"actual", r.actual}});
      ok = ok && r.passed;
    }
    out << nlohmann::json{{"checks", arr}, {"passed", ok}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "\n      expected: " << r.expected
          << "\n      actual:   " << r.actual << '\n';
      ok = ok && r.passed;
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

nlohmann::json preset_config(const std::string& name) {
  const auto two = [](const char* a, const char* b, long R, long S) {
    return nlohmann::json{{"a", a}, {"b", b}, {"R", R}, {"S", S}};
  };
  if (name == "thm31") {
    return {{"potential", two("1", "1", 1, 3)}, {"bc", "per+"}, {"range", "1:6"},
            {"criterion", "commensurate"}};
  }
  if (name == "thm5") {
    return {{"potential", two("1", "1", 1, 3)}, {"bc", "per-"}, {"range", "2:7"},
            {"criterion", "near-multiple"}};
  }
  if (name == "prop20") {
    return {{"potential", two("1", "i", 2, 2)}, {"bc", "per-"}, {"range", "1:12"},
            {"criterion", "equal-frequency"}};
  }
  if (name == "crit-compare") {
    return {{"potential", two("1", "2", 1, 1)}, {"bc", "per+"}, {"range", "6:12"},
            {"precision", 256}, {"criterion", "compare"}};
  }
  throw UsageError("unknown preset " + name);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Walk-sum functionals, spectra and basis verdicts for Hill operators", "hillwalk"};
  app.require_subcommand(1);
  app.fallthrough();

  // Flag values keyed by config name; only flags that were given override.
  std::map<std::string, std::string> flags;
  const auto flag = [&](const std::string& name, const std::string& key, const std::string& help) {
    app.add_option_function<std::string>(
        name, [&flags, key](const std::string& v) { flags[key] = v; }, help);
  };
  flag("--potential", "potential", "JSON literal, @file, or a,b,R,S shorthand");
  flag("--bc", "bc", "per+, per- or dirichlet");
  flag("--K", "K", "Galerkin truncation");
  flag("--N", "N", "working cutoff (default: chosen from the spectrum)");
  flag("--caps", "caps", "shell caps p,q for beta+ and beta-");
  flag("--precision", "precision", "MPFR bits");
  flag("--delta", "delta", "index set: rsd, sm-1, mod-R-nonzero, R-multiples or list:n1,n2,...");
  flag("--range", "range", "lo:hi (of n, or of m for rsd and sm-1 families)");
  flag("--format", "format", "json or csv");
  flag("--out", "out", "output file (default stdout)");
  flag("--n-list", "n_list", "explicit indices n1,n2,...");
  flag("--z", "z", "evaluation point, e.g. 0, 1/2, -i, 1+2i");
  flag("--criterion", "criterion",
       "C1, C2, C3, commensurate, near-multiple, equal-frequency or compare");
  flag("--pair-tol", "pair_tol", "gap below which a pair counts as double");
  flag("--perturb", "perturb", "verify only: shift a coefficient to force a failing identity");
  std::string preset;
  std::string config_path;
  app.add_option("--preset", preset, "thm31, thm5, prop20 or crit-compare");
  app.add_option("--config", config_path, "JSON config file; flags override it");

  auto* beta = app.add_subcommand("beta", "beta+, beta- and alpha at z over a list of n");
  auto* spectrum = app.add_subcommand("spectrum", "periodic, antiperiodic or Dirichlet spectrum");
  auto* verdict = app.add_subcommand("verdict", "basis verdict from the walk or spectral criteria");
  auto* verify = app.add_subcommand("verify", "identity and cross-path checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  RunConfig cfg;
  try {
    nlohmann::json merged = preset.empty() ? nlohmann::json::object() : preset_config(preset);
    if (!config_path.empty()) {
      const auto file = nlohmann::json::parse(read_file(config_path));
      if (!file.is_object()) throw UsageError("config must be a JSON object");
      for (const auto& [k, v] : file.items()) merged[k] = v;
    }
    for (const auto& [k, v] : flags) merged[k] = v;
    cfg = interpret(merged);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.out) {
    file.open(*cfg.out);
    if (!file) {
      err << "error: cannot write " << *cfg.out << '\n';
      return kExitUsage;
    }
    sink = &file;
  }

  const bool is_verdict = verdict->parsed();
  try {
    if (beta->parsed()) emit_beta(cfg, *sink);
    if (spectrum->parsed()) emit_spectrum(cfg, *sink);
    if (is_verdict) emit_verdict(cfg, *sink);
    if (verify->parsed()) return emit_verify(cfg, *sink);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SingularityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSingular;
  } catch (const LocalizationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitLocalization;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return is_verdict ? kExitCriteria : kExitFailure;
  }
}

}  // namespace hillwalk
