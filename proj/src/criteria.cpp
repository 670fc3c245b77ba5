#include "hillwalk/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <sstream>

namespace hillwalk {

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::ContainsBasis: return "contains-basis";
    case Conclusion::NoBasis: return "no-basis";
    case Conclusion::Inconclusive: return "inconclusive";
  }
  return "?";
}

Parity parity_for(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::PeriodicPlus: return Parity::Even;
    case BoundaryCondition::PeriodicMinus: return Parity::Odd;
    case BoundaryCondition::Dirichlet: return Parity::Both;
  }
  return Parity::Both;
}

namespace {

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Both: return "both";
  }
  return "?";
}

const char* generator_name(IndexSet::Generator g) {
  switch (g) {
    case IndexSet::Generator::RsdMultiples: return "rsd";
    case IndexSet::Generator::SmMinusOne: return "sm-1";
    case IndexSet::Generator::ModRNonzero: return "mod-R-nonzero";
    case IndexSet::Generator::RMultiples: return "R-multiples";
    case IndexSet::Generator::Explicit: return "list";
  }
  return "?";
}

bool parity_ok(Parity p, long n) {
  if (p == Parity::Even) return n % 2 == 0;
  if (p == Parity::Odd) return n % 2 != 0;
  return true;
}

}  // namespace

std::vector<long> IndexSet::indices(const TwoTermParams& params) const {
  std::vector<long> out;
  const auto keep = [&](long n) {
    if (n >= 1 && parity_ok(parity, n)) out.push_back(n);
  };
  switch (generator) {
    case Generator::RsdMultiples:
      for (long m = lo; m <= hi; ++m) keep(params.r * params.s * params.d * m);
      break;
    case Generator::SmMinusOne:
      for (long m = lo; m <= hi; ++m) keep(params.s * m - 1);
      break;
    case Generator::ModRNonzero:
      for (long n = lo; n <= hi; ++n) {
        if (n % params.R != 0) keep(n);
      }
      break;
    case Generator::RMultiples:
      for (long n = lo; n <= hi; ++n) {
        if (n % params.R == 0) keep(n);
      }
      break;
    case Generator::Explicit:
      for (long n : explicit_list) keep(n);
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string IndexSet::describe() const {
  std::ostringstream os;
  os << generator_name(generator);
  if (generator == Generator::Explicit) {
    os << ':';
    for (std::size_t i = 0; i < explicit_list.size(); ++i) os << (i ? "," : "") << explicit_list[i];
  } else {
    const bool over_m = generator == Generator::RsdMultiples || generator == Generator::SmMinusOne;
    os << ' ' << (over_m ? "m" : "n") << " in [" << lo << ", " << hi << ']';
  }
  os << ", parity " << parity_name(parity);
  return os.str();
}

nlohmann::json IndexSet::to_json() const {
  nlohmann::json j = {{"generator", generator_name(generator)},
                      {"parity", parity_name(parity)},
                      {"description", describe()}};
  if (generator == Generator::Explicit) {
    j["list"] = explicit_list;
  } else {
    j["range"] = {lo, hi};
  }
  return j;
}

IndexSet IndexSet::parse(const std::string& generator, long lo, long hi, Parity parity) {
  IndexSet set;
  set.lo = lo;
  set.hi = hi;
  set.parity = parity;
  if (generator == "rsd") {
    set.generator = Generator::RsdMultiples;
  } else if (generator == "sm-1") {
    set.generator = Generator::SmMinusOne;
  } else if (generator == "mod-R-nonzero") {
    set.generator = Generator::ModRNonzero;
  } else if (generator == "R-multiples") {
    set.generator = Generator::RMultiples;
  } else if (generator.rfind("list:", 0) == 0) {
    set.generator = Generator::Explicit;
    std::stringstream ss(generator.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) set.explicit_list.push_back(std::stol(item));
    }
  } else {
    throw DomainError("unknown index set '" + generator +
                      "' (rsd, sm-1, mod-R-nonzero, R-multiples, list:...)");
  }
  return set;
}

double beta_imbalance(const ExactScalar& beta_plus, const ExactScalar& beta_minus) {
  if (beta_plus.is_zero() || beta_minus.is_zero()) {
    throw DegenerateError("t_n needs nonzero beta values; route this index to the identically-zero set");
  }
  Rational q = beta_plus.norm() / beta_minus.norm();
  if (q < 1) q = 1 / q;
  return sqrt(BigFloat(q, 128)).to_double();
}

Conclusion threshold_conclusion(const std::vector<double>& values, const Thresholds& thresholds) {
  if (values.empty()) return Conclusion::ContainsBasis;
  const auto window = static_cast<std::size_t>(std::max(thresholds.monotone_window, 1));
  bool growing = values.size() >= window;
  if (growing) {
    for (std::size_t i = values.size() - window + 1; i < values.size(); ++i) {
      growing = growing && values[i] > values[i - 1];
    }
  }
  if (*std::max_element(values.begin(), values.end()) <= thresholds.cap) {
    const double first = values[values.size() - window];
    const bool climbing = growing && window > 1 && values.back() >= thresholds.growth_guard * first;
    return climbing ? Conclusion::Inconclusive : Conclusion::ContainsBasis;
  }
  if (values.back() > thresholds.divergence && growing) return Conclusion::NoBasis;
  return Conclusion::Inconclusive;
}

namespace {

constexpr const char* kFiniteRangeCaveat =
    "finite index range: the limsup is extrapolated from the tabulated indices";

nlohmann::json scalar_json(const ExactScalar& x) {
  return {{"exact", x.to_string()}, {"abs", std::sqrt(x.norm().get_d())}};
}

std::vector<double> monitored(const std::vector<EvidenceRow>& rows) {
  std::vector<double> values;
  for (const auto& row : rows) {
    if (!row.structural_zero) values.push_back(row.value);
  }
  return values;
}

// log|x/y| at the given precision.
double log_modulus_ratio(const ExactScalar& x, const ExactScalar& y, mpfr_prec_t bits) {
  const BigFloat q(x.norm() / y.norm(), bits);
  return 0.5 * log(q).to_double();
}

// |β(z)| within a factor 2 of |β(0)| for z ∈ {±1, ±i}.
bool stable_near_zero(const TwoTermPotential& pot, long n, const ShellCaps& caps,
                      const ExactScalar& bp0, const ExactScalar& bm0) {
  const ExactScalar i = ExactScalar::imaginary_unit();
  for (const ExactScalar& z : {ExactScalar(1), ExactScalar(-1), i, -i}) {
    const ExactScalar bp = beta_plus(pot, n, z, caps.x).value;
    const ExactScalar bm = beta_minus(pot, n, z, caps.y).value;
    for (const auto& [at, base] : {std::pair{bp.norm(), bp0.norm()}, std::pair{bm.norm(), bm0.norm()}}) {
      if (at * 4 < base || at > base * 4) return false;
    }
  }
  return true;
}

}  // namespace

BasisVerdict beta_ratio_verdict(const TwoTermPotential& pot, const std::vector<long>& indices,
                                const WalkCriterionOptions& options) {
  BasisVerdict verdict;
  verdict.criterion = "C1";
  verdict.thresholds = options.thresholds;

  const auto evaluate = [&pot, &options](long n) {
    EvidenceRow row;
    row.n = n;
    if (!shells_feasible(pot.params, n, WalkKind::X) && !shells_feasible(pot.params, n, WalkKind::Y)) {
      row.structural_zero = true;
      row.details["reason"] = "no step counts reach +-n";
      return row;
    }
    const BetaValue bp = beta_plus(pot, n, options.z, options.caps.x);
    const BetaValue bm = beta_minus(pot, n, options.z, options.caps.y);
    row.value = beta_imbalance(bp.value, bm.value);
    row.details["beta_plus"] = scalar_json(bp.value);
    row.details["beta_minus"] = scalar_json(bm.value);
    row.details["tail_plus"] = bp.tail.unbounded ? nlohmann::json(nullptr) : nlohmann::json(bp.tail.value);
    row.details["tail_minus"] = bm.tail.unbounded ? nlohmann::json(nullptr) : nlohmann::json(bm.tail.value);
    if (options.check_stability) {
      const ExactScalar bp0 = options.z.is_zero() ? bp.value : beta_plus(pot, n, 0, options.caps.x).value;
      const ExactScalar bm0 = options.z.is_zero() ? bm.value : beta_minus(pot, n, 0, options.caps.y).value;
      row.details["stable"] = stable_near_zero(pot, n, options.caps, bp0, bm0);
    }
    return row;
  };

  std::vector<std::future<EvidenceRow>> jobs;
  for (long n : indices) jobs.push_back(std::async(std::launch::async, evaluate, n));
  nlohmann::json delta0 = nlohmann::json::array();
  nlohmann::json delta1 = nlohmann::json::array();
  bool unstable = false;
  bool tail_open = false;
  for (auto& job : jobs) {
    EvidenceRow row = job.get();
    (row.structural_zero ? delta0 : delta1).push_back(row.n);
    if (row.details.contains("stable") && !row.details["stable"].get<bool>()) unstable = true;
    if (row.details.contains("tail_plus") &&
        (row.details["tail_plus"].is_null() || row.details["tail_minus"].is_null())) {
      tail_open = true;
    }
    verdict.rows.push_back(std::move(row));
  }
  verdict.delta = {{"indices", indices}, {"delta0", delta0}, {"delta1", delta1},
                   {"z", options.z.to_string()}};
  verdict.conclusion = threshold_conclusion(monitored(verdict.rows), options.thresholds);
  verdict.rule = "thresholds on t_n over the nonzero indices";
  verdict.caveats.push_back(kFiniteRangeCaveat);
  if (unstable) {
    verdict.caveats.push_back("two-sided bound |beta(z)| ~ |beta(0)| (c = 2) failed at a sampled z");
    verdict.conclusion = Conclusion::Inconclusive;
  }
  if (tail_open) verdict.caveats.push_back("shell tail estimate unbounded at some index");
  return verdict;
}

double centered_beta_ratio(const SpectralPair& pair, const TwoTermPotential& pot,
                           const ShellCaps& caps) {
  if (pair.is_double) throw DegenerateError("double pair at n = " + std::to_string(pair.n));
  // z* to double accuracy is ample: β is smooth in z on |z| < 1.
  const ExactScalar z = BigComplex(pair.z_star.to_complex(), kMinPrecision).to_exact();
  return beta_imbalance(beta_plus(pot, pair.n, z, caps.x).value,
                        beta_minus(pot, pair.n, z, caps.y).value);
}

double dirichlet_deviation_ratio(const SpectralPair& pair) {
  if (!pair.mu || !pair.deviation) throw DomainError("pair has no Dirichlet eigenvalue attached");
  if (pair.gap.is_zero()) throw DegenerateError("zero gap at n = " + std::to_string(pair.n));
  return (*pair.deviation / pair.gap).to_double();
}

namespace {

BasisVerdict pair_verdict(const char* criterion, const std::vector<SpectralPair>& pairs,
                          const Thresholds& thresholds,
                          const std::function<double(const SpectralPair&)>& quantity) {
  BasisVerdict verdict;
  verdict.criterion = criterion;
  verdict.thresholds = thresholds;
  nlohmann::json indices = nlohmann::json::array();
  nlohmann::json doubles = nlohmann::json::array();
  for (const auto& pair : pairs) {
    EvidenceRow row;
    row.n = pair.n;
    indices.push_back(pair.n);
    row.details["gap"] = pair.gap.to_double();
    if (pair.is_double) {
      row.structural_zero = true;
      row.details["reason"] = "double pair";
      doubles.push_back(pair.n);
    } else {
      row.value = quantity(pair);
    }
    verdict.rows.push_back(std::move(row));
  }
  verdict.delta = {{"indices", indices}, {"double", doubles}};
  verdict.conclusion = threshold_conclusion(monitored(verdict.rows), thresholds);
  verdict.rule = "thresholds on the monitored ratio over the simple pairs";
  verdict.caveats.push_back(kFiniteRangeCaveat);
  return verdict;
}

}  // namespace

BasisVerdict centered_ratio_verdict(const std::vector<SpectralPair>& pairs,
                                    const TwoTermPotential& pot, const ShellCaps& caps,
                                    const Thresholds& thresholds) {
  return pair_verdict("C2", pairs, thresholds,
                      [&](const SpectralPair& p) { return centered_beta_ratio(p, pot, caps); });
}

BasisVerdict deviation_ratio_verdict(const std::vector<SpectralPair>& pairs,
                                     const Thresholds& thresholds) {
  return pair_verdict("C3", pairs, thresholds,
                      [](const SpectralPair& p) { return dirichlet_deviation_ratio(p); });
}

namespace {

struct FamilyRow {
  long m;
  long n;
  ExactScalar bp;
  ExactScalar bm;
};

std::vector<FamilyRow> family_rows(const TwoTermPotential& pot, const std::vector<std::pair<long, long>>& mn,
                                   const ShellCaps& caps) {
  std::vector<std::future<FamilyRow>> jobs;
  for (const auto& [m, n] : mn) {
    jobs.push_back(std::async(std::launch::async, [&pot, &caps, m = m, n = n] {
      return FamilyRow{m, n, beta_plus(pot, n, 0, caps.x).value, beta_minus(pot, n, 0, caps.y).value};
    }));
  }
  std::vector<FamilyRow> rows;
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

}  // namespace

BasisVerdict commensurate_report(const ExactScalar& a, const ExactScalar& b, long R, long S,
                                 BoundaryCondition bc, long m_lo, long m_hi,
                                 const FamilyOptions& options) {
  if (R == S) throw DomainError("this family needs R != S");
  if (m_lo < 1 || m_hi < m_lo) throw DomainError("m range must satisfy 1 <= lo <= hi");
  const TwoTermPotential pot = two_term(a, b, R, S);
  const TwoTermParams& p = pot.params;
  const long rsd = p.r * p.s * p.d;
  const double spread = static_cast<double>(std::labs(p.r - p.s));

  std::vector<std::pair<long, long>> mn;
  for (long m = m_lo; m <= m_hi; ++m) mn.emplace_back(m, rsd * m);
  const auto table = family_rows(pot, mn, options.caps);

  BasisVerdict verdict;
  verdict.criterion = "C1";
  verdict.delta = {{"generator", "rsd"}, {"rsd", rsd}, {"range", {m_lo, m_hi}}};
  bool monotone = true;
  bool decay = true;
  bool decrement = true;
  std::optional<double> previous;
  for (const auto& row : table) {
    if (row.bp.is_zero() || row.bm.is_zero()) {
      throw DegenerateError("beta vanished at n = " + std::to_string(row.n));
    }
    const double log_ratio = log_modulus_ratio(row.bm, row.bp, options.precision);
    const double log_min = -std::fabs(log_ratio);
    const double log_m = std::log(static_cast<double>(row.m));
    EvidenceRow ev;
    ev.n = row.n;
    ev.value = std::exp(log_min);
    ev.details = {{"m", row.m},
                  {"in_class", in_parity_class(bc, row.n)},
                  {"beta_plus", scalar_json(row.bp)},
                  {"beta_minus", scalar_json(row.bm)},
                  {"log_ratio_minus_plus", log_ratio},
                  {"log_min_ratio", log_min},
                  {"predicted_decay", spread * static_cast<double>(row.m) * log_m}};
    if (-log_min < options.slack * spread * static_cast<double>(row.m) * log_m) decay = false;
    if (previous) {
      const double step = *previous - log_min;
      ev.details["log_decrement"] = step;
      if (step <= 0) monotone = false;
      if (step < options.slack * spread * log_m) decrement = false;
    }
    previous = log_min;
    verdict.rows.push_back(std::move(ev));
  }
  verdict.delta["monotone"] = monotone;
  verdict.delta["decay_ok"] = decay;
  verdict.delta["decrement_ok"] = decrement;

  const bool odd_family = rsd % 2 != 0;
  switch (bc) {
    case BoundaryCondition::PeriodicPlus:
      verdict.conclusion = Conclusion::NoBasis;
      verdict.rule = "R != S: the periodic root system contains no basis";
      break;
    case BoundaryCondition::PeriodicMinus:
      if (odd_family) {
        verdict.conclusion = Conclusion::NoBasis;
        verdict.rule = "R, S odd: the odd multiples of rsd are antiperiodic indices, no basis";
      } else {
        verdict.conclusion = Conclusion::Inconclusive;
        verdict.rule = "rsd even: every n = rsd*m is even, so the antiperiodic case is not covered";
      }
      break;
    case BoundaryCondition::Dirichlet:
      verdict.conclusion = Conclusion::Inconclusive;
      verdict.rule = "rule stated for periodic and antiperiodic conditions only";
      break;
  }
  if (!monotone) verdict.caveats.push_back("corroboration: min ratio is not monotonically decreasing");
  if (!decay) verdict.caveats.push_back("corroboration: decay slower than the |r-s| m log m law");
  if (!decrement) verdict.caveats.push_back("corroboration: a per-step log decrement is below the |r-s| log m law");
  return verdict;
}

BasisVerdict near_multiple_report(const ExactScalar& a, const ExactScalar& b, long s, long m_lo,
                                  long m_hi, const FamilyOptions& options) {
  if (s < 3) throw DomainError("this family needs s >= 3");
  if (m_lo < 1 || m_hi < m_lo) throw DomainError("m range must satisfy 1 <= lo <= hi");
  const TwoTermPotential pot = two_term(a, b, 1, s);

  std::vector<std::pair<long, long>> mn;
  for (long m = m_lo; m <= m_hi; ++m) mn.emplace_back(m, s * m - 1);
  const auto table = family_rows(pot, mn, options.caps);

  BasisVerdict verdict;
  verdict.criterion = "C1";
  verdict.delta = {{"generator", "sm-1"},
                   {"s", s},
                   {"range", {m_lo, m_hi}},
                   {"parity", s % 2 == 0 ? "all odd" : "both parities"}};
  bool collapse = true;
  std::optional<double> previous;
  for (const auto& row : table) {
    if (row.bp.is_zero() || row.bm.is_zero()) {
      throw DegenerateError("beta vanished at n = " + std::to_string(row.n));
    }
    const double log_ratio = log_modulus_ratio(row.bm, row.bp, options.precision);
    const double log_m = std::log(static_cast<double>(row.m));
    EvidenceRow ev;
    ev.n = row.n;
    ev.value = std::exp(log_ratio);
    ev.details = {{"m", row.m},
                  {"odd", row.n % 2 != 0},
                  {"beta_plus", scalar_json(row.bp)},
                  {"beta_minus", scalar_json(row.bm)},
                  {"log_ratio_minus_plus", log_ratio},
                  {"predicted_log_decay", 2.0 * static_cast<double>(s - 1) * static_cast<double>(row.m) * log_m}};
    if (previous) {
      const double step = *previous - log_ratio;
      ev.details["log_step"] = step;
      ev.details["factor_floor"] = 2.0 * log_m;
      if (step < 2.0 * log_m) collapse = false;
    }
    previous = log_ratio;
    verdict.rows.push_back(std::move(ev));
  }
  verdict.delta["superexponential"] = collapse;
  verdict.conclusion = Conclusion::NoBasis;
  verdict.rule = s % 2 == 0
                     ? "s >= 3: no antiperiodic basis; s even puts every index sm-1 in the odd class"
                     : "s >= 3: no antiperiodic basis; s odd gives indices of both parities";
  if (!collapse) {
    verdict.caveats.push_back("corroboration: a successive ratio fell by less than m^2");
  }
  return verdict;
}

BasisVerdict equal_frequency_verdict(const ExactScalar& a, const ExactScalar& b, long R,
                                     BoundaryCondition bc, long n_max, const ShellCaps& caps) {
  if (bc == BoundaryCondition::Dirichlet) {
    throw DomainError("rule stated for periodic and antiperiodic conditions");
  }
  const TwoTermPotential pot = two_term(a, b, R, R);
  const Rational q = a.norm() / b.norm();
  const double base = std::sqrt((q < 1 ? Rational(1 / q) : q).get_d());

  std::vector<long> indices;
  for (long n = 1; n <= n_max; ++n) {
    if (in_parity_class(bc, n)) indices.push_back(n);
  }
  WalkCriterionOptions walk;
  walk.caps = caps;
  walk.check_stability = false;
  BasisVerdict verdict = beta_ratio_verdict(pot, indices, walk);
  for (auto& row : verdict.rows) {
    if (row.structural_zero) continue;
    const double expected = std::pow(base, static_cast<double>(row.n / R));
    row.details["expected"] = expected;
    row.details["ratio_to_expected"] = row.value / expected;
  }

  const bool equal_moduli = a.norm() == b.norm();
  if (R % 2 == 0 && bc == BoundaryCondition::PeriodicMinus) {
    verdict.conclusion = Conclusion::ContainsBasis;
    verdict.rule = "R even, antiperiodic: beta vanishes identically at every odd n";
    const bool all_zero = std::all_of(verdict.rows.begin(), verdict.rows.end(),
                                      [](const EvidenceRow& r) { return r.structural_zero; });
    verdict.delta["all_identically_zero"] = all_zero;
    if (!all_zero) verdict.caveats.push_back("corroboration: a nonzero beta at an odd index");
  } else {
    verdict.conclusion = equal_moduli ? Conclusion::ContainsBasis : Conclusion::NoBasis;
    verdict.rule = equal_moduli ? "|a| = |b|: contains a basis" : "|a| != |b|: no basis";
  }
  verdict.delta["equal_moduli"] = equal_moduli;
  return verdict;
}

CriteriaComparison compare_criteria(const TwoTermPotential& pot, BoundaryCondition bc,
                                    const ComparisonOptions& options) {
  SpectrumOptions spectrum = options.spectrum;
  if (spectrum.precision == 0) spectrum.precision = kDefaultPrecision;
  spectrum.with_dirichlet = true;
  const SpectrumReport report = compute_spectrum(pot.potential, bc, spectrum);

  std::vector<long> indices;
  for (const auto& pair : report.pairs) indices.push_back(pair.n);
  WalkCriterionOptions walk;
  walk.caps = options.caps;
  walk.thresholds = options.thresholds;

  CriteriaComparison out;
  out.walk_ratio = beta_ratio_verdict(pot, indices, walk);
  out.centered_ratio = centered_ratio_verdict(report.pairs, pot, options.caps, options.thresholds);
  out.deviation_ratio = deviation_ratio_verdict(report.pairs, options.thresholds);
  const Conclusion c = out.walk_ratio.conclusion;
  out.combined = (out.centered_ratio.conclusion == c && out.deviation_ratio.conclusion == c)
                     ? c
                     : Conclusion::Inconclusive;
  return out;
}

nlohmann::json verdict_to_json(const BasisVerdict& verdict) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : verdict.rows) {
    nlohmann::json r = {{"n", row.n}, {"set", row.structural_zero ? "delta0" : "delta1"}};
    if (!row.structural_zero) r["value"] = row.value;
    for (const auto& [key, value] : row.details.items()) r[key] = value;
    rows.push_back(std::move(r));
  }
  return {{"criterion", verdict.criterion},
          {"delta", verdict.delta},
          {"rows", rows},
          {"conclusion", to_string(verdict.conclusion)},
          {"rule", verdict.rule},
          {"thresholds",
           {{"divergence", verdict.thresholds.divergence},
            {"cap", verdict.thresholds.cap},
            {"monotone_window", verdict.thresholds.monotone_window},
            {"growth_guard", verdict.thresholds.growth_guard}}},
          {"caveats", verdict.caveats}};
}

nlohmann::json comparison_to_json(const CriteriaComparison& comparison) {
  nlohmann::json rows = nlohmann::json::array();
  const auto value_of = [](const BasisVerdict& v, std::size_t i) -> nlohmann::json {
    const auto& row = v.rows.at(i);
    return row.structural_zero ? nlohmann::json(nullptr) : nlohmann::json(row.value);
  };
  for (std::size_t i = 0; i < comparison.walk_ratio.rows.size(); ++i) {
    rows.push_back({{"n", comparison.walk_ratio.rows[i].n},
                    {"t_at_zero", value_of(comparison.walk_ratio, i)},
                    {"t_at_center", value_of(comparison.centered_ratio, i)},
                    {"deviation_ratio", value_of(comparison.deviation_ratio, i)},
                    {"gap", comparison.centered_ratio.rows[i].details["gap"]}});
  }
  const auto& t = comparison.walk_ratio.thresholds;
  return {{"criterion", "C1,C2,C3"},
          {"delta", comparison.walk_ratio.delta},
          {"rows", rows},
          {"conclusion", to_string(comparison.combined)},
          {"per_criterion",
           {{"C1", to_string(comparison.walk_ratio.conclusion)},
            {"C2", to_string(comparison.centered_ratio.conclusion)},
            {"C3", to_string(comparison.deviation_ratio.conclusion)}}},
          {"thresholds",
           {{"divergence", t.divergence},
            {"cap", t.cap},
            {"monotone_window", t.monotone_window},
            {"growth_guard", t.growth_guard}}},
          {"caveats", comparison.walk_ratio.caveats}};
}

}  // namespace hillwalk
