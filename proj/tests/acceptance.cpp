// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "hillwalk/beta.hpp"
#include "hillwalk/criteria.hpp"
#include "hillwalk/spectra.hpp"
#include "hillwalk/walks.hpp"

using namespace hillwalk;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

double modulus(const ExactScalar& x) { return std::sqrt(x.norm().get_d()); }

ExactScalar enumerated_sum(const TwoTermPotential& pot, long n, WalkKind kind) {
  ExactScalar sum;
  for (const auto& w : enumerate_shell(pot.params, n, kind, 0)) sum += weight(w, pot.potential, 0);
  return sum;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

Outcome shell_zero_exactness() {
  Outcome o;
  long checked = 0;
  for (long s = 3; s <= 5; ++s) {
    const auto pot = two_term(1, 1, 1, s);
    const auto& p = pot.params;
    for (long m = 1; m <= 8; ++m) {
      const std::string at = " (s=" + std::to_string(s) + ", m=" + std::to_string(m) + ")";
      if (m >= 2) {
        const ExactScalar expected = p.a * p.b.pow(m) * (inner_walk_sum(s, m) - outer_walk_sum(s, m));
        o.require(enumerated_sum(pot, s * m - 1, WalkKind::X) == expected, "inner - outer" + at);
        o.require(beta_plus(pot, s * m - 1, 0, 0).value == expected, "beta+ cap 0 at sm-1" + at);
        ++checked;
      }
      o.require(enumerated_sum(pot, s * m, WalkKind::X) == straight_walk_plus(p, m),
                "straight walk +" + at);
      o.require(enumerated_sum(pot, s * m, WalkKind::Y) == straight_walk_minus(p, m),
                "straight walk -" + at);
      for (long n : {s * m - 1, s * m}) {
        o.require(beta_minus(pot, n, 0, 0).value == unit_descent_weight(p.a, n),
                  "descending walk at n=" + std::to_string(n));
      }
      checked += 3;
    }
  }
  if (o.passed) o.detail = std::to_string(checked) + " rational identities";
  return o;
}

Outcome convolution_identity() {
  Outcome o;
  for (long s = 3; s <= 12; ++s) {
    const Rational alpha(1, s);
    for (long m = 2; m <= 50; ++m) {
      ExactScalar lhs;
      for (long t = 1; t < m; ++t) {
        lhs += binomial_series_coefficient(alpha, t) * binomial_series_coefficient(alpha, m - t);
      }
      o.require(lhs == ExactScalar(2) * binomial_series_coefficient(alpha, m) -
                           binomial_series_coefficient(2 * alpha, m),
                "convolution at s=" + std::to_string(s) + ", m=" + std::to_string(m));
    }
    // Taylor coefficients of (1−w)^α by repeated differentiation at 0.
    Rational c(1);
    for (long k = 1; k <= 30; ++k) {
      c = c * (Rational(k - 1) - alpha) / Rational(k);
      o.require(ExactScalar(-c) == binomial_series_coefficient(alpha, k),
                "Taylor coefficient k=" + std::to_string(k));
    }
  }
  if (o.passed) o.detail = "s in 3..12, m <= 50, k <= 30";
  return o;
}

Outcome gamma_ratio() {
  Outcome o;
  for (long s = 3; s <= 5; ++s) {
    for (long m = 2; m <= 10; ++m) {
      o.require(inner_outer_ratio_gamma_form(s, m) == inner_walk_sum(s, m) / outer_walk_sum(s, m),
                "ratio at s=" + std::to_string(s) + ", m=" + std::to_string(m));
    }
  }
  const ExactScalar pinned = inner_outer_ratio_gamma_form(3, 2);
  o.require(pinned == ExactScalar(Rational(1, 2)), "ratio(3,2) = " + pinned.to_string());
  if (o.passed) o.detail = "ratio(3,2) = " + pinned.to_string();
  return o;
}

Outcome cross_path() {
  Outcome o;
  const auto pot = two_term(1, 1, 1, 1);
  const ShellCaps caps{3, 2};
  const auto eigs = eigenvalues(assemble(pot.potential, BoundaryCondition::PeriodicPlus, 64));
  const auto eigs_minus = eigenvalues(assemble(pot.potential, BoundaryCondition::PeriodicMinus, 64));
  std::vector<SpectralPair> pairs = localize_pairs(eigs, BoundaryCondition::PeriodicPlus, 5, 12).pairs;
  for (auto& p : localize_pairs(eigs_minus, BoundaryCondition::PeriodicMinus, 5, 12).pairs) {
    pairs.push_back(std::move(p));
  }
  double worst = 0.0;
  for (const auto& pair : pairs) {
    for (const auto* lambda : {&pair.lambda_minus, &pair.lambda_plus}) {
      const double r = reduction_residual(pot.potential, pot.params, pair.n, lambda->to_exact(), caps);
      worst = std::max(worst, r);
      o.require(r <= 1e-6, "residual " + num(r) + " at n=" + std::to_string(pair.n));
    }
  }
  o.require(pairs.size() == 7, "expected pairs for n = 6..12");
  if (o.passed) o.detail = "max residual " + num(worst) + " over n = 6..12";
  return o;
}

Outcome localization() {
  Outcome o;
  const ExactScalar i = ExactScalar::imaginary_unit();
  const std::vector<TwoTermPotential> pots{
      two_term(1, 1, 1, 1),  two_term(1, 2, 1, 1),
      two_term(1, 1, 1, 3),  two_term(2, 1, 1, 2),
      two_term(1, i, 2, 2),  two_term(ExactScalar(Rational(1, 2)), ExactScalar(0, 2), 2, 3),
      two_term(2, 2, 3, 1),  two_term(ExactScalar(Rational(3, 2), Rational(-1, 2)), 1, 1, 4)};
  long discs = 0;
  for (const auto& pot : pots) {
    for (const auto bc : {BoundaryCondition::PeriodicPlus, BoundaryCondition::PeriodicMinus}) {
      try {
        const auto eigs = eigenvalues(assemble(pot.potential, bc, 64));
        discs += static_cast<long>(localize_pairs(eigs, bc, 3, 12).pairs.size());
      } catch (const LocalizationError& e) {
        o.require(false, e.what());
      }
    }
  }
  if (o.passed) o.detail = std::to_string(discs) + " discs with exactly two eigenvalues";
  return o;
}

// |β⁻(0)/β⁺(0)| with the default caps.
double walk_ratio(const TwoTermPotential& pot, long n) {
  const Rational q = beta_minus(pot, n, 0, ShellCaps{}.y).value.norm() /
                     beta_plus(pot, n, 0, ShellCaps{}.x).value.norm();
  return std::sqrt(q.get_d());
}

Outcome commensurate() {
  Outcome o;
  const auto pot = two_term(1, 1, 1, 3);
  const long gap = std::abs(pot.params.r - pot.params.s);
  std::ostringstream steps;
  double previous = std::log(walk_ratio(pot, 6));
  for (long m = 3; m <= 6; ++m) {
    const double current = std::log(walk_ratio(pot, 3 * m));
    const double decrement = previous - current;
    const double floor = 0.8 * gap * std::log(static_cast<double>(m));
    o.require(decrement > 0, "not decreasing at m=" + std::to_string(m));
    o.require(decrement >= floor, "decrement " + num(decrement) + " < " + num(floor) +
                                      " at m=" + std::to_string(m));
    steps << (m > 3 ? "," : "") << num(decrement);
    previous = current;
  }
  const auto verdict = commensurate_report(1, 1, 1, 3, BoundaryCondition::PeriodicPlus, 2, 6);
  o.require(verdict.conclusion == Conclusion::NoBasis,
            std::string("verdict ") + to_string(verdict.conclusion));
  if (o.passed) o.detail = "log decrements " + steps.str() + "; no-basis";
  return o;
}

Outcome near_multiple() {
  Outcome o;
  const auto pot = two_term(1, 1, 1, 3);
  std::ostringstream factors;
  double previous = walk_ratio(pot, 5);
  for (long m = 3; m <= 7; ++m) {
    const double current = walk_ratio(pot, 3 * m - 1);
    const double factor = previous / current;
    o.require(factor >= static_cast<double>(m * m),
              "factor " + num(factor) + " < m^2 at m=" + std::to_string(m));
    factors << (m > 3 ? "," : "") << num(factor);
    previous = current;
  }
  const auto verdict = near_multiple_report(1, 1, 3, 2, 7);
  o.require(verdict.conclusion == Conclusion::NoBasis,
            std::string("verdict ") + to_string(verdict.conclusion));
  if (o.passed) o.detail = "step factors " + factors.str() + "; no-basis";
  return o;
}

Outcome equal_frequency() {
  Outcome o;
  const ExactScalar i = ExactScalar::imaginary_unit();
  const auto decoupled = two_term(1, i, 2, 2);
  for (long n = 1; n <= 25; n += 2) {
    o.require(!shells_feasible(decoupled.params, n, WalkKind::X) &&
                  !shells_feasible(decoupled.params, n, WalkKind::Y),
              "feasible counts at odd n=" + std::to_string(n));
  }
  const auto even = equal_frequency_verdict(1, i, 2, BoundaryCondition::PeriodicMinus);
  o.require(even.conclusion == Conclusion::ContainsBasis,
            std::string("R=2 verdict ") + to_string(even.conclusion));

  const auto unequal = two_term(1, 2, 1, 1);
  double worst = 1.0;
  for (long n = 2; n <= 12; n += 2) {
    const double t = beta_imbalance(beta_plus(unequal, n, 0, ShellCaps{}.x).value,
                                    beta_minus(unequal, n, 0, ShellCaps{}.y).value);
    const double ratio = t / std::pow(2.0, static_cast<double>(n));
    worst = std::max(worst, std::max(ratio, 1.0 / ratio));
    o.require(ratio >= 0.5 && ratio <= 2.0, "t_n/2^n = " + num(ratio) + " at n=" + std::to_string(n));
  }
  const auto odd = equal_frequency_verdict(1, 2, 1, BoundaryCondition::PeriodicPlus);
  o.require(odd.conclusion == Conclusion::NoBasis,
            std::string("R=1 verdict ") + to_string(odd.conclusion));
  if (o.passed) o.detail = "R=2 contains-basis; R=1 t_n/2^n within " + num(worst) + "; no-basis";
  return o;
}

Outcome stability() {
  Outcome o;
  const auto pot = two_term(1, 1, 1, 3);
  const ExactScalar i = ExactScalar::imaginary_unit();
  const std::vector<ExactScalar> points{1, -1, i, -i};
  double lo = 1.0;
  double hi = 1.0;
  for (long m = 4; m <= 10; ++m) {
    const long n = 3 * m - 1;
    const double p0 = modulus(beta_plus(pot, n, 0, ShellCaps{}.x).value);
    const double m0 = modulus(beta_minus(pot, n, 0, ShellCaps{}.y).value);
    for (const auto& z : points) {
      const double pr = modulus(beta_plus(pot, n, z, ShellCaps{}.x).value) / p0;
      const double mr = modulus(beta_minus(pot, n, z, ShellCaps{}.y).value) / m0;
      lo = std::min({lo, pr, mr});
      hi = std::max({hi, pr, mr});
      o.require(pr >= 0.5 && pr <= 2.0 && mr >= 0.5 && mr <= 2.0,
                "ratio outside [1/2, 2] at n=" + std::to_string(n));
    }
  }
  if (o.passed) o.detail = "|beta(z)|/|beta(0)| in [" + num(lo) + ", " + num(hi) + "]";
  return o;
}

Outcome concordance() {
  Outcome o;
  ComparisonOptions opts;
  opts.spectrum.K = 64;
  opts.spectrum.N = 5;
  opts.spectrum.n_max = 12;
  const auto column = [](const nlohmann::json& rows, const char* key) {
    std::vector<double> v;
    for (const auto& r : rows) v.push_back(r.at(key).is_null() ? 0.0 : r.at(key).get<double>());
    return v;
  };
  std::ostringstream summary;
  for (const auto& [b, grows] : {std::pair{2L, true}, std::pair{1L, false}}) {
    const auto pot = two_term(1, b, 1, 1);
    const auto rows = comparison_to_json(compare_criteria(pot, BoundaryCondition::PeriodicPlus, opts))
                          .at("rows");
    o.require(rows.size() == 4, "expected rows at n = 6, 8, 10, 12");
    for (const char* key : {"t_at_zero", "t_at_center", "deviation_ratio"}) {
      const auto v = column(rows, key);
      if (v.size() != 4) break;
      const std::string where = std::string(key) + " for b=" + std::to_string(b);
      if (grows) {
        for (std::size_t k = 1; k < v.size(); ++k) o.require(v[k] > v[k - 1], where + " not increasing");
        o.require(v.back() > 10.0, where + " = " + num(v.back()) + " at n=12");
        summary << key << "(12)=" << num(v.back()) << ' ';
      } else {
        for (double x : v) o.require(x <= 2.0, where + " = " + num(x) + " exceeds 2");
      }
    }
  }
  if (o.passed) o.detail = summary.str() + "for (1,2,1,1); all <= 2 for (1,1,1,1)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "shell-zero exactness", 10, shell_zero_exactness},
      {2, "convolution identity and Taylor coefficients", 5, convolution_identity},
      {3, "Gamma-ratio check", 5, gamma_ratio},
      {4, "cross-path eigenvalue validation", 60, cross_path},
      {5, "localization", 60, localization},
      {6, "commensurate family, periodic", 30, commensurate},
      {7, "near-multiple family, antiperiodic", 30, near_multiple},
      {8, "equal frequencies", 30, equal_frequency},
      {9, "two-sided stability", 60, stability},
      {10, "criterion concordance", 120, concordance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      outcome.require(false, "runtime " + num(seconds) + " s over budget");
    }
    if (!outcome.passed) ++failures;
    std::printf("%s  %2d  %-46s %7.2fs  %s\n", outcome.passed ? "PASS" : "FAIL", c.id, c.title,
                seconds, outcome.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
