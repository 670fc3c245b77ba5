#include "hillwalk/verify.hpp"

#include <cmath>
#include <sstream>

#include "hillwalk/beta.hpp"
#include "hillwalk/report.hpp"
#include "hillwalk/spectra.hpp"
#include "hillwalk/walks.hpp"

namespace hillwalk {

namespace {

// Σ weight over an explicitly enumerated shell.
ExactScalar enumerated(const TwoTermPotential& pot, long n, WalkKind kind, long shell) {
  ExactScalar sum;
  for (const auto& w : enumerate_shell(pot.params, n, kind, shell)) {
    sum += weight(w, pot.potential, ExactScalar(0));
  }
  return sum;
}

CheckResult shell_zero(const VerifyOptions& options) {
  CheckResult r{"shell-zero closed forms (s in 3..5, m <= 8)", true, "all equal", "all equal"};
  for (long s = 3; s <= 5 && r.passed; ++s) {
    const TwoTermPotential exact = two_term(1, 1, 1, s);
    const TwoTermPotential shifted = two_term(ExactScalar(1 + options.perturbation), 1, 1, s);
    for (long m = 1; m <= 8 && r.passed; ++m) {
      for (long n : {s * m - 1, s * m}) {
        for (const auto& check : shell_zero_checks(exact, n)) {
          const WalkKind kind = check.name == "straight_walk_plus" || check.name == "inner_minus_outer"
                                    ? WalkKind::X
                                    : WalkKind::Y;
          const ExactScalar actual = enumerated(shifted, n, kind, 0);
          if (actual != check.expected) {
            r.passed = false;
            r.name = "shell-zero closed form " + check.name + " (s=" + std::to_string(s) +
                     ", n=" + std::to_string(n) + ")";
            r.expected = check.expected.to_string();
            r.actual = actual.to_string();
            break;
          }
        }
      }
    }
  }
  return r;
}

CheckResult convolution() {
  CheckResult r{"convolution identity (alpha = 1/s, s in 3..12, m <= 50)", true, "all equal",
                "all equal"};
  for (long s = 3; s <= 12 && r.passed; ++s) {
    const Rational alpha(1, s);
    for (long m = 2; m <= 50; ++m) {
      ExactScalar lhs;
      for (long t = 1; t < m; ++t) {
        lhs += binomial_series_coefficient(alpha, t) * binomial_series_coefficient(alpha, m - t);
      }
      const ExactScalar rhs = ExactScalar(2) * binomial_series_coefficient(alpha, m) -
                              binomial_series_coefficient(2 * alpha, m);
      if (lhs != rhs) {
        r.passed = false;
        r.name += " at s=" + std::to_string(s) + ", m=" + std::to_string(m);
        r.expected = rhs.to_string();
        r.actual = lhs.to_string();
        break;
      }
    }
  }
  return r;
}

CheckResult series() {
  CheckResult r{"Taylor coefficients of 1-(1-w)^alpha (k <= 30)", true, "all equal", "all equal"};
  for (long s = 3; s <= 12 && r.passed; ++s) {
    const Rational alpha(1, s);
    // (1−w)·f′ = −α·f for f = (1−w)^α gives f_{k+1} = (k − α)·f_k/(k+1).
    Rational f(1);
    for (long k = 0; k < 30; ++k) {
      f = f * (Rational(k) - alpha) / Rational(k + 1);
      const ExactScalar expected(-f);
      const ExactScalar actual = binomial_series_coefficient(alpha, k + 1);
      if (expected != actual) {
        r.passed = false;
        r.name += " at s=" + std::to_string(s) + ", k=" + std::to_string(k + 1);
        r.expected = expected.to_string();
        r.actual = actual.to_string();
        break;
      }
    }
  }
  return r;
}

CheckResult gamma_ratio() {
  CheckResult r{"inner/outer ratio: walk sums vs binomial vs telescoped Gamma (s in 3..5, m <= 10)",
                true, "all equal", "all equal"};
  for (long s = 3; s <= 5 && r.passed; ++s) {
    for (long m = 2; m <= 10; ++m) {
      const ExactScalar direct = inner_walk_sum(s, m) / outer_walk_sum(s, m);
      const ExactScalar binom = inner_outer_ratio(s, m);
      const ExactScalar gamma = inner_outer_ratio_gamma_form(s, m);
      if (direct != binom || direct != gamma) {
        r.passed = false;
        r.name += " at s=" + std::to_string(s) + ", m=" + std::to_string(m);
        r.expected = direct.to_string();
        r.actual = binom.to_string() + " / " + gamma.to_string();
        break;
      }
    }
  }
  const ExactScalar pinned = inner_outer_ratio(3, 2);
  if (r.passed && pinned != ExactScalar(Rational(1, 2))) {
    r = {"inner/outer ratio at s=3, m=2", false, "1/2", pinned.to_string()};
  }
  return r;
}

CheckResult factorial_identity(mpfr_prec_t bits) {
  const Rational alpha(1, 3);
  const long m = 40;
  const ExactScalar product = gamma_product_identity(alpha, m);
  const GammaRatio ratio{{1 - alpha}, {m - alpha}};
  const auto telescoped = ratio.telescoped();
  CheckResult r{"Gamma product identity at m = 40 (" + std::to_string(bits) + "-bit float path)",
                true, product.to_string(), telescoped ? Rational(*telescoped).get_str() : "none"};
  if (!telescoped || ExactScalar(*telescoped) != product) {
    r.passed = false;
    return r;
  }
  const BigFloat approx = ratio.evaluate(bits);
  const BigFloat exact(product.re(), bits + 32);
  BigFloat rel = abs(approx - exact) / exact;
  BigFloat tol(1.0, bits);
  mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(bits) + 16, MPFR_RNDN);
  if (tol < rel) {
    r.passed = false;
    r.actual = approx.to_string(30);
  }
  return r;
}

CheckResult dp_vs_enumeration() {
  CheckResult r{"shell dynamic program vs explicit enumeration", true, "all equal", "all equal"};
  const ExactScalar z(Rational(1, 3), Rational(1, 7));
  for (const auto& [R, S] : {std::pair{1L, 3L}, std::pair{2L, 3L}, std::pair{1L, 1L}}) {
    const TwoTermPotential pot = two_term(ExactScalar(2, 1), ExactScalar(Rational(1, 2), 1), R, S);
    for (long n = 1; n <= 10; ++n) {
      for (const WalkKind kind : {WalkKind::X, WalkKind::Y}) {
        for (long shell = 0; shell <= 2; ++shell) {
          ExactScalar listed;
          for (const auto& w : enumerate_shell(pot.params, n, kind, shell)) {
            listed += weight(w, pot.potential, z);
          }
          const ExactScalar dp = shell_sum(pot.params, n, kind, shell, z);
          if (dp != listed) {
            r.passed = false;
            std::ostringstream os;
            os << " at R=" << R << ", S=" << S << ", n=" << n << ", " << to_string(kind)
               << " shell " << shell;
            r.name += os.str();
            r.expected = listed.to_string();
            r.actual = dp.to_string();
            return r;
          }
        }
      }
    }
  }
  return r;
}

CheckResult reversal_symmetry() {
  CheckResult r{"|beta+| = |beta-| for a = b, R = S (equal caps)", true, "equal moduli",
                "equal moduli"};
  const ExactScalar c(Rational(3, 5), Rational(4, 5));
  for (long R = 1; R <= 3 && r.passed; ++R) {
    const TwoTermPotential pot = two_term(c, c, R, R);
    for (long n = R; n <= 12; n += R) {
      const ExactScalar bp = beta_plus(pot, n, ExactScalar(Rational(1, 5)), 2).value;
      const ExactScalar bm = beta_minus(pot, n, ExactScalar(Rational(1, 5)), 2).value;
      if (bp.norm() != bm.norm()) {
        r.passed = false;
        r.name += " at R=" + std::to_string(R) + ", n=" + std::to_string(n);
        r.expected = bp.to_string();
        r.actual = bm.to_string();
        break;
      }
    }
  }
  return r;
}

CheckResult identically_zero() {
  CheckResult r{"no admissible counts at odd n for R = S = 2", true, "infeasible", "infeasible"};
  const TwoTermPotential pot = two_term(1, ExactScalar::imaginary_unit(), 2, 2);
  for (long n = 1; n <= 25; n += 2) {
    if (shells_feasible(pot.params, n, WalkKind::X) || shells_feasible(pot.params, n, WalkKind::Y)) {
      r.passed = false;
      r.actual = "feasible at n=" + std::to_string(n);
      break;
    }
  }
  return r;
}

CheckResult residual() {
  CheckResult r{"reduction residual at Galerkin eigenvalues (1,1,1,1), n = 6, 8, K = 64", true,
                "<= 1e-6", ""};
  const TwoTermPotential pot = two_term(1, 1, 1, 1);
  const auto eigs = eigenvalues(assemble(pot.potential, BoundaryCondition::PeriodicPlus, 64));
  const auto pairs = localize_pairs(eigs, BoundaryCondition::PeriodicPlus, 4, 8).pairs;
  double worst = 0.0;
  for (const auto& pair : pairs) {
    for (const auto* lambda : {&pair.lambda_minus, &pair.lambda_plus}) {
      worst = std::max(worst, reduction_residual(pot.potential, pot.params, pair.n,
                                                 lambda->to_exact(), ShellCaps{}));
    }
  }
  std::ostringstream os;
  os << worst;
  r.actual = os.str();
  r.passed = worst <= 1e-6;
  return r;
}

}  // namespace

std::vector<CheckResult> run_identity_suite(const VerifyOptions& options) {
  require_precision(options.precision);
  std::vector<CheckResult> out;
  out.push_back(shell_zero(options));
  out.push_back(convolution());
  out.push_back(series());
  out.push_back(gamma_ratio());
  out.push_back(factorial_identity(options.precision));
  out.push_back(dp_vs_enumeration());
  out.push_back(reversal_symmetry());
  out.push_back(identically_zero());
  if (options.spectral) out.push_back(residual());
  return out;
}

}  // namespace hillwalk
