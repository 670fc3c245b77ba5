#include "hillwalk/beta.hpp"

#include <cmath>

namespace hillwalk {

namespace {

BetaValue shell_series(const TwoTermPotential& pot, long n, WalkKind kind, const ExactScalar& z,
                       long shell_cap) {
  if (shell_cap < 0) throw DomainError("shell cap must be nonnegative");
  BetaValue out;
  out.n = n;
  out.kind = kind;
  out.z = z;
  for (long k = 0; k <= shell_cap; ++k) {
    ExactScalar value = shell_sum(pot.params, n, kind, k, z);
    out.value += value;
    out.shell_values.push_back(std::move(value));
  }
  out.shells_used = shell_cap + 1;
  out.exact_through_shell = shell_cap;
  if (shells_feasible(pot.params, n, kind)) {
    out.tail = tail_bound_report(pot.params, n, kind, out.shell_values.back());
  }
  return out;
}

void require_s(long s) {
  if (s < 3) throw DomainError("requires s >= 3");
}

void require_m(long m) {
  if (m < 1) throw DomainError("requires m >= 1");
}

// ∏_{t=lo}^{hi} (st − 1), empty product = 1.
Integer shifted_product(long s, long lo, long hi) {
  Integer p(1);
  for (long t = lo; t <= hi; ++t) p *= s * t - 1;
  return p;
}

}  // namespace

BetaValue beta_plus(const TwoTermPotential& pot, long n, const ExactScalar& z, long shell_cap) {
  return shell_series(pot, n, WalkKind::X, z, shell_cap);
}

BetaValue beta_minus(const TwoTermPotential& pot, long n, const ExactScalar& z, long shell_cap) {
  return shell_series(pot, n, WalkKind::Y, z, shell_cap);
}

BetaValue walk_sum(const FourierPotential& pot, long n, WalkKind kind, const ExactScalar& z,
                   long step_cap) {
  if (step_cap < 0) throw DomainError("step cap must be nonnegative");
  BetaValue out;
  out.n = n;
  out.kind = kind;
  out.z = z;
  out.value = capped_sum(pot, n, kind, step_cap, z);
  out.shells_used = step_cap;
  out.exact_through_shell = step_cap;
  return out;
}

BetaValue alpha_n(const FourierPotential& pot, long n, const ExactScalar& z, long step_cap) {
  return walk_sum(pot, n, WalkKind::W, z, step_cap);
}

TailEstimate tail_bound_report(const TwoTermParams& params, long n, WalkKind kind,
                               const ExactScalar& last_shell_sum) {
  const double T = params.coefficient_bound();
  const double nn = static_cast<double>(n);
  double rho = 0.0;
  if (kind == WalkKind::Y) {
    rho = std::pow(T / (2.0 * nn), static_cast<double>(params.s + 1)) *
          static_cast<double>(params.s + 2) * nn;
  } else {
    rho = std::pow(T / nn, static_cast<double>(params.r + params.s));
  }
  TailEstimate out;
  out.ratio = rho;
  if (rho >= 0.5) {
    out.unbounded = true;
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  const double last = std::sqrt(last_shell_sum.norm().get_d());
  out.value = last * rho / (1.0 - rho);
  return out;
}

ExactScalar straight_walk_plus(const TwoTermParams& params, long m) {
  require_m(m);
  const long steps = params.r * m;
  const Rational scale(4 * params.s * params.s * params.d * params.d);
  const Integer f = factorial(steps - 1);
  Rational den(f * f);
  Integer scale_pow;
  mpz_pow_ui(scale_pow.get_mpz_t(), scale.get_num_mpz_t(), static_cast<unsigned long>(steps - 1));
  den *= scale_pow;
  return params.b.pow(steps) / ExactScalar(den);
}

ExactScalar straight_walk_minus(const TwoTermParams& params, long m) {
  require_m(m);
  const long steps = params.s * m;
  const Rational scale(4 * params.r * params.r * params.d * params.d);
  const Integer f = factorial(steps - 1);
  return ExactScalar(scale) * (params.a / ExactScalar(scale)).pow(steps) /
         ExactScalar(Rational(f * f));
}

ExactScalar outer_walk_sum(long s, long m) {
  require_s(s);
  require_m(m);
  Integer four_s_pow;
  mpz_ui_pow_ui(four_s_pow.get_mpz_t(), static_cast<unsigned long>(4 * s),
                static_cast<unsigned long>(m));
  return ExactScalar(make_rational(Integer(2), four_s_pow * factorial(m) * shifted_product(s, 1, m - 1)));
}

ExactScalar inner_walk_sum(long s, long m) {
  require_s(s);
  require_m(m);
  Rational sum(0);
  for (long tau = 1; tau <= m - 1; ++tau) {
    sum += make_rational(shifted_product(s, 1, tau - 1), factorial(tau)) *
           make_rational(shifted_product(s, 1, m - tau - 1), factorial(m - tau));
  }
  const Integer full = shifted_product(s, 1, m - 1);
  Integer four_s_pow;
  mpz_ui_pow_ui(four_s_pow.get_mpz_t(), static_cast<unsigned long>(4 * s),
                static_cast<unsigned long>(m));
  return ExactScalar(sum / Rational(four_s_pow * full * full));
}

ExactScalar outer_walk_sum_gamma_form(long s, long m) {
  require_s(s);
  require_m(m);
  Integer two_s_pow;
  mpz_ui_pow_ui(two_s_pow.get_mpz_t(), static_cast<unsigned long>(2 * s),
                static_cast<unsigned long>(2 * m));
  const ExactScalar prefactor(make_rational(Integer(2 * s), two_s_pow * factorial(m)));
  return prefactor * gamma_product_identity(Rational(1, s), m);
}

ExactScalar binomial_series_coefficient(const Rational& alpha, long k) {
  if (alpha <= 0 || alpha >= 1) throw DomainError("alpha must lie in (0,1)");
  if (k < 0) throw DomainError("coefficient index must be nonnegative");
  if (k == 0) return ExactScalar(0);
  Rational value = alpha;
  for (long t = 1; t < k; ++t) value *= Rational(t) - alpha;
  return ExactScalar(value / Rational(factorial(k)));
}

ExactScalar inner_outer_ratio(long s, long m) {
  require_s(s);
  if (m < 2) throw DomainError("requires m >= 2");
  const Rational alpha(1, s);
  return ExactScalar(1) - binomial_series_coefficient(2 * alpha, m) /
                              (ExactScalar(2) * binomial_series_coefficient(alpha, m));
}

ExactScalar inner_outer_ratio_gamma_form(long s, long m) {
  require_s(s);
  if (m < 2) throw DomainError("requires m >= 2");
  const Rational alpha(1, s);
  const GammaRatio quotient{{1 - alpha, m - 2 * alpha}, {m - alpha, 1 - 2 * alpha}};
  const auto exact = quotient.telescoped();
  if (!exact) throw DomainError("Gamma quotient does not telescope");
  return ExactScalar(1) - ExactScalar(*exact);
}

AsymptoticValue beta_plus_leading(const TwoTermParams& params, long m, mpfr_prec_t bits) {
  require_precision(bits);
  if (params.r != 1 || params.d != 1) throw DomainError("beta_plus_leading requires R = 1");
  const long s = params.s;
  require_s(s);
  require_m(m);
  const Rational alpha(1, s);
  // −2s·a·b^m / ((2s)^{2m} m!) · Γ²(1−α)Γ(m−2α) / (Γ²(m−α)Γ(1−2α))
  const GammaRatio gammas{{1 - alpha, 1 - alpha, m - 2 * alpha},
                          {m - alpha, m - alpha, 1 - 2 * alpha}};
  Integer two_s_pow;
  mpz_ui_pow_ui(two_s_pow.get_mpz_t(), static_cast<unsigned long>(2 * s),
                static_cast<unsigned long>(2 * m));
  const ExactScalar prefactor = ExactScalar(make_rational(Integer(-2 * s), two_s_pow * factorial(m))) *
                                params.a * params.b.pow(m);
  BigComplex leading(prefactor, bits);
  const BigFloat g = gammas.evaluate(bits);
  leading = BigComplex(leading.re() * g, leading.im() * g);
  return {leading, "(log n)^{s+1}/n^s"};
}

ExactScalar unit_descent_weight(const ExactScalar& a, long n) {
  if (n < 1) throw DomainError("requires n >= 1");
  Integer four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(n - 1));
  const Integer f = factorial(n - 1);
  return a.pow(n) / ExactScalar(Rational(four_pow * f * f));
}

AsymptoticValue beta_minus_leading(const ExactScalar& a, long n, mpfr_prec_t bits) {
  require_precision(bits);
  return {BigComplex(unit_descent_weight(a, n), bits), "1/n^s"};
}

AsymptoticValue beta_equal_leading(const TwoTermParams& params, WalkKind kind, long m,
                                   mpfr_prec_t bits) {
  require_precision(bits);
  require_m(m);
  if (params.R != params.S) throw DomainError("beta_equal_leading requires R = S");
  if (kind == WalkKind::W) throw DomainError("beta_equal_leading is defined for X and Y only");
  const ExactScalar& c = kind == WalkKind::X ? params.b : params.a;
  const ExactScalar scale(4 * params.R * params.R);
  const Integer f = factorial(m - 1);
  const ExactScalar value = scale * (c / scale).pow(m) / ExactScalar(Rational(f * f));
  return {BigComplex(value, bits), "log n/n"};
}

}  // namespace hillwalk
