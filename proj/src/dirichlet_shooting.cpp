// Taylor-series integration of y″ = (v − μ)y on [0, π] in MPFR, together
// with the μ-derivative u = ∂y/∂μ (u″ = (v − μ)u − y).

#include <climits>
#include <cmath>

#include "hillwalk/spectra.hpp"

namespace hillwalk {

namespace {

constexpr int kMaxOrder = 4000;

// Exponent of the larger component, LONG_MIN for zero.
long magnitude(const BigComplex& z) {
  long e = LONG_MIN;
  if (!z.re().is_zero()) e = std::max<long>(e, mpfr_get_exp(z.re().get()));
  if (!z.im().is_zero()) e = std::max<long>(e, mpfr_get_exp(z.im().get()));
  return e;
}

// acc += x·y.
void add_product(BigComplex& acc, const BigComplex& x, const BigComplex& y, BigFloat& t1,
                 BigFloat& t2) {
  mpfr_mul(t1.get(), x.re().get(), y.re().get(), MPFR_RNDN);
  mpfr_mul(t2.get(), x.im().get(), y.im().get(), MPFR_RNDN);
  mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_add(acc.re().get(), acc.re().get(), t1.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), x.re().get(), y.im().get(), MPFR_RNDN);
  mpfr_mul(t2.get(), x.im().get(), y.re().get(), MPFR_RNDN);
  mpfr_add(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_add(acc.im().get(), acc.im().get(), t1.get(), MPFR_RNDN);
}

void scale(BigComplex& z, const BigFloat& s) {
  mpfr_mul(z.re().get(), z.re().get(), s.get(), MPFR_RNDN);
  mpfr_mul(z.im().get(), z.im().get(), s.get(), MPFR_RNDN);
}

}  // namespace

ShootingValue dirichlet_shoot(const FourierPotential& pot, const BigComplex& mu, mpfr_prec_t bits) {
  require_precision(bits);
  const mpfr_prec_t work = bits + 32;
  const BigComplex mu_w(BigFloat(mu.re().to_rational(), work), BigFloat(mu.im().to_rational(), work));

  double size = std::sqrt(std::abs(mu.to_complex())) + static_cast<double>(pot.max_frequency());
  for (const auto& entry : pot.coefficients()) size += std::sqrt(std::abs(entry.second.to_complex()));
  const long steps = std::max<long>(16, static_cast<long>(std::ceil(M_PI * size / 0.75)));

  BigFloat pi(work);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  const BigFloat h = pi / BigFloat(Rational(steps), work);
  const BigFloat h2 = h * h;

  struct Term {
    long m;
    BigComplex coeff;  // V(m)
    BigComplex step;   // i·m·h
  };
  std::vector<Term> terms;
  for (const auto& [m, value] : pot.coefficients()) {
    BigComplex step(work);
    step.im() = h * BigFloat(Rational(m), work);
    terms.push_back({m, BigComplex(value, work), step});
  }

  BigFloat t1(work), t2(work), tmp(work);
  BigComplex y0(work), y1(work), u0(work), u1(work);
  y1.re() = h;  // h·y′(0) = h

  std::vector<BigComplex> Y, U, C;
  std::vector<BigComplex> current(terms.size(), BigComplex(work));
  for (long step = 0; step < steps; ++step) {
    const BigFloat x0 = h * BigFloat(Rational(step), work);
    // current[t] = V(m)·e^{imx₀}·(imh)^k/k!, advanced with k.
    for (std::size_t t = 0; t < terms.size(); ++t) {
      BigFloat arg = x0 * BigFloat(Rational(terms[t].m), work);
      BigComplex phase(work);
      mpfr_sin_cos(phase.im().get(), phase.re().get(), arg.get(), MPFR_RNDN);
      current[t] = terms[t].coeff * phase;
    }
    Y.assign({y0, y1});
    U.assign({u0, u1});
    C.clear();
    long reference = std::max({magnitude(y0), magnitude(y1), magnitude(u0), magnitude(u1)});
    int quiet = 0;
    for (int k = 0;; ++k) {
      if (k > kMaxOrder) throw std::runtime_error("Taylor shooting did not converge");
      BigComplex ck(work);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        if (k > 0) {
          current[t] *= terms[t].step;
          mpfr_div_si(current[t].re().get(), current[t].re().get(), k, MPFR_RNDN);
          mpfr_div_si(current[t].im().get(), current[t].im().get(), k, MPFR_RNDN);
        }
        ck += current[t];
      }
      scale(ck, h2);  // C_k·h² folded into the convolution
      C.push_back(std::move(ck));
      BigComplex ny(work), nu(work);
      for (int i = 0; i <= k; ++i) {
        add_product(ny, C[static_cast<std::size_t>(i)], Y[static_cast<std::size_t>(k - i)], t1, t2);
        add_product(nu, C[static_cast<std::size_t>(i)], U[static_cast<std::size_t>(k - i)], t1, t2);
      }
      BigComplex muh2 = mu_w;
      scale(muh2, h2);
      BigComplex neg(work);
      add_product(neg, muh2, Y[static_cast<std::size_t>(k)], t1, t2);
      ny -= neg;
      neg = BigComplex(work);
      add_product(neg, muh2, U[static_cast<std::size_t>(k)], t1, t2);
      nu -= neg;
      BigComplex yk = Y[static_cast<std::size_t>(k)];
      scale(yk, h2);
      nu -= yk;
      mpfr_set_si(tmp.get(), static_cast<long>(k + 1) * (k + 2), MPFR_RNDN);
      mpfr_div(ny.re().get(), ny.re().get(), tmp.get(), MPFR_RNDN);
      mpfr_div(ny.im().get(), ny.im().get(), tmp.get(), MPFR_RNDN);
      mpfr_div(nu.re().get(), nu.re().get(), tmp.get(), MPFR_RNDN);
      mpfr_div(nu.im().get(), nu.im().get(), tmp.get(), MPFR_RNDN);
      const long e = std::max(magnitude(ny), magnitude(nu));
      reference = std::max(reference, e);
      Y.push_back(std::move(ny));
      U.push_back(std::move(nu));
      quiet = (e == LONG_MIN || e < reference - static_cast<long>(work) - 8) ? quiet + 1 : 0;
      if (quiet >= 3) break;
    }
    y0 = BigComplex(work);
    y1 = BigComplex(work);
    u0 = BigComplex(work);
    u1 = BigComplex(work);
    for (std::size_t j = 0; j < Y.size(); ++j) {
      y0 += Y[j];
      u0 += U[j];
      BigComplex jy = Y[j];
      BigComplex ju = U[j];
      mpfr_set_si(tmp.get(), static_cast<long>(j), MPFR_RNDN);
      scale(jy, tmp);
      scale(ju, tmp);
      y1 += jy;
      u1 += ju;
    }
  }
  return {y0, u0};
}

BigComplex dirichlet_newton(const FourierPotential& pot, const BigComplex& seed, mpfr_prec_t bits) {
  require_precision(bits);
  const mpfr_prec_t work = bits + 32;
  BigComplex mu(BigFloat(seed.re().to_rational(), work), BigFloat(seed.im().to_rational(), work));
  for (int iteration = 0; iteration < 60; ++iteration) {
    const ShootingValue s = dirichlet_shoot(pot, mu, bits);
    if (s.derivative.is_zero()) throw std::runtime_error("Dirichlet Newton step hit a zero slope");
    const BigComplex delta = s.value / s.derivative;
    mu -= delta;
    BigFloat tolerance = mu.abs() + BigFloat(Rational(1), work);
    mpfr_mul_2si(tolerance.get(), tolerance.get(), -static_cast<long>(bits) - 2, MPFR_RNDN);
    if (delta.abs() < tolerance) {
      return BigComplex(BigFloat(mu.re().to_rational(), bits), BigFloat(mu.im().to_rational(), bits));
    }
  }
  throw std::runtime_error("Dirichlet Newton iteration did not converge");
}

}  // namespace hillwalk
