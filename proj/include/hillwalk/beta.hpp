#ifndef HILLWALK_BETA_HPP
#define HILLWALK_BETA_HPP

#include <string>
#include <vector>

#include "hillwalk/numerics.hpp"
#include "hillwalk/potential.hpp"
#include "hillwalk/walks.hpp"

namespace hillwalk {

// Heuristic geometric tail estimate for a truncated shell series. Never
// added to the value it accompanies.
struct TailEstimate {
  double value = 0.0;
  bool unbounded = false;
  double ratio = 0.0;  // the geometric factor ρ used
};

struct BetaValue {
  long n = 0;
  WalkKind kind = WalkKind::X;
  ExactScalar z;
  ExactScalar value;
  long shells_used = 0;          // number of shells (or step lengths) summed
  long exact_through_shell = -1; // last shell index included, -1 if none
  std::vector<ExactScalar> shell_values;
  TailEstimate tail;
};

struct AsymptoticValue {
  BigComplex leading;
  std::string relative_error_order;
};

// β⁺_n(z) = Σ_{k ≤ shell_cap} Σ_{x ∈ X_n(k)} h(x, z).
BetaValue beta_plus(const TwoTermPotential& pot, long n, const ExactScalar& z, long shell_cap);
// β⁻_n(z) over the Y_n shells.
BetaValue beta_minus(const TwoTermPotential& pot, long n, const ExactScalar& z, long shell_cap);

// Step-capped sums for an arbitrary finite potential.
BetaValue walk_sum(const FourierPotential& pot, long n, WalkKind kind, const ExactScalar& z,
                   long step_cap);
// α_n(z) over closed walks n → n with at most step_cap steps.
BetaValue alpha_n(const FourierPotential& pot, long n, const ExactScalar& z, long step_cap);

// Default truncation: X shells ≤ 3, Y shells ≤ 2, W steps ≤ 2(r+s).
struct ShellCaps {
  long x = 3;
  long y = 2;
  long w_steps = -1;  // negative selects 2(r+s)

  long w_steps_for(const TwoTermParams& params) const {
    return w_steps >= 0 ? w_steps : 2 * (params.r + params.s);
  }
};

// |last shell| · ρ/(1−ρ) with ρ = (T/n)^{r+s} for X and
// ρ = (T/2n)^{s+1}·(s+2)n for Y, T = max(|a|, |b|). Unbounded once ρ ≥ 1/2.
TailEstimate tail_bound_report(const TwoTermParams& params, long n, WalkKind kind,
                               const ExactScalar& last_shell_sum);

// Weight of the straight walk x* (all steps +2S) at n = rsd·m:
// b^{rm} / ((4s²d²)^{rm−1} ((rm−1)!)²).
ExactScalar straight_walk_plus(const TwoTermParams& params, long m);
// Weight of the straight walk y* (all steps −2R) at n = rsd·m:
// 4r²d² (a/(4r²d²))^{sm} ((sm−1)!)^{−2}.
ExactScalar straight_walk_minus(const TwoTermParams& params, long m);

// Weight of the walk n → −n by n steps of −2: a^n / (4^{n−1} ((n−1)!)²).
// This is the whole cap-0 β⁻ when R = 1.
ExactScalar unit_descent_weight(const ExactScalar& a, long n);

// For v = a e^{−2ix} + b e^{2isx} and n = sm−1 the shell-0 walks carry a
// single −2 step. outer_walk_sum is minus the vertex-product sum of the two
// walks with that step first or last; inner_walk_sum is the sum over the
// other m−1 placements. Both are positive.
ExactScalar outer_walk_sum(long s, long m);
ExactScalar inner_walk_sum(long s, long m);
// outer_walk_sum in Γ form, 2s/((2s)^{2m} m!) · Γ(1−1/s)/Γ(m−1/s), with
// the Γ quotient telescoped exactly.
ExactScalar outer_walk_sum_gamma_form(long s, long m);

// k-th Taylor coefficient of 1 − (1−w)^α: 0, α, α∏_{t=1}^{k−1}(t−α)/k!.
ExactScalar binomial_series_coefficient(const Rational& alpha, long k);

// inner/outer = 1 − A_{2α}(m)/(2A_α(m)) with α = 1/s.
ExactScalar inner_outer_ratio(long s, long m);
// The same ratio as 1 − Γ(1−α)Γ(m−2α)/(Γ(m−α)Γ(1−2α)), telescoped.
ExactScalar inner_outer_ratio_gamma_form(long s, long m);

// Leading term of β⁺_n(0) for r = d = 1, n = sm−1, evaluated through Γ.
AsymptoticValue beta_plus_leading(const TwoTermParams& params, long m,
                                  mpfr_prec_t bits = kDefaultPrecision);
// a^n / (4^{n−1} ((n−1)!)²).
AsymptoticValue beta_minus_leading(const ExactScalar& a, long n,
                                   mpfr_prec_t bits = kDefaultPrecision);
// R = S, n = Rm: 4R² (c/(4R²))^m / ((m−1)!)² with c = b for β⁺, a for β⁻.
AsymptoticValue beta_equal_leading(const TwoTermParams& params, WalkKind kind, long m,
                                   mpfr_prec_t bits = kDefaultPrecision);

}  // namespace hillwalk

#endif  // HILLWALK_BETA_HPP
