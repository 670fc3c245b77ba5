#ifndef HILLWALK_POTENTIAL_HPP
#define HILLWALK_POTENTIAL_HPP

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "hillwalk/numerics.hpp"

namespace hillwalk {

// Trigonometric polynomial v(x) = Σ V(m) e^{imx} with m even and nonzero.
class FourierPotential {
 public:
  FourierPotential() = default;
  // Zero coefficients are dropped; odd frequencies and a nonzero constant
  // term are rejected.
  explicit FourierPotential(const std::map<long, ExactScalar>& coeffs);

  const ExactScalar& coefficient(long m) const;
  const std::map<long, ExactScalar>& coefficients() const { return coeffs_; }
  std::vector<long> support() const;
  bool empty() const { return coeffs_.empty(); }
  // max |m| over the support, 0 for the empty potential.
  long max_frequency() const;
  // True when V(m) = V(−m) for all m, i.e. v is even.
  bool is_even() const;

 private:
  std::map<long, ExactScalar> coeffs_;
};

// a·e^{−2iRx} + b·e^{2iSx} with R = d·r, S = d·s, gcd(r, s) = 1.
struct TwoTermParams {
  ExactScalar a;
  ExactScalar b;
  long R = 1;
  long S = 1;
  long d = 1;
  long r = 1;
  long s = 1;

  // max(|a|, |b|) as a double.
  double coefficient_bound() const;
};

struct TwoTermPotential {
  FourierPotential potential;
  TwoTermParams params;
};

TwoTermPotential two_term(const ExactScalar& a, const ExactScalar& b, long R, long S);

ExactScalar fourier_coefficient(const FourierPotential& pot, long m);
std::vector<long> support(const FourierPotential& pot);

// Recovers the two-term parameters when the support is exactly {−2R, 2S}.
std::optional<TwoTermParams> as_two_term(const FourierPotential& pot);

// A potential together with its two-term parameters when it has that shape.
struct PotentialSpec {
  FourierPotential potential;
  std::optional<TwoTermParams> params;
};

// {"terms":[{"m":-2,"re":"1","im":"0"}, ...]} or {"a":"1","b":"1","R":1,"S":3}.
// Scalars may be rational strings, Gaussian literals ("1/2+i") or
// {"re": "...", "im": "..."} objects.
PotentialSpec parse_potential(const nlohmann::json& j);
nlohmann::json potential_to_json(const FourierPotential& pot);

ExactScalar parse_scalar(const nlohmann::json& j);
nlohmann::json scalar_to_json(const ExactScalar& x);

}  // namespace hillwalk

#endif  // HILLWALK_POTENTIAL_HPP
