#include "hillwalk/potential.hpp"

#include <cmath>
#include <numeric>

namespace hillwalk {

FourierPotential::FourierPotential(const std::map<long, ExactScalar>& coeffs) {
  for (const auto& [m, value] : coeffs) {
    if (value.is_zero()) continue;
    if (m == 0) throw DomainError("the constant Fourier coefficient V(0) must be zero");
    if (m % 2 != 0) {
      throw DomainError("Fourier frequency " + std::to_string(m) + " is odd; v must be pi-periodic");
    }
    coeffs_.emplace(m, value);
  }
}

const ExactScalar& FourierPotential::coefficient(long m) const {
  static const ExactScalar zero;
  const auto it = coeffs_.find(m);
  return it == coeffs_.end() ? zero : it->second;
}

std::vector<long> FourierPotential::support() const {
  std::vector<long> out;
  out.reserve(coeffs_.size());
  for (const auto& entry : coeffs_) out.push_back(entry.first);
  return out;
}

long FourierPotential::max_frequency() const {
  long best = 0;
  for (const auto& entry : coeffs_) best = std::max(best, std::labs(entry.first));
  return best;
}

bool FourierPotential::is_even() const {
  for (const auto& [m, value] : coeffs_) {
    if (coefficient(-m) != value) return false;
  }
  return true;
}

double TwoTermParams::coefficient_bound() const {
  return std::sqrt(std::max(a.norm().get_d(), b.norm().get_d()));
}

TwoTermPotential two_term(const ExactScalar& a, const ExactScalar& b, long R, long S) {
  if (a.is_zero() || b.is_zero()) throw DomainError("two-term coefficients must be nonzero");
  if (R < 1 || S < 1) throw DomainError("R and S must be positive");
  TwoTermParams params;
  params.a = a;
  params.b = b;
  params.R = R;
  params.S = S;
  params.d = std::gcd(R, S);
  params.r = R / params.d;
  params.s = S / params.d;
  FourierPotential pot({{-2 * R, a}, {2 * S, b}});
  return {std::move(pot), std::move(params)};
}

ExactScalar fourier_coefficient(const FourierPotential& pot, long m) { return pot.coefficient(m); }

std::vector<long> support(const FourierPotential& pot) { return pot.support(); }

std::optional<TwoTermParams> as_two_term(const FourierPotential& pot) {
  const auto& c = pot.coefficients();
  if (c.size() != 2) return std::nullopt;
  const auto neg = c.begin();
  const auto pos = std::next(neg);
  if (neg->first >= 0 || pos->first <= 0) return std::nullopt;
  return two_term(neg->second, pos->second, -neg->first / 2, pos->first / 2).params;
}

ExactScalar parse_scalar(const nlohmann::json& j) {
  if (j.is_string()) return ExactScalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return ExactScalar(j.get<long>());
  if (j.is_object()) {
    const auto part = [&](const char* key) {
      if (!j.contains(key)) return Rational(0);
      const auto& v = j.at(key);
      if (v.is_number_integer()) return Rational(v.get<long>());
      return parse_rational(v.get<std::string>());
    };
    return {part("re"), part("im")};
  }
  throw DomainError("scalar must be a rational string or a {re, im} object");
}

nlohmann::json scalar_to_json(const ExactScalar& x) {
  return {{"re", x.re().get_str()}, {"im", x.im().get_str()}};
}

PotentialSpec parse_potential(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("potential must be a JSON object");
  if (j.contains("terms")) {
    std::map<long, ExactScalar> coeffs;
    for (const auto& term : j.at("terms")) {
      const long m = term.at("m").get<long>();
      if (coeffs.count(m)) throw DomainError("duplicate frequency " + std::to_string(m));
      coeffs[m] = parse_scalar(term);
    }
    FourierPotential pot(coeffs);
    auto params = as_two_term(pot);
    return {std::move(pot), std::move(params)};
  }
  if (j.contains("a") && j.contains("b")) {
    auto tt = two_term(parse_scalar(j.at("a")), parse_scalar(j.at("b")), j.at("R").get<long>(),
                       j.at("S").get<long>());
    return {std::move(tt.potential), std::move(tt.params)};
  }
  throw DomainError("potential needs either \"terms\" or the a/b/R/S shorthand");
}

nlohmann::json potential_to_json(const FourierPotential& pot) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, value] : pot.coefficients()) {
    terms.push_back({{"m", m}, {"re", value.re().get_str()}, {"im", value.im().get_str()}});
  }
  return {{"terms", terms}};
}

}  // namespace hillwalk
