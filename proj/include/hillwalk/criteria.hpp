#ifndef HILLWALK_CRITERIA_HPP
#define HILLWALK_CRITERIA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hillwalk/beta.hpp"
#include "hillwalk/numerics.hpp"
#include "hillwalk/potential.hpp"
#include "hillwalk/spectra.hpp"

namespace hillwalk {

// β⁺ or β⁻ vanished where a ratio was needed.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Conclusion { ContainsBasis, NoBasis, Inconclusive };
const char* to_string(Conclusion c);

struct Thresholds {
  double divergence = 1e3;  // no-basis needs the last value above this
  double cap = 1e2;         // contains-basis needs every value at most this
  int monotone_window = 3;  // trailing points that must grow strictly
  // A capped quantity that still grows strictly over the window by at least
  // this factor is reported inconclusive rather than bounded.
  double growth_guard = 2.0;
};

enum class Parity { Even, Odd, Both };
Parity parity_for(BoundaryCondition bc);

struct IndexSet {
  enum class Generator { RsdMultiples, SmMinusOne, ModRNonzero, RMultiples, Explicit };
  Generator generator = Generator::Explicit;
  Parity parity = Parity::Both;
  // Range of m for RsdMultiples and SmMinusOne, of n otherwise.
  long lo = 1;
  long hi = 12;
  std::vector<long> explicit_list;

  // Indices n, ascending, filtered by parity.
  std::vector<long> indices(const TwoTermParams& params) const;
  std::string describe() const;
  nlohmann::json to_json() const;
  // "rsd", "sm-1", "mod-R-nonzero", "R-multiples" or "list:5,8,11".
  static IndexSet parse(const std::string& generator, long lo, long hi,
                        Parity parity = Parity::Both);
};

struct EvidenceRow {
  long n = 0;
  bool structural_zero = false;  // both β vanish identically (Δ₀)
  double value = 0.0;            // the monitored quantity on Δ₁
  nlohmann::json details = nlohmann::json::object();
};

struct BasisVerdict {
  std::string criterion;  // "C1", "C2", "C3", or a combination
  nlohmann::json delta = nlohmann::json::object();
  std::vector<EvidenceRow> rows;
  Conclusion conclusion = Conclusion::Inconclusive;
  Thresholds thresholds;
  std::vector<std::string> caveats;
  std::string rule;  // analytic rule behind the conclusion, if any
};

// max(|β⁻/β⁺|, |β⁺/β⁻|).
double beta_imbalance(const ExactScalar& beta_plus, const ExactScalar& beta_minus);

// Threshold rule over the monitored values of Δ₁ (empty Δ₁ contains a basis).
Conclusion threshold_conclusion(const std::vector<double>& values, const Thresholds& thresholds);

struct WalkCriterionOptions {
  ExactScalar z;  // evaluation point, 0 by default
  ShellCaps caps;
  Thresholds thresholds;
  bool check_stability = true;  // sample |β(z)| on {0, ±1, ±i} with c = 2
};

// t_n(z) over the index set, with Δ₀ detected from step-count feasibility.
BasisVerdict beta_ratio_verdict(const TwoTermPotential& pot, const std::vector<long>& indices,
                                const WalkCriterionOptions& options = {});

// t_n(z*) with z* = ½(λ⁻ + λ⁺) − n², for a simple pair.
double centered_beta_ratio(const SpectralPair& pair, const TwoTermPotential& pot,
                           const ShellCaps& caps = {});

// |λ⁺ − μ| / |λ⁺ − λ⁻|.
double dirichlet_deviation_ratio(const SpectralPair& pair);

// Verdicts from refined spectral pairs (double pairs count as Δ₀).
BasisVerdict centered_ratio_verdict(const std::vector<SpectralPair>& pairs,
                                    const TwoTermPotential& pot, const ShellCaps& caps = {},
                                    const Thresholds& thresholds = {});
BasisVerdict deviation_ratio_verdict(const std::vector<SpectralPair>& pairs,
                                     const Thresholds& thresholds = {});

struct FamilyOptions {
  ShellCaps caps;
  mpfr_prec_t precision = kDefaultPrecision;
  double slack = 0.8;  // fraction of the predicted log-decay that must show
};

// Potential a e^{−2iRx} + b e^{2iSx}, R ≠ S, along n = rsd·m: exact
// |β⁻(0)/β⁺(0)| table and the analytic verdict for the bc.
BasisVerdict commensurate_report(const ExactScalar& a, const ExactScalar& b, long R, long S,
                                 BoundaryCondition bc, long m_lo, long m_hi,
                                 const FamilyOptions& options = {});

// Potential a e^{−2ix} + b e^{2isx}, s ≥ 3, along n = sm − 1; antiperiodic
// verdict.
BasisVerdict near_multiple_report(const ExactScalar& a, const ExactScalar& b, long s, long m_lo,
                                  long m_hi, const FamilyOptions& options = {});

// Potential a e^{−2iRx} + b e^{2iRx}: contains a basis for R even under
// Per−, otherwise iff |a| = |b|. Rows corroborate over 1 ≤ n ≤ n_max.
BasisVerdict equal_frequency_verdict(const ExactScalar& a, const ExactScalar& b, long R,
                                     BoundaryCondition bc, long n_max = 12,
                                     const ShellCaps& caps = {});

struct ComparisonOptions {
  ComparisonOptions() {
    spectrum.precision = kDefaultPrecision;
    spectrum.pairing_tolerance = 1e-40;
  }
  SpectrumOptions spectrum;
  ShellCaps caps;
  Thresholds thresholds;
};

// All three criteria side by side over the pairs N < n ≤ n_max.
struct CriteriaComparison {
  BasisVerdict walk_ratio;
  BasisVerdict centered_ratio;
  BasisVerdict deviation_ratio;
  Conclusion combined = Conclusion::Inconclusive;
};
CriteriaComparison compare_criteria(const TwoTermPotential& pot, BoundaryCondition bc,
                                    const ComparisonOptions& options);

nlohmann::json verdict_to_json(const BasisVerdict& verdict);
nlohmann::json comparison_to_json(const CriteriaComparison& comparison);

}  // namespace hillwalk

#endif  // HILLWALK_CRITERIA_HPP
