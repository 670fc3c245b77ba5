#ifndef HILLWALK_SPECTRA_HPP
#define HILLWALK_SPECTRA_HPP

#include <complex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hillwalk/beta.hpp"
#include "hillwalk/numerics.hpp"
#include "hillwalk/potential.hpp"

namespace hillwalk {

// Per+: y(π) = y(0), basis e^{2ikx}. Per−: y(π) = −y(0), basis e^{(2k+1)ix}.
// Dirichlet: y(0) = y(π) = 0, basis sin(kx).
enum class BoundaryCondition { PeriodicPlus, PeriodicMinus, Dirichlet };

const char* to_string(BoundaryCondition bc);
// "per+", "per-", "dirichlet".
BoundaryCondition parse_boundary_condition(const std::string& text);
// n even for Per+, odd for Per−, any n ≥ 1 for Dirichlet.
bool in_parity_class(BoundaryCondition bc, long n);

// A disc D_n held the wrong number of eigenvalues.
class LocalizationError : public std::runtime_error {
 public:
  LocalizationError(long n, long found, long expected);
  long n() const { return n_; }
  long found() const { return found_; }

 private:
  long n_;
  long found_;
};

struct TruncatedOperator {
  BoundaryCondition bc = BoundaryCondition::PeriodicPlus;
  long K = 0;
  // Free frequency of each basis element: 2k, 2k+1 or k.
  std::vector<long> frequencies;
  Eigen::MatrixXcd entries;

  long dim() const { return static_cast<long>(frequencies.size()); }
  // Basis index whose free frequency is f, or -1.
  long index_of(long frequency) const;
};

TruncatedOperator assemble(const FourierPotential& pot, BoundaryCondition bc, long K);

// Exact entry of the periodic or antiperiodic matrix. Dirichlet entries
// carry 1/π for non-even potentials and have no exact form.
ExactScalar exact_entry(const FourierPotential& pot, BoundaryCondition bc, long K, long row,
                        long col);

inline constexpr long kDefaultMaxDim = 512;

struct EigenOptions {
  double tolerance = 1e-10;  // backward error relative to ‖A‖
  long max_dim = kDefaultMaxDim;
};

// All eigenvalues, sorted by (Re, Im).
std::vector<std::complex<double>> eigenvalues(const TruncatedOperator& op,
                                              const EigenOptions& options = {});

struct SpectralPair {
  long n = 0;
  BigComplex lambda_minus;
  BigComplex lambda_plus;
  std::optional<BigComplex> mu;
  BigFloat gap;
  std::optional<BigFloat> deviation;
  BigComplex z_star;
  bool is_double = false;
  mpfr_prec_t precision = 53;

  std::complex<double> minus() const { return lambda_minus.to_complex(); }
  std::complex<double> plus() const { return lambda_plus.to_complex(); }
};

struct DiscCount {
  long n = 0;
  long count = 0;
};

// Eigenvalue counts of D_n = {|λ − n²| < 1} for n in the bc's parity class,
// 1 ≤ n ≤ n_max.
std::vector<DiscCount> disc_counts(const std::vector<std::complex<double>>& eigs,
                                   BoundaryCondition bc, long n_max);

// Smallest N ≤ N_max such that every D_n with N < n ≤ n_max holds the
// expected count (2 for Per±, 1 for Dirichlet).
std::optional<long> working_cutoff(const std::vector<std::complex<double>>& eigs,
                                   BoundaryCondition bc, long n_max, long N_max = 10);

struct Localization {
  std::vector<SpectralPair> pairs;
  // Eigenvalues not assigned to any D_n with N < n ≤ n_max.
  std::vector<std::complex<double>> low_block;
};

inline constexpr double kDefaultPairingTolerance = 1e-8;

// Pairs for every N < n ≤ n_max in the parity class of a periodic bc.
// Throws LocalizationError when a disc does not hold exactly two.
Localization localize_pairs(const std::vector<std::complex<double>>& eigs, BoundaryCondition bc,
                            long N, long n_max,
                            double pairing_tolerance = kDefaultPairingTolerance);

// High-precision pair in D_n by block inverse iteration on the exact
// periodic/antiperiodic matrix. `center` seeds the shift.
SpectralPair refine_pair(const FourierPotential& pot, BoundaryCondition bc, long K, long n,
                         std::complex<double> center, mpfr_prec_t bits,
                         double pairing_tolerance = kDefaultPairingTolerance);

// The unique Galerkin Dirichlet eigenvalue in D_n.
std::complex<double> dirichlet_close(const FourierPotential& pot, long K, long n,
                                     const EigenOptions& options = {});
// Same eigenvalue polished to `bits` by shooting.
BigComplex dirichlet_close_precise(const FourierPotential& pot, long K, long n, mpfr_prec_t bits,
                                   const EigenOptions& options = {});

// y(π; μ) and ∂y(π; μ)/∂μ for −y″ + v y = μ y, y(0) = 0, y′(0) = 1, by
// Taylor-series stepping at `bits`.
struct ShootingValue {
  BigComplex value;
  BigComplex derivative;
};
ShootingValue dirichlet_shoot(const FourierPotential& pot, const BigComplex& mu, mpfr_prec_t bits);

// Newton on μ ↦ y(π; μ) from `seed`.
BigComplex dirichlet_newton(const FourierPotential& pot, const BigComplex& seed, mpfr_prec_t bits);

// Attach μ_n and the deviation |λ⁺ − μ| to a pair.
void attach_dirichlet(SpectralPair& pair, const BigComplex& mu);

struct SpectrumOptions {
  long K = 64;
  long N = -1;      // negative: choose the working cutoff
  long n_max = 12;
  mpfr_prec_t precision = 0;  // 0: hardware doubles only
  double pairing_tolerance = kDefaultPairingTolerance;
  bool with_dirichlet = true;
  EigenOptions eigen;
};

struct SpectrumReport {
  BoundaryCondition bc = BoundaryCondition::PeriodicPlus;
  long K = 0;
  long N = 0;
  std::vector<SpectralPair> pairs;  // Per±
  std::vector<std::pair<long, BigComplex>> dirichlet;  // Dirichlet rows
  std::vector<std::complex<double>> low_block;
};

SpectrumReport compute_spectrum(const FourierPotential& pot, BoundaryCondition bc,
                                const SpectrumOptions& options);

// n, re(λ⁻), im(λ⁻), re(λ⁺), im(λ⁺), gap, re(μ), im(μ), deviation,
// z_star_re, z_star_im, flags.
void write_spectrum_csv(std::ostream& out, const SpectrumReport& report);

// |(z − α_n(z))² − β⁻_n(z)β⁺_n(z)| with z = λ − n² taken exactly. Two-term
// potentials use the shell caps; other potentials sum all walks of at most
// general_step_cap(pot, n, caps) steps.
long general_step_cap(const FourierPotential& pot, long n, const ShellCaps& caps);
double reduction_residual(const FourierPotential& pot, const std::optional<TwoTermParams>& params,
                          long n, const ExactScalar& lambda, const ShellCaps& caps,
                          mpfr_prec_t bits = kDefaultPrecision);

}  // namespace hillwalk

#endif  // HILLWALK_SPECTRA_HPP
