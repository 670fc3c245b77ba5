#include "hillwalk/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace hillwalk {

const char* to_string(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::PeriodicPlus: return "per+";
    case BoundaryCondition::PeriodicMinus: return "per-";
    case BoundaryCondition::Dirichlet: return "dirichlet";
  }
  return "?";
}

BoundaryCondition parse_boundary_condition(const std::string& text) {
  if (text == "per+" || text == "periodic") return BoundaryCondition::PeriodicPlus;
  if (text == "per-" || text == "antiperiodic") return BoundaryCondition::PeriodicMinus;
  if (text == "dirichlet") return BoundaryCondition::Dirichlet;
  throw DomainError("unknown boundary condition '" + text + "' (per+, per-, dirichlet)");
}

bool in_parity_class(BoundaryCondition bc, long n) {
  if (n < 1) return false;
  switch (bc) {
    case BoundaryCondition::PeriodicPlus: return n % 2 == 0;
    case BoundaryCondition::PeriodicMinus: return n % 2 != 0;
    case BoundaryCondition::Dirichlet: return true;
  }
  return false;
}

LocalizationError::LocalizationError(long n, long found, long expected)
    : std::runtime_error("localization violated: disc D_" + std::to_string(n) + " holds " +
                         std::to_string(found) + " eigenvalues, expected " +
                         std::to_string(expected) + " (increase K or N)"),
      n_(n),
      found_(found) {}

long TruncatedOperator::index_of(long frequency) const {
  const auto it = std::find(frequencies.begin(), frequencies.end(), frequency);
  return it == frequencies.end() ? -1 : static_cast<long>(it - frequencies.begin());
}

namespace {

std::vector<long> basis_frequencies(BoundaryCondition bc, long K) {
  std::vector<long> f;
  switch (bc) {
    case BoundaryCondition::PeriodicPlus:
      for (long k = -K; k <= K; ++k) f.push_back(2 * k);
      break;
    case BoundaryCondition::PeriodicMinus:
      for (long k = -K; k <= K - 1; ++k) f.push_back(2 * k + 1);
      break;
    case BoundaryCondition::Dirichlet:
      for (long k = 1; k <= K; ++k) f.push_back(k);
      break;
  }
  return f;
}

long expected_count(BoundaryCondition bc) { return bc == BoundaryCondition::Dirichlet ? 1 : 2; }

bool in_disc(std::complex<double> lambda, long n) {
  return std::abs(lambda - std::complex<double>(static_cast<double>(n * n), 0.0)) < 1.0;
}

// (2/π)∫₀^π sin(jx) v(x) sin(kx) dx.
std::complex<double> sine_coupling(const FourierPotential& pot, long j, long k) {
  const long l1 = j - k;
  const long l2 = j + k;
  if (l1 % 2 == 0) {
    const ExactScalar v = pot.coefficient(l1) + pot.coefficient(-l1) - pot.coefficient(l2) -
                          pot.coefficient(-l2);
    return 0.5 * v.to_complex();
  }
  std::complex<double> sum = 0.0;
  for (const auto& [m, value] : pot.coefficients()) {
    const double md = static_cast<double>(m);
    const double term = 1.0 / (md * md - static_cast<double>(l1 * l1)) -
                        1.0 / (md * md - static_cast<double>(l2 * l2));
    sum += value.to_complex() * std::complex<double>(0.0, 2.0 * md * term);
  }
  return sum / std::numbers::pi;
}

}  // namespace

TruncatedOperator assemble(const FourierPotential& pot, BoundaryCondition bc, long K) {
  if (K < 1) throw DomainError("cutoff K must be at least 1");
  TruncatedOperator op;
  op.bc = bc;
  op.K = K;
  op.frequencies = basis_frequencies(bc, K);
  const long dim = op.dim();
  op.entries = Eigen::MatrixXcd::Zero(dim, dim);
  for (long i = 0; i < dim; ++i) {
    const double f = static_cast<double>(op.frequencies[static_cast<std::size_t>(i)]);
    op.entries(i, i) = f * f;
  }
  if (bc == BoundaryCondition::Dirichlet) {
    for (long i = 0; i < dim; ++i) {
      for (long j = 0; j < dim; ++j) op.entries(i, j) += sine_coupling(pot, i + 1, j + 1);
    }
  } else {
    for (long i = 0; i < dim; ++i) {
      for (const auto& [m, value] : pot.coefficients()) {
        // Row k couples to column k′ = k − m/2.
        const long j = i - m / 2;
        if (j >= 0 && j < dim) op.entries(i, j) += value.to_complex();
      }
    }
  }
  return op;
}

ExactScalar exact_entry(const FourierPotential& pot, BoundaryCondition bc, long K, long row,
                        long col) {
  if (bc == BoundaryCondition::Dirichlet) {
    throw DomainError("Dirichlet matrix entries are not exact rationals");
  }
  // Both periodic bases start at k = −K.
  const long k = row - K;
  const long kp = col - K;
  ExactScalar value = pot.coefficient(2 * (k - kp));
  if (row == col) {
    const long f = bc == BoundaryCondition::PeriodicPlus ? 2 * k : 2 * k + 1;
    value += ExactScalar(f * f);
  }
  return value;
}

std::vector<std::complex<double>> eigenvalues(const TruncatedOperator& op,
                                              const EigenOptions& options) {
  if (op.dim() > options.max_dim) {
    throw DomainError("matrix dimension " + std::to_string(op.dim()) + " exceeds the limit " +
                      std::to_string(options.max_dim));
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(op.entries, true);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver did not converge");
  }
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  const double scale = std::max(op.entries.norm(), 1.0);
  for (long i = 0; i < op.dim(); ++i) {
    const Eigen::VectorXcd v = vectors.col(i);
    const double residual = (op.entries * v - values(i) * v).norm() / std::max(v.norm(), 1e-300);
    if (residual > options.tolerance * scale) {
      throw std::runtime_error("eigensolver backward error " + std::to_string(residual / scale) +
                               " exceeds tolerance");
    }
  }
  std::vector<std::complex<double>> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

std::vector<DiscCount> disc_counts(const std::vector<std::complex<double>>& eigs,
                                   BoundaryCondition bc, long n_max) {
  std::vector<DiscCount> out;
  for (long n = 1; n <= n_max; ++n) {
    if (!in_parity_class(bc, n)) continue;
    const auto count = std::count_if(eigs.begin(), eigs.end(),
                                     [n](const auto& lambda) { return in_disc(lambda, n); });
    out.push_back({n, static_cast<long>(count)});
  }
  return out;
}

std::optional<long> working_cutoff(const std::vector<std::complex<double>>& eigs,
                                   BoundaryCondition bc, long n_max, long N_max) {
  const auto counts = disc_counts(eigs, bc, n_max);
  const long expected = expected_count(bc);
  long N = 0;
  for (const auto& c : counts) {
    if (c.count != expected) N = c.n;
  }
  if (N > N_max) return std::nullopt;
  return N;
}

namespace {

constexpr mpfr_prec_t kHardwareBits = kMinPrecision;

BigFloat distance(const BigComplex& x, const BigComplex& y) { return (x - y).abs(); }

bool precedes(const BigComplex& x, const BigComplex& y) {
  const int c = mpfr_cmp(x.re().get(), y.re().get());
  if (c != 0) return c < 0;
  return mpfr_cmp(x.im().get(), y.im().get()) < 0;
}

void finish_pair(SpectralPair& pair, double pairing_tolerance) {
  if (precedes(pair.lambda_plus, pair.lambda_minus)) {
    std::swap(pair.lambda_minus, pair.lambda_plus);
  }
  pair.gap = distance(pair.lambda_plus, pair.lambda_minus);
  const BigFloat half(0.5, pair.precision);
  const BigComplex n2(ExactScalar(pair.n * pair.n), pair.precision);
  BigComplex mean = pair.lambda_minus + pair.lambda_plus;
  mean = BigComplex(mean.re() * half, mean.im() * half);
  pair.z_star = mean - n2;
  pair.is_double = pair.gap.to_double() < pairing_tolerance;
}

}  // namespace

Localization localize_pairs(const std::vector<std::complex<double>>& eigs, BoundaryCondition bc,
                            long N, long n_max, double pairing_tolerance) {
  if (bc == BoundaryCondition::Dirichlet) {
    throw DomainError("pairs are defined for periodic and antiperiodic conditions");
  }
  Localization out;
  std::vector<char> used(eigs.size(), 0);
  for (long n = N + 1; n <= n_max; ++n) {
    if (!in_parity_class(bc, n)) continue;
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < eigs.size(); ++i) {
      if (in_disc(eigs[i], n)) inside.push_back(i);
    }
    if (inside.size() != 2) throw LocalizationError(n, static_cast<long>(inside.size()), 2);
    SpectralPair pair;
    pair.n = n;
    pair.precision = kHardwareBits;
    pair.lambda_minus = BigComplex(eigs[inside[0]], kHardwareBits);
    pair.lambda_plus = BigComplex(eigs[inside[1]], kHardwareBits);
    finish_pair(pair, pairing_tolerance);
    for (auto i : inside) used[i] = 1;
    out.pairs.push_back(std::move(pair));
  }
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    if (!used[i]) out.low_block.push_back(eigs[i]);
  }
  return out;
}

namespace {

// acc −= x·y without temporaries beyond the two scratch values.
void sub_product(BigComplex& acc, const BigComplex& x, const BigComplex& y, BigFloat& t1,
                 BigFloat& t2) {
  mpfr_mul(t1.get(), x.re().get(), y.re().get(), MPFR_RNDN);
  mpfr_mul(t2.get(), x.im().get(), y.im().get(), MPFR_RNDN);
  mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_sub(acc.re().get(), acc.re().get(), t1.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), x.re().get(), y.im().get(), MPFR_RNDN);
  mpfr_mul(t2.get(), x.im().get(), y.re().get(), MPFR_RNDN);
  mpfr_add(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_sub(acc.im().get(), acc.im().get(), t1.get(), MPFR_RNDN);
}

using HpVector = std::vector<BigComplex>;

// Dense LU with partial pivoting of A − σI; exploits the band structure by
// skipping zero entries.
class ShiftedLu {
 public:
  ShiftedLu(std::vector<HpVector> a, mpfr_prec_t bits) : a_(std::move(a)), bits_(bits) {
    const std::size_t n = a_.size();
    perm_.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    BigFloat t1(bits), t2(bits);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t pivot = k;
      double best = -1.0;
      for (std::size_t i = k; i < n; ++i) {
        if (a_[i][k].is_zero()) continue;
        const double mag = a_[i][k].abs().to_double();
        if (mag > best) {
          best = mag;
          pivot = i;
        }
      }
      if (best <= 0.0) throw std::runtime_error("singular shifted matrix");
      std::swap(a_[k], a_[pivot]);
      std::swap(perm_[k], perm_[pivot]);
      std::vector<std::size_t> cols;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!a_[k][j].is_zero()) cols.push_back(j);
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a_[i][k].is_zero()) continue;
        a_[i][k] /= a_[k][k];
        for (std::size_t j : cols) sub_product(a_[i][j], a_[i][k], a_[k][j], t1, t2);
      }
    }
  }

  HpVector solve(const HpVector& b) const {
    const std::size_t n = a_.size();
    BigFloat t1(bits_), t2(bits_);
    HpVector x(n, BigComplex(bits_));
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) {
        if (!a_[i][j].is_zero()) sub_product(x[i], a_[i][j], x[j], t1, t2);
      }
    }
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!a_[i][j].is_zero()) sub_product(x[i], a_[i][j], x[j], t1, t2);
      }
      x[i] /= a_[i][i];
    }
    return x;
  }

 private:
  std::vector<HpVector> a_;
  std::vector<std::size_t> perm_;
  mpfr_prec_t bits_;
};

BigComplex inner(const HpVector& u, const HpVector& v, mpfr_prec_t bits) {
  BigComplex sum(bits);
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i].conj() * v[i];
  return sum;
}

void normalize(HpVector& v, mpfr_prec_t bits) {
  BigFloat norm(bits);
  for (const auto& x : v) norm += x.norm();
  const BigComplex inv(BigFloat(Rational(1), bits) / sqrt(norm), BigFloat(bits));
  for (auto& x : v) x *= inv;
}

// Orthonormal basis of span{x, y}.
void orthonormalize(HpVector& x, HpVector& y, mpfr_prec_t bits) {
  normalize(x, bits);
  for (int pass = 0; pass < 2; ++pass) {
    const BigComplex c = inner(x, y, bits);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= c * x[i];
  }
  normalize(y, bits);
}

struct SparseRow {
  std::vector<std::pair<std::size_t, BigComplex>> entries;
};

HpVector multiply(const std::vector<SparseRow>& a, const HpVector& v, mpfr_prec_t bits) {
  HpVector out(a.size(), BigComplex(bits));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& [j, value] : a[i].entries) out[i] += value * v[j];
  }
  return out;
}

// Eigenvalues of [[p, q], [r, s]].
std::pair<BigComplex, BigComplex> eigen2(const BigComplex& p, const BigComplex& q,
                                         const BigComplex& r, const BigComplex& s,
                                         mpfr_prec_t bits) {
  const BigComplex half(ExactScalar(Rational(1, 2)), bits);
  const BigComplex mean = (p + s) * half;
  const BigComplex diff = (p - s) * half;
  const BigComplex root = sqrt(diff * diff + q * r);
  return {mean - root, mean + root};
}

}  // namespace

SpectralPair refine_pair(const FourierPotential& pot, BoundaryCondition bc, long K, long n,
                         std::complex<double> center, mpfr_prec_t bits,
                         double pairing_tolerance) {
  require_precision(bits);
  if (bc == BoundaryCondition::Dirichlet) {
    throw DomainError("refine_pair needs a periodic or antiperiodic condition");
  }
  if (!in_parity_class(bc, n)) throw DomainError("n is outside the parity class of the bc");
  const mpfr_prec_t work = bits + 64;
  const auto freqs = basis_frequencies(bc, K);
  const std::size_t dim = freqs.size();
  const auto find = [&](long f) {
    const auto it = std::find(freqs.begin(), freqs.end(), f);
    if (it == freqs.end()) throw DomainError("cutoff K too small for n = " + std::to_string(n));
    return static_cast<std::size_t>(it - freqs.begin());
  };
  const std::size_t lo = find(-n);
  const std::size_t hi = find(n);

  // The shift sits a little off the pair centre so A − σI stays invertible.
  const ExactScalar offset(Rational(1, 1 << 20), Rational(1, 1 << 21));
  const ExactScalar sigma = BigComplex(center, kHardwareBits).to_exact() + offset;
  const BigComplex sigma_hp(sigma, work);

  std::vector<SparseRow> a(dim);
  std::vector<HpVector> shifted(dim, HpVector(dim, BigComplex(work)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const ExactScalar e = exact_entry(pot, bc, K, static_cast<long>(i), static_cast<long>(j));
      if (e.is_zero() && i != j) continue;
      BigComplex value(e, work);
      if (!e.is_zero()) a[i].entries.emplace_back(j, value);
      if (i == j) value -= sigma_hp;
      shifted[i][j] = std::move(value);
    }
  }
  const ShiftedLu lu(std::move(shifted), work);

  HpVector x(dim, BigComplex(work));
  HpVector y(dim, BigComplex(work));
  x[lo] = BigComplex(ExactScalar(1), work);
  y[hi] = BigComplex(ExactScalar(1), work);

  const BigFloat scale(Rational(std::max<long>(n * n, 1)), work);
  BigFloat threshold(scale);
  mpfr_mul_2si(threshold.get(), threshold.get(), -static_cast<long>(bits) - 4, MPFR_RNDN);

  std::optional<std::pair<BigComplex, BigComplex>> previous;
  std::pair<BigComplex, BigComplex> ritz;
  bool converged = false;
  for (int iteration = 0; iteration < 400 && !converged; ++iteration) {
    x = lu.solve(x);
    y = lu.solve(y);
    orthonormalize(x, y, work);
    const HpVector ax = multiply(a, x, work);
    const HpVector ay = multiply(a, y, work);
    ritz = eigen2(inner(x, ax, work), inner(x, ay, work), inner(y, ax, work), inner(y, ay, work),
                  work);
    if (precedes(ritz.second, ritz.first)) std::swap(ritz.first, ritz.second);
    if (previous) {
      const BigFloat change = std::max(distance(ritz.first, previous->first),
                                       distance(ritz.second, previous->second),
                                       [](const BigFloat& p, const BigFloat& q) { return p < q; });
      converged = change < threshold;
    }
    previous = ritz;
  }
  if (!converged) throw std::runtime_error("pair refinement did not converge at n = " + std::to_string(n));

  SpectralPair pair;
  pair.n = n;
  pair.precision = bits;
  pair.lambda_minus = BigComplex(BigFloat(ritz.first.re().to_rational(), bits),
                                 BigFloat(ritz.first.im().to_rational(), bits));
  pair.lambda_plus = BigComplex(BigFloat(ritz.second.re().to_rational(), bits),
                                BigFloat(ritz.second.im().to_rational(), bits));
  for (const auto* lambda : {&pair.lambda_minus, &pair.lambda_plus}) {
    if (!in_disc(lambda->to_complex(), n)) throw LocalizationError(n, 1, 2);
  }
  finish_pair(pair, pairing_tolerance);
  return pair;
}

namespace {

std::complex<double> dirichlet_in_disc(const std::vector<std::complex<double>>& eigs, long n) {
  std::vector<std::complex<double>> inside;
  for (const auto& lambda : eigs) {
    if (in_disc(lambda, n)) inside.push_back(lambda);
  }
  if (inside.size() != 1) throw LocalizationError(n, static_cast<long>(inside.size()), 1);
  return inside.front();
}

BigComplex polish_dirichlet(const FourierPotential& pot, long n, std::complex<double> seed,
                            mpfr_prec_t bits) {
  BigComplex mu = dirichlet_newton(pot, BigComplex(seed, bits), bits);
  if (std::abs(mu.to_complex() - seed) > 1e-6 || !in_disc(mu.to_complex(), n)) {
    throw LocalizationError(n, 0, 1);
  }
  return mu;
}

}  // namespace

std::complex<double> dirichlet_close(const FourierPotential& pot, long K, long n,
                                     const EigenOptions& options) {
  if (n < 1 || n > K) throw DomainError("Dirichlet disc index must satisfy 1 <= n <= K");
  return dirichlet_in_disc(eigenvalues(assemble(pot, BoundaryCondition::Dirichlet, K), options),
                           n);
}

BigComplex dirichlet_close_precise(const FourierPotential& pot, long K, long n, mpfr_prec_t bits,
                                   const EigenOptions& options) {
  require_precision(bits);
  return polish_dirichlet(pot, n, dirichlet_close(pot, K, n, options), bits);
}

void attach_dirichlet(SpectralPair& pair, const BigComplex& mu) {
  pair.mu = mu;
  pair.deviation = distance(pair.lambda_plus, mu);
}

SpectrumReport compute_spectrum(const FourierPotential& pot, BoundaryCondition bc,
                                const SpectrumOptions& options) {
  if (options.K < 1) throw DomainError("cutoff K must be at least 1");
  if (options.precision != 0) require_precision(options.precision);
  SpectrumReport report;
  report.bc = bc;
  report.K = options.K;
  const auto eigs = eigenvalues(assemble(pot, bc, options.K), options.eigen);
  long N = options.N;
  if (N < 0) {
    const auto cutoff = working_cutoff(eigs, bc, options.n_max);
    if (!cutoff) {
      for (const auto& c : disc_counts(eigs, bc, options.n_max)) {
        if (c.count != expected_count(bc)) throw LocalizationError(c.n, c.count, expected_count(bc));
      }
    }
    N = cutoff.value_or(0);
  }
  report.N = N;

  std::vector<std::complex<double>> dirichlet_eigs;
  if (bc == BoundaryCondition::Dirichlet) {
    dirichlet_eigs = eigs;
  } else if (options.with_dirichlet) {
    dirichlet_eigs =
        eigenvalues(assemble(pot, BoundaryCondition::Dirichlet, options.K), options.eigen);
  }
  const auto mu_at = [&](long n) {
    const auto seed = dirichlet_in_disc(dirichlet_eigs, n);
    if (options.precision == 0) return BigComplex(seed, kHardwareBits);
    return polish_dirichlet(pot, n, seed, options.precision);
  };

  if (bc == BoundaryCondition::Dirichlet) {
    std::vector<char> used(eigs.size(), 0);
    for (long n = N + 1; n <= options.n_max; ++n) {
      report.dirichlet.emplace_back(n, mu_at(n));
      for (std::size_t i = 0; i < eigs.size(); ++i) {
        if (in_disc(eigs[i], n)) used[i] = 1;
      }
    }
    for (std::size_t i = 0; i < eigs.size(); ++i) {
      if (!used[i]) report.low_block.push_back(eigs[i]);
    }
    return report;
  }

  auto localization = localize_pairs(eigs, bc, N, options.n_max, options.pairing_tolerance);
  report.low_block = std::move(localization.low_block);
  for (auto& pair : localization.pairs) {
    if (options.precision != 0) {
      const std::complex<double> center = 0.5 * (pair.minus() + pair.plus());
      pair = refine_pair(pot, bc, options.K, pair.n, center, options.precision,
                         options.pairing_tolerance);
    }
    if (options.with_dirichlet) attach_dirichlet(pair, mu_at(pair.n));
    report.pairs.push_back(std::move(pair));
  }
  return report;
}

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_spectrum_csv(std::ostream& out, const SpectrumReport& report) {
  out << "n,re_lambda_minus,im_lambda_minus,re_lambda_plus,im_lambda_plus,gap,re_mu,im_mu,"
         "deviation,z_star_re,z_star_im,flags\n";
  for (const auto& p : report.pairs) {
    const auto lm = p.minus();
    const auto lp = p.plus();
    out << p.n << ',' << fmt(lm.real()) << ',' << fmt(lm.imag()) << ',' << fmt(lp.real()) << ','
        << fmt(lp.imag()) << ',' << fmt(p.gap.to_double()) << ',';
    if (p.mu) {
      const auto mu = p.mu->to_complex();
      out << fmt(mu.real()) << ',' << fmt(mu.imag()) << ',' << fmt(p.deviation->to_double());
    } else {
      out << ",,";
    }
    const auto z = p.z_star.to_complex();
    out << ',' << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << (p.is_double ? "double" : "simple")
        << (p.precision > kHardwareBits ? ";refined" : "") << '\n';
  }
  for (const auto& [n, mu] : report.dirichlet) {
    const auto m = mu.to_complex();
    out << n << ",,,,,," << fmt(m.real()) << ',' << fmt(m.imag()) << ",,,,dirichlet\n";
  }
}

long general_step_cap(const FourierPotential& pot, long n, const ShellCaps& caps) {
  if (caps.w_steps >= 0) return caps.w_steps;
  const long reach = pot.max_frequency() == 0 ? 0 : (2 * n + pot.max_frequency() - 1) / pot.max_frequency();
  return reach + 4;
}

double reduction_residual(const FourierPotential& pot, const std::optional<TwoTermParams>& params,
                          long n, const ExactScalar& lambda, const ShellCaps& caps,
                          mpfr_prec_t bits) {
  require_precision(bits);
  const ExactScalar z = lambda - ExactScalar(n * n);
  ExactScalar bp, bm, alpha;
  if (params) {
    const TwoTermPotential tt{pot, *params};
    bp = beta_plus(tt, n, z, caps.x).value;
    bm = beta_minus(tt, n, z, caps.y).value;
    alpha = alpha_n(pot, n, z, caps.w_steps_for(*params)).value;
  } else {
    const long cap = general_step_cap(pot, n, caps);
    bp = walk_sum(pot, n, WalkKind::X, z, cap).value;
    bm = walk_sum(pot, n, WalkKind::Y, z, cap).value;
    alpha = alpha_n(pot, n, z, cap).value;
  }
  const ExactScalar shifted = z - alpha;
  const ExactScalar residual = shifted * shifted - bm * bp;
  return sqrt(BigFloat(residual.norm(), bits)).to_double();
}

}  // namespace hillwalk
