#ifndef HILLWALK_NUMERICS_HPP
#define HILLWALK_NUMERICS_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace hillwalk {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr mpfr_prec_t kDefaultPrecision = 256;
inline constexpr mpfr_prec_t kMinPrecision = 64;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Gaussian rational p/q + (r/s)i. gmp keeps both parts canonical after every
// operation, so denominators stay positive and reduced.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  // Accepts "3", "-1/2", "2i", "i", "-3/4i", "1/2+3/4i", "1-i".
  static ExactScalar parse(std::string_view text);
  static ExactScalar imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  // |x|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  ExactScalar conj() const { return {re_, -im_}; }
  ExactScalar pow(long exponent) const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
  friend ExactScalar operator-(const ExactScalar& x) { return {-x.re_, -x.im_}; }
  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  // "p/q" for real values, otherwise "p/q+r/si".
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

// num/den in lowest terms. gmpxx leaves the two-argument constructor
// uncanonicalized.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses a single rational literal "p" or "p/q".
Rational parse_rational(std::string_view text);

// RAII handle around an mpfr_t. Binary operations produce a result at the
// larger of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = kDefaultPrecision);
  BigFloat(const Rational& value, mpfr_prec_t bits);
  BigFloat(double value, mpfr_prec_t bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Exact binary value as a rational.
  Rational to_rational() const;
  std::string to_string(int digits = 20) const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat x, const BigFloat& y) { return x += y; }
  friend BigFloat operator-(BigFloat x, const BigFloat& y) { return x -= y; }
  friend BigFloat operator*(BigFloat x, const BigFloat& y) { return x *= y; }
  friend BigFloat operator/(BigFloat x, const BigFloat& y) { return x /= y; }
  friend BigFloat operator-(BigFloat x) {
    mpfr_neg(x.value_, x.value_, MPFR_RNDN);
    return x;
  }
  friend bool operator<(const BigFloat& x, const BigFloat& y) {
    return mpfr_less_p(x.value_, y.value_) != 0;
  }

  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat abs(const BigFloat& x);
  friend BigFloat log(const BigFloat& x);

 private:
  mpfr_t value_;
};

class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t bits = kDefaultPrecision) : re_(bits), im_(bits) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(const ExactScalar& value, mpfr_prec_t bits)
      : re_(value.re(), bits), im_(value.im(), bits) {}
  BigComplex(std::complex<double> value, mpfr_prec_t bits)
      : re_(value.real(), bits), im_(value.imag(), bits) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  BigFloat& re() { return re_; }
  BigFloat& im() { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  BigFloat abs() const;
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigComplex conj() const { return {re_, -im_}; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  ExactScalar to_exact() const { return {re_.to_rational(), im_.to_rational()}; }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  friend BigComplex operator+(BigComplex x, const BigComplex& y) { return x += y; }
  friend BigComplex operator-(BigComplex x, const BigComplex& y) { return x -= y; }
  friend BigComplex operator*(BigComplex x, const BigComplex& y) { return x *= y; }
  friend BigComplex operator/(BigComplex x, const BigComplex& y) { return x /= y; }
  friend BigComplex operator-(const BigComplex& x) { return {-x.re_, -x.im_}; }

  // Principal square root.
  friend BigComplex sqrt(const BigComplex& x);

 private:
  BigFloat re_;
  BigFloat im_;
};

void require_precision(mpfr_prec_t bits);

// Γ(1−α)/Γ(m−α) as the exact rational 1/∏_{t=1}^{m−1}(t−α).
ExactScalar gamma_product_identity(const Rational& alpha, long m);

// Γ(x) at the requested precision. Throws DomainError at the poles.
BigComplex gamma_value(const Rational& x, mpfr_prec_t bits = kDefaultPrecision);

ExactScalar binomial(long n, long k);
Integer factorial(long n);

// ∏Γ(numerator_args) / ∏Γ(denominator_args).
struct GammaRatio {
  std::vector<Rational> numerator_args;
  std::vector<Rational> denominator_args;

  BigFloat evaluate(mpfr_prec_t bits = kDefaultPrecision) const;
  // Exact value when every numerator argument pairs with a denominator
  // argument differing by an integer; nullopt otherwise.
  std::optional<Rational> telescoped() const;
};

}  // namespace hillwalk

#endif  // HILLWALK_NUMERICS_HPP
