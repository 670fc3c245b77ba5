#include "hillwalk/numerics.hpp"

#include <algorithm>
#include <cctype>

namespace hillwalk {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// Guard bits used when an intermediate result is rounded once more.
constexpr mpfr_prec_t kGuardBits = 32;

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw DomainError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  const auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(i), part.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-') {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  Integer d(den);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

ExactScalar ExactScalar::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw DomainError("empty scalar literal");
  if (s.back() != 'i') return {parse_rational(s), Rational(0)};

  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that does not start the literal.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  const std::string real_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string imag_part = split == std::string::npos ? body : body.substr(split);
  if (imag_part.empty() || imag_part == "+") imag_part = "1";
  if (imag_part == "-") imag_part = "-1";
  return {real_part.empty() ? Rational(0) : parse_rational(real_part), parse_rational(imag_part)};
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational den = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / den;
  Rational im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactScalar ExactScalar::pow(long exponent) const {
  if (exponent < 0) return ExactScalar(1) / pow(-exponent);
  ExactScalar result(1);
  ExactScalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string ExactScalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string im = im_.get_str();
  if (sgn(re_) == 0) return im + "i";
  if (im.front() != '-') im.insert(im.begin(), '+');
  return re_.get_str() + im + "i";
}

// --- BigFloat -------------------------------------------------------------

void require_precision(mpfr_prec_t bits) {
  if (bits < kMinPrecision) {
    throw DomainError("precision must be at least 64 bits, got " + std::to_string(bits));
  }
}

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits) : BigFloat(bits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(double value, mpfr_prec_t bits) : BigFloat(bits) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(other.precision()) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(other.precision()) {
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Rational BigFloat::to_rational() const {
  if (!mpfr_number_p(value_)) throw DomainError("non-finite value has no rational form");
  if (mpfr_zero_p(value_)) return Rational(0);
  Integer mantissa;
  const mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  Rational q(mantissa);
  if (exponent >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return q;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buffer(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", digits, value_);
  return buffer.data();
}

namespace {

template <typename Op>
void binary_inplace(mpfr_ptr self, mpfr_srcptr other, Op op) {
  const mpfr_prec_t target = std::max(mpfr_get_prec(self), mpfr_get_prec(other));
  if (mpfr_get_prec(self) < target) mpfr_prec_round(self, target, MPFR_RNDN);
  op(self, self, other, MPFR_RNDN);
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  binary_inplace(value_, o.value_, mpfr_add);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  binary_inplace(value_, o.value_, mpfr_sub);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  binary_inplace(value_, o.value_, mpfr_mul);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  binary_inplace(value_, o.value_, mpfr_div);
  return *this;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.value_, x.value_, MPFR_RNDN);
  return r;
}

// --- BigComplex -----------------------------------------------------------

BigFloat BigComplex::abs() const {
  BigFloat r(precision());
  mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat re = re_ * o.re_ - im_ * o.im_;
  BigFloat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  const BigFloat den = o.norm();
  BigFloat re = (re_ * o.re_ + im_ * o.im_) / den;
  BigFloat im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex sqrt(const BigComplex& x) {
  const mpfr_prec_t bits = x.precision();
  if (x.is_zero()) return BigComplex(bits);
  const BigFloat modulus = x.abs();
  const BigFloat half(Rational(1, 2), bits);
  // sqrt(z) = sqrt((|z|+re)/2) + i·sign(im)·sqrt((|z|−re)/2), with the
  // smaller component recovered from im/(2·larger) to avoid cancellation.
  if (x.re().sign() >= 0) {
    BigFloat u = sqrt((modulus + x.re()) * half);
    BigFloat v = x.im() / (u + u);
    return {u, v};
  }
  BigFloat v = sqrt((modulus - x.re()) * half);
  if (x.im().sign() < 0) v = -v;
  BigFloat u = x.im() / (v + v);
  return {u, v};
}

// --- Gamma and combinatorics ---------------------------------------------

ExactScalar gamma_product_identity(const Rational& alpha, long m) {
  if (alpha <= 0 || alpha >= 1) throw DomainError("alpha must lie in (0,1)");
  if (m < 1) throw DomainError("m must be positive");
  Rational product(1);
  for (long t = 1; t < m; ++t) product *= Rational(t) - alpha;
  return ExactScalar(Rational(1) / product);
}

namespace {

bool is_pole(const Rational& x) { return x.get_den() == 1 && x <= 0; }

}  // namespace

BigComplex gamma_value(const Rational& x, mpfr_prec_t bits) {
  require_precision(bits);
  if (is_pole(x)) throw DomainError("Gamma has a pole at " + x.get_str());
  BigFloat arg(x, bits + kGuardBits);
  BigFloat value(bits + kGuardBits);
  mpfr_gamma(value.get(), arg.get(), MPFR_RNDN);
  mpfr_prec_round(value.get(), bits, MPFR_RNDN);
  return {value, BigFloat(bits)};
}

ExactScalar binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("binomial requires 0 <= k <= n");
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return ExactScalar(Rational(c));
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigFloat GammaRatio::evaluate(mpfr_prec_t bits) const {
  require_precision(bits);
  const mpfr_prec_t work = bits + kGuardBits;
  BigFloat result(Rational(1), work);
  for (const auto& x : numerator_args) result *= gamma_value(x, work).re();
  for (const auto& x : denominator_args) result /= gamma_value(x, work).re();
  mpfr_prec_round(result.get(), bits, MPFR_RNDN);
  return result;
}

std::optional<Rational> GammaRatio::telescoped() const {
  if (numerator_args.size() != denominator_args.size()) return std::nullopt;
  std::vector<bool> used(denominator_args.size(), false);
  Rational value(1);
  for (const auto& x : numerator_args) {
    if (is_pole(x)) throw DomainError("Gamma has a pole at " + x.get_str());
    bool matched = false;
    for (std::size_t i = 0; i < denominator_args.size() && !matched; ++i) {
      if (used[i]) continue;
      const Rational& y = denominator_args[i];
      const Rational diff = x - y;
      if (diff.get_den() != 1) continue;
      if (is_pole(y)) throw DomainError("Gamma has a pole at " + y.get_str());
      used[i] = true;
      matched = true;
      // Γ(x)/Γ(y) with x = y + k.
      const long k = diff.get_num().get_si();
      if (k >= 0) {
        for (long j = 0; j < k; ++j) value *= y + j;
      } else {
        for (long j = 0; j < -k; ++j) value /= x + j;
      }
    }
    if (!matched) return std::nullopt;
  }
  return value;
}

}  // namespace hillwalk
