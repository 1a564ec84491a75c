#include "eigenband/bigreal.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace eigenband {

namespace {
int checked_prec(int bits) {
  if (bits < BigReal::kMinPrecision)
    throw std::invalid_argument("BigReal precision must be >= 64 bits");
  return bits;
}
}  // namespace

BigReal::BigReal(int precision_bits) { mpfr_init2(v_, checked_prec(precision_bits)); }

BigReal::BigReal(double x, int precision_bits) {
  mpfr_init2(v_, checked_prec(precision_bits));
  mpfr_set_d(v_, x, MPFR_RNDN);
}

BigReal::BigReal(long x, int precision_bits) {
  mpfr_init2(v_, checked_prec(precision_bits));
  mpfr_set_si(v_, x, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::pos_inf(int precision_bits) {
  BigReal r(precision_bits);
  mpfr_set_inf(r.v_, +1);
  return r;
}

BigReal BigReal::neg_inf(int precision_bits) {
  BigReal r(precision_bits);
  mpfr_set_inf(r.v_, -1);
  return r;
}

BigReal BigReal::pi(int precision_bits) {
  BigReal r(precision_bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::ln2(int precision_bits) {
  BigReal r(precision_bits);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_string(const std::string& s, int precision_bits) {
  BigReal r(precision_bits);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigReal: cannot parse '" + s + "'");
  return r;
}

BigReal BigReal::to_precision(int precision_bits) const {
  BigReal r(precision_bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigReal::str(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  std::vector<char> buf(significant_digits + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, v_);
  return std::string(buf.data());
}

#define EB_PREC2(a, b) std::max(mpfr_get_prec((a).v_), mpfr_get_prec((b).v_))

BigReal& BigReal::operator+=(const BigReal& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator+=(double d) {
  mpfr_add_d(v_, v_, d, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(double d) {
  mpfr_sub_d(v_, v_, d, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(double d) {
  mpfr_mul_d(v_, v_, d, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(double d) {
  mpfr_div_d(v_, v_, d, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(long k) {
  mpfr_div_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(static_cast<int>(EB_PREC2(a, b)));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(static_cast<int>(EB_PREC2(a, b)));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(static_cast<int>(EB_PREC2(a, b)));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(static_cast<int>(EB_PREC2(a, b)));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator+(const BigReal& a, double b) {
  BigReal r(a.precision());
  mpfr_add_d(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, double b) {
  BigReal r(a.precision());
  mpfr_sub_d(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator-(double a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_d_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, double b) {
  BigReal r(a.precision());
  mpfr_mul_d(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, double b) {
  BigReal r(a.precision());
  mpfr_div_d(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator/(double a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_d_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

#define EB_UNARY(name, fn)                 \
  BigReal name(const BigReal& x) {         \
    BigReal r(x.precision());              \
    fn(r.v_, x.v_, MPFR_RNDN);             \
    return r;                              \
  }

EB_UNARY(abs, mpfr_abs)
EB_UNARY(sqrt, mpfr_sqrt)
EB_UNARY(sqr, mpfr_sqr)
EB_UNARY(exp, mpfr_exp)
EB_UNARY(expm1, mpfr_expm1)
EB_UNARY(log, mpfr_log)
EB_UNARY(log1p, mpfr_log1p)
EB_UNARY(erf, mpfr_erf)
EB_UNARY(erfc, mpfr_erfc)
#undef EB_UNARY

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(static_cast<int>(EB_PREC2(x, y)));
  mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long k) {
  BigReal r(x.precision());
  mpfr_pow_si(r.v_, x.v_, k, MPFR_RNDN);
  return r;
}

BigReal lngamma(const BigReal& x) {
  if (!(x.sign() > 0)) throw std::domain_error("lngamma: argument must be positive");
  BigReal r(x.precision());
  mpfr_lngamma(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal ldexp2(const BigReal& x, long k) {
  BigReal r(x.precision());
  mpfr_mul_2si(r.v_, x.v_, k, MPFR_RNDN);
  return r;
}

BigReal fma_sub(const BigReal& acc, const BigReal& a, const BigReal& b) {
  BigReal r(std::max<mpfr_prec_t>(EB_PREC2(a, b), mpfr_get_prec(acc.v_)));
  mpfr_fms(r.v_, a.v_, b.v_, acc.v_, MPFR_RNDN);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

void BigReal::sub_mul(const BigReal& a, const BigReal& b) {
  // v -= a*b, rounded once via fused multiply-subtract.
  mpfr_fms(v_, a.v_, b.v_, v_, MPFR_RNDN);
  mpfr_neg(v_, v_, MPFR_RNDN);
}

void BigReal::add_mul(const BigReal& a, const BigReal& b) {
  mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN);
}

#undef EB_PREC2

LogScaled LogScaled::from_value(const BigReal& v) {
  if (v.is_zero() || v.is_nan()) return LogScaled::zero(v.precision());
  return LogScaled(log(abs(v)), v.sign());
}

LogScaled& LogScaled::operator*=(const LogScaled& o) {
  sign *= o.sign;
  if (sign == 0)
    log_magnitude = BigReal::neg_inf(std::max(log_magnitude.precision(), o.log_magnitude.precision()));
  else
    log_magnitude += o.log_magnitude;
  return *this;
}

BigReal LogScaled::to_big() const {
  if (sign == 0) return BigReal::zero(log_magnitude.precision());
  BigReal v = exp(log_magnitude);
  return sign > 0 ? v : -v;
}

double LogScaled::to_double() const { return to_big().to_double(); }

}  // namespace eigenband
