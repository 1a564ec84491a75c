#ifndef EIGENBAND_BIGREAL_HPP
#define EIGENBAND_BIGREAL_HPP

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace eigenband {

// Arbitrary-precision floating-point scalar backed by MPFR.
//
// Every value carries its own mantissa size in bits (>= 64). All operations
// round to nearest; a binary operation computes at the larger of the two
// operand precisions, so results are deterministic functions of the operands
// and their precisions. The exponent field is MPFR's full range, which covers
// magnitudes far beyond |log10 x| = 1e6.
class BigReal {
 public:
  static constexpr int kMinPrecision = 64;

  explicit BigReal(int precision_bits = kMinPrecision);
  BigReal(double x, int precision_bits);
  BigReal(long x, int precision_bits);
  BigReal(int x, int precision_bits) : BigReal(static_cast<long>(x), precision_bits) {}
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  static BigReal zero(int precision_bits) { return BigReal(0.0, precision_bits); }
  static BigReal one(int precision_bits) { return BigReal(1.0, precision_bits); }
  static BigReal pos_inf(int precision_bits);
  static BigReal neg_inf(int precision_bits);
  static BigReal pi(int precision_bits);
  static BigReal ln2(int precision_bits);
  static BigReal from_string(const std::string& s, int precision_bits);

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  // Re-rounds the value to a new mantissa size.
  BigReal to_precision(int precision_bits) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Decimal rendering with the given number of significant digits.
  std::string str(int significant_digits = 17) const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator+=(double d);
  BigReal& operator-=(double d);
  BigReal& operator*=(double d);
  BigReal& operator/=(double d);
  BigReal& operator*=(long k);
  BigReal& operator/=(long k);
  BigReal operator-() const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator+(const BigReal& a, double b);
  friend BigReal operator+(double a, const BigReal& b) { return b + a; }
  friend BigReal operator-(const BigReal& a, double b);
  friend BigReal operator-(double a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, double b);
  friend BigReal operator*(double a, const BigReal& b) { return b * a; }
  friend BigReal operator/(const BigReal& a, double b);
  friend BigReal operator/(double a, const BigReal& b);

  friend int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return !mpfr_equal_p(a.v_, b.v_); }
  int cmp_d(double d) const { return mpfr_cmp_d(v_, d); }

  friend BigReal abs(const BigReal& x);
  friend BigReal sqrt(const BigReal& x);
  friend BigReal sqr(const BigReal& x);
  friend BigReal exp(const BigReal& x);
  friend BigReal expm1(const BigReal& x);
  friend BigReal log(const BigReal& x);
  friend BigReal log1p(const BigReal& x);
  friend BigReal pow(const BigReal& x, const BigReal& y);
  friend BigReal pow(const BigReal& x, long k);
  friend BigReal erf(const BigReal& x);
  friend BigReal erfc(const BigReal& x);
  // ln Gamma(x) for x > 0.
  friend BigReal lngamma(const BigReal& x);
  // x * 2^k (exact).
  friend BigReal ldexp2(const BigReal& x, long k);
  friend BigReal fma_sub(const BigReal& acc, const BigReal& a, const BigReal& b);

  // In-place accumulate acc -= a*b at acc's precision (elimination inner loop).
  void sub_mul(const BigReal& a, const BigReal& b);
  void add_mul(const BigReal& a, const BigReal& b);
  void swap(BigReal& o) noexcept { mpfr_swap(v_, o.v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

inline BigReal min(const BigReal& a, const BigReal& b) { return a < b ? a : b; }
inline BigReal max(const BigReal& a, const BigReal& b) { return a > b ? a : b; }

// A number stored as sign * exp(log_magnitude). Holds normalizing constants
// and determinants whose magnitudes overflow any fixed exponent range budget
// when handled carelessly; arithmetic on the log scale cannot overflow.
struct LogScaled {
  BigReal log_magnitude;  // natural log of |value|; ignored when sign == 0
  int sign = 0;           // -1, 0, +1

  LogScaled() : log_magnitude(BigReal::kMinPrecision) {}
  LogScaled(BigReal lm, int s) : log_magnitude(std::move(lm)), sign(s) {}

  static LogScaled zero(int precision_bits) {
    return LogScaled(BigReal::neg_inf(precision_bits), 0);
  }
  static LogScaled from_value(const BigReal& v);

  LogScaled& operator*=(const LogScaled& o);
  friend LogScaled operator*(LogScaled a, const LogScaled& b) { return a *= b; }

  bool is_zero() const { return sign == 0; }
  // exp(log_magnitude) * sign at the stored precision; may overflow to +-inf
  // only if the magnitude exceeds MPFR's exponent range (~1e18 decimal digits).
  BigReal to_big() const;
  double to_double() const;
};

}  // namespace eigenband

#endif  // EIGENBAND_BIGREAL_HPP
