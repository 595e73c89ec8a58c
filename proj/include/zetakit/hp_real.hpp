#pragma once

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace zetakit {

// Requested accuracy in significant decimal digits. All internal arithmetic
// runs kGuardDigits above the request.
class Precision {
 public:
  static constexpr int kGuardDigits = 10;
  static constexpr int kMinDigits = 16;
  static constexpr int kDefaultDigits = 50;

  constexpr Precision() = default;
  explicit Precision(int digits);

  int digits() const { return digits_; }
  int working_digits() const { return digits_ + kGuardDigits; }
  mpfr_prec_t working_bits() const { return bits_for_digits(working_digits()); }

  // 10^(-digits()), the tolerance a result at this precision is held to.
  double tolerance() const;

  static mpfr_prec_t bits_for_digits(int digits);

  auto operator<=>(const Precision&) const = default;

 private:
  int digits_ = kDefaultDigits;
};

// RAII owner of an MPFR number. Every operation rounds to nearest; a binary
// operation produces a result at the larger of the two operand precisions.
class HPReal {
 public:
  explicit HPReal(Precision p);
  HPReal(long value, Precision p);
  HPReal(int value, Precision p) : HPReal(static_cast<long>(value), p) {}
  HPReal(const mpq_class& value, Precision p);
  HPReal(double value, Precision p);

  static HPReal with_bits(mpfr_prec_t bits);
  static HPReal from_string(std::string_view decimal, Precision p);
  static HPReal pi(Precision p);
  static HPReal log2(Precision p);

  HPReal(const HPReal& other);
  HPReal(HPReal&& other) noexcept;
  HPReal& operator=(const HPReal& other);
  HPReal& operator=(HPReal&& other) noexcept;
  ~HPReal();

  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  // Same value, rounded to a different precision.
  HPReal rounded_to(mpfr_prec_t bits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  // Fixed notation with `significant` significant digits; falls back to
  // scientific notation for very large or very small magnitudes.
  std::string to_decimal(int significant) const;
  std::string to_scientific(int significant) const;

  HPReal& operator+=(const HPReal& rhs);
  HPReal& operator-=(const HPReal& rhs);
  HPReal& operator*=(const HPReal& rhs);
  HPReal& operator/=(const HPReal& rhs);
  HPReal& operator+=(long rhs);
  HPReal& operator-=(long rhs);
  HPReal& operator*=(long rhs);
  HPReal& operator/=(long rhs);

  HPReal operator-() const;

  friend HPReal operator+(HPReal lhs, const HPReal& rhs);
  friend HPReal operator-(HPReal lhs, const HPReal& rhs);
  friend HPReal operator*(HPReal lhs, const HPReal& rhs);
  friend HPReal operator/(HPReal lhs, const HPReal& rhs);
  template <std::integral I>
  friend HPReal operator+(HPReal lhs, I rhs) { return lhs += static_cast<long>(rhs); }
  template <std::integral I>
  friend HPReal operator-(HPReal lhs, I rhs) { return lhs -= static_cast<long>(rhs); }
  template <std::integral I>
  friend HPReal operator*(HPReal lhs, I rhs) { return lhs *= static_cast<long>(rhs); }
  template <std::integral I>
  friend HPReal operator/(HPReal lhs, I rhs) { return lhs /= static_cast<long>(rhs); }
  template <std::integral I>
  friend HPReal operator*(I lhs, HPReal rhs) { return rhs *= static_cast<long>(lhs); }
  // Mixed arithmetic with double is not provided: construct an HPReal
  // explicitly so the precision of the constant is visible at the call site.
  friend HPReal operator+(HPReal, double) = delete;
  friend HPReal operator-(HPReal, double) = delete;
  friend HPReal operator*(HPReal, double) = delete;
  friend HPReal operator/(HPReal, double) = delete;

  friend bool operator==(const HPReal& a, const HPReal& b);
  friend std::partial_ordering operator<=>(const HPReal& a, const HPReal& b);
  friend bool operator==(const HPReal& a, double b);
  friend std::partial_ordering operator<=>(const HPReal& a, double b);

  // Bit-level equality: same precision and same value.
  bool identical(const HPReal& other) const;

 private:
  explicit HPReal(mpfr_prec_t bits, int /*tag*/);
  mpfr_t value_;
};

HPReal abs(HPReal x);
HPReal sqrt(HPReal x);
HPReal exp(HPReal x);
HPReal log(HPReal x);
HPReal log1p(HPReal x);
HPReal sin(HPReal x);
HPReal cos(HPReal x);
HPReal cot(HPReal x);
HPReal sinh(HPReal x);
HPReal cosh(HPReal x);
HPReal tanh(HPReal x);
HPReal asin(HPReal x);
HPReal acos(HPReal x);
HPReal atanh(HPReal x);
HPReal pow(HPReal base, long exponent);
HPReal pow(HPReal base, const HPReal& exponent);
HPReal max(const HPReal& a, const HPReal& b);

// 2^e scaled copy, exact.
HPReal ldexp(HPReal x, long e);

}  // namespace zetakit
