#include "zetakit/hp_real.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>
#include <string>

#include "zetakit/errors.hpp"

namespace zetakit {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

struct MpfrString {
  char* data = nullptr;
  ~MpfrString() {
    if (data != nullptr) mpfr_free_str(data);
  }
};

}  // namespace

Precision::Precision(int digits) : digits_(digits) {
  if (digits < kMinDigits) {
    throw DomainError("precision must be at least " + std::to_string(kMinDigits) + " digits");
  }
}

double Precision::tolerance() const { return std::pow(10.0, -digits_); }

mpfr_prec_t Precision::bits_for_digits(int digits) {
  // log2(10) = 3.3219..., plus a few bits so the decimal count is honoured.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 4;
}

HPReal::HPReal(mpfr_prec_t bits, int) { mpfr_init2(value_, bits); }

HPReal::HPReal(Precision p) : HPReal(p.working_bits(), 0) { mpfr_set_zero(value_, 1); }

HPReal::HPReal(long value, Precision p) : HPReal(p.working_bits(), 0) {
  mpfr_set_si(value_, value, kRound);
}

HPReal::HPReal(const mpq_class& value, Precision p) : HPReal(p.working_bits(), 0) {
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

HPReal::HPReal(double value, Precision p) : HPReal(p.working_bits(), 0) {
  mpfr_set_d(value_, value, kRound);
}

HPReal HPReal::with_bits(mpfr_prec_t bits) {
  HPReal r(bits, 0);
  mpfr_set_zero(r.value_, 1);
  return r;
}

HPReal HPReal::from_string(std::string_view decimal, Precision p) {
  HPReal r(p);
  std::string s(decimal);
  if (mpfr_set_str(r.value_, s.c_str(), 10, kRound) != 0) {
    throw PreconditionError("not a decimal number: " + s);
  }
  return r;
}

HPReal HPReal::pi(Precision p) {
  HPReal r(p);
  mpfr_const_pi(r.value_, kRound);
  return r;
}

HPReal HPReal::log2(Precision p) {
  HPReal r(p);
  mpfr_const_log2(r.value_, kRound);
  return r;
}

HPReal::HPReal(const HPReal& other) : HPReal(other.bits(), 0) {
  mpfr_set(value_, other.value_, kRound);
}

HPReal::HPReal(HPReal&& other) noexcept : HPReal(MPFR_PREC_MIN, 0) { mpfr_swap(value_, other.value_); }

HPReal& HPReal::operator=(const HPReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

HPReal::~HPReal() { mpfr_clear(value_); }

HPReal HPReal::rounded_to(mpfr_prec_t bits) const {
  HPReal r(bits, 0);
  mpfr_set(r.value_, value_, kRound);
  return r;
}

std::string HPReal::to_scientific(int significant) const {
  if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  MpfrString s;
  mpfr_asprintf(&s.data, "%.*Re", significant - 1, value_);
  return s.data;
}

std::string HPReal::to_decimal(int significant) const {
  if (!is_finite()) return to_scientific(significant);
  if (is_zero()) return "0";
  mpfr_exp_t exponent = 0;
  MpfrString digits;
  digits.data = mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(significant), value_, kRound);
  std::string mant(digits.data);
  bool negative = false;
  if (!mant.empty() && mant[0] == '-') {
    negative = true;
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^exponent
  if (exponent > 40 || exponent < -40) return to_scientific(significant);
  std::string out;
  if (exponent <= 0) {
    out = "0." + std::string(static_cast<size_t>(-exponent), '0') + mant;
  } else if (static_cast<size_t>(exponent) >= mant.size()) {
    out = mant + std::string(static_cast<size_t>(exponent) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<size_t>(exponent)) + "." + mant.substr(static_cast<size_t>(exponent));
  }
  return negative ? "-" + out : out;
}

namespace {

void widen_to(HPReal& lhs, const HPReal& rhs) {
  if (rhs.bits() > lhs.bits()) mpfr_prec_round(lhs.get(), rhs.bits(), kRound);
}

}  // namespace

HPReal& HPReal::operator+=(const HPReal& rhs) {
  widen_to(*this, rhs);
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

HPReal& HPReal::operator-=(const HPReal& rhs) {
  widen_to(*this, rhs);
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

HPReal& HPReal::operator*=(const HPReal& rhs) {
  widen_to(*this, rhs);
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

HPReal& HPReal::operator/=(const HPReal& rhs) {
  widen_to(*this, rhs);
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

HPReal& HPReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, kRound);
  return *this;
}

HPReal& HPReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, kRound);
  return *this;
}

HPReal& HPReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRound);
  return *this;
}

HPReal& HPReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRound);
  return *this;
}

HPReal HPReal::operator-() const {
  HPReal r(*this);
  mpfr_neg(r.value_, r.value_, kRound);
  return r;
}

HPReal operator+(HPReal lhs, const HPReal& rhs) { return lhs += rhs; }
HPReal operator-(HPReal lhs, const HPReal& rhs) { return lhs -= rhs; }
HPReal operator*(HPReal lhs, const HPReal& rhs) { return lhs *= rhs; }
HPReal operator/(HPReal lhs, const HPReal& rhs) { return lhs /= rhs; }

bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const HPReal& a, const HPReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const HPReal& a, double b) { return mpfr_cmp_d(a.value_, b) == 0 && a.is_finite(); }

std::partial_ordering operator<=>(const HPReal& a, double b) {
  if (!a.is_finite() && mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.value_, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool HPReal::identical(const HPReal& other) const {
  if (bits() != other.bits()) return false;
  if (mpfr_nan_p(value_) && mpfr_nan_p(other.value_)) return true;
  return mpfr_equal_p(value_, other.value_) != 0 && mpfr_signbit(value_) == mpfr_signbit(other.value_);
}

#define ZETAKIT_UNARY(name, fn)                 \
  HPReal name(HPReal x) {                       \
    fn(x.get(), x.get(), kRound);               \
    return x;                                   \
  }

ZETAKIT_UNARY(abs, mpfr_abs)
ZETAKIT_UNARY(sqrt, mpfr_sqrt)
ZETAKIT_UNARY(exp, mpfr_exp)
ZETAKIT_UNARY(log, mpfr_log)
ZETAKIT_UNARY(log1p, mpfr_log1p)
ZETAKIT_UNARY(sin, mpfr_sin)
ZETAKIT_UNARY(cos, mpfr_cos)
ZETAKIT_UNARY(cot, mpfr_cot)
ZETAKIT_UNARY(sinh, mpfr_sinh)
ZETAKIT_UNARY(cosh, mpfr_cosh)
ZETAKIT_UNARY(tanh, mpfr_tanh)
ZETAKIT_UNARY(asin, mpfr_asin)
ZETAKIT_UNARY(acos, mpfr_acos)
ZETAKIT_UNARY(atanh, mpfr_atanh)

#undef ZETAKIT_UNARY

HPReal pow(HPReal base, long exponent) {
  mpfr_pow_si(base.get(), base.get(), exponent, kRound);
  return base;
}

HPReal pow(HPReal base, const HPReal& exponent) {
  mpfr_pow(base.get(), base.get(), exponent.get(), kRound);
  return base;
}

HPReal max(const HPReal& a, const HPReal& b) { return (a < b) ? b : a; }

HPReal ldexp(HPReal x, long e) {
  mpfr_mul_2si(x.get(), x.get(), e, kRound);
  return x;
}

}  // namespace zetakit
