#pragma once

// Validated interval arithmetic with an extended exponent range.
//
// A Bound is a closed interval [lo, hi] whose endpoints are Reals. A Real is
// either an ordinary MPFR float (magnitude at most the configured cutoff,
// 1e300 by default) or a signed log-magnitude s * exp(L) with L itself an
// MPFR float, which is how quantities like exp(1e69) are held. Every endpoint
// computation is rounded outward, so the exact result of an operation applied
// to any points of the input intervals lies inside the output.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypbound/detail/mpfr.hpp"

namespace hypbound {

enum class Rounding { down, up };

/// Raised when an operation is applied outside its domain (log of a
/// nonpositive interval, division by an interval containing zero, ...).
class DomainError : public std::domain_error {
 public:
  DomainError(std::string operation, std::string detail);
  const std::string& operation() const { return operation_; }

 private:
  std::string operation_;
};

/// Raised when even the log-magnitude form cannot hold a result.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Working precision in bits used for newly created Bounds. Default 128.
long default_precision();
void set_default_precision(long bits);

/// Magnitude above which endpoints switch to the log form, as log10.
double magnitude_cutoff_log10();
void set_magnitude_cutoff_log10(double log10_cutoff);

class Real {
 public:
  enum class Form { finite, log_magnitude };

  /// Exact zero.
  explicit Real(long prec);
  static Real from_mpfr(detail::Mpfr value);
  /// sign * exp(log_magnitude); sign must be +1 or -1.
  static Real from_log(int sign, detail::Mpfr log_magnitude);

  Form form() const { return form_; }
  bool is_log() const { return form_ == Form::log_magnitude; }
  int sign() const;
  bool is_zero() const { return sign() == 0; }
  long precision() const { return value_.precision(); }

  /// The finite value, or L for the log form.
  const detail::Mpfr& raw() const { return value_; }

  /// Nearest double rounded in the given direction; log-form values map to
  /// +-inf (or +-0 is never produced: log form magnitudes exceed the cutoff).
  double to_double(Rounding r) const;

  /// Scientific notation with `digits` significant digits, rounded in the
  /// given direction. Log-form values with huge L print as "exp(L)".
  std::string to_string(int digits, Rounding r) const;

 private:
  Real(Form form, int sign, detail::Mpfr value);

  Form form_;
  int log_sign_;  // only meaningful for the log form
  detail::Mpfr value_;
};

/// Exact three-way comparison of the real numbers denoted.
int compare(const Real& a, const Real& b);

struct Rational {
  std::int64_t num;
  std::int64_t den;
};

class Bound {
 public:
  /// Degenerate [0, 0].
  Bound();

  static Bound from_rational(std::int64_t p, std::int64_t q, long prec = default_precision());
  static Bound from_int(std::int64_t n, long prec = default_precision());
  /// Exact binary value of a double.
  static Bound from_double(double x, long prec = default_precision());
  /// Decimal literal such as "1.39" or "2.5e-3", enclosed by its two
  /// directed roundings.
  static Bound from_decimal(std::string_view text, long prec = default_precision());
  static Bound from_endpoints(Real lo, Real hi);
  static Bound pi(long prec = default_precision());

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  long precision() const;

  bool contains_zero() const;
  bool is_positive() const { return lo_.sign() > 0; }
  bool is_nonnegative() const { return lo_.sign() >= 0; }
  bool is_degenerate() const { return compare(lo_, hi_) == 0; }
  bool contains(const Real& x) const;
  bool contains(const Bound& inner) const;

  /// "[lo, hi]" with outward-rounded endpoints.
  std::string to_string(int digits = 20) const;

 private:
  Bound(Real lo, Real hi);

  Real lo_;
  Real hi_;
};

Bound operator-(const Bound& a);
Bound operator+(const Bound& a, const Bound& b);
Bound operator-(const Bound& a, const Bound& b);
Bound operator*(const Bound& a, const Bound& b);
Bound operator/(const Bound& a, const Bound& b);

Bound exp(const Bound& x);
Bound log(const Bound& x);
Bound sqrt(const Bound& x);
Bound cosh(const Bound& x);
Bound sinh(const Bound& x);
/// x^(num/den). A fractional exponent needs x >= 0; a negative exponent
/// needs x not containing zero.
Bound pow(const Bound& x, Rational exponent);
Bound min(const Bound& a, const Bound& b);
Bound max(const Bound& a, const Bound& b);

enum class ArithOp { add, sub, mul, div, pow_rational, exp, log, cosh, sinh, sqrt, min, max };

std::string_view to_string(ArithOp op);

/// Uniform entry point over the supported operations. Binary operations take
/// two arguments, the rest one; pow_rational also needs `exponent`.
Bound arith(ArithOp op, std::span<const Bound> args, std::optional<Rational> exponent = {});

/// a.hi <= b.lo
bool certainly_le(const Bound& a, const Bound& b);
/// a.hi < b.lo
bool certainly_lt(const Bound& a, const Bound& b);
/// a.lo <= b.hi
bool possibly_le(const Bound& a, const Bound& b);

/// Enclosure of log10 of a positive Bound, for printing quantities whose
/// decimal expansion is unprintable.
struct Log10Report {
  Bound value;
  std::string lower;
  std::string upper;
};
Log10Report log10_report(const Bound& b, int digits = 25);

/// Upper bound on (hi - lo) / min(|lo|, |hi|) as a double; +inf when the
/// endpoints straddle zero or the ratio does not fit.
double relative_width(const Bound& b);

}  // namespace hypbound
