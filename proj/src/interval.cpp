#include "hypbound/interval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

namespace hypbound {

namespace detail {

void ensure_exponent_range() {
  thread_local bool configured = false;
  if (!configured) {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    configured = true;
  }
}

}  // namespace detail

namespace {

using detail::Mpfr;

std::atomic<long> g_precision{128};
std::atomic<double> g_cutoff_log10{300.0};

// Log-form values with L above this are never converted back to MPFR floats
// for addition; their binary exponent would not fit.
constexpr double kConvertLimit = 1e15;

mpfr_rnd_t rnd(Rounding r) { return r == Rounding::down ? MPFR_RNDD : MPFR_RNDU; }
Rounding flip(Rounding r) { return r == Rounding::down ? Rounding::up : Rounding::down; }

// Direction in which the magnitude has to move so the signed value moves in `r`.
Rounding magnitude_dir(int sign, Rounding r) { return sign >= 0 ? r : flip(r); }

double log_cutoff() { return g_cutoff_log10.load(std::memory_order_relaxed) * std::log(10.0); }

Mpfr make(long prec) { return Mpfr(static_cast<mpfr_prec_t>(prec)); }

// ln|a| rounded in `r`. `a` must be nonzero.
Mpfr ln_magnitude(const Real& a, Rounding r, long prec) {
  Mpfr out = make(std::max(prec, a.precision()));
  if (a.is_log()) {
    mpfr_set(out.get(), a.raw().get(), rnd(r));
  } else {
    mpfr_abs(out.get(), a.raw().get(), MPFR_RNDN);  // exact: same precision or wider
    mpfr_log(out.get(), out.get(), rnd(r));
  }
  return out;
}

Real canonicalize(Real v, Rounding dir, long prec) {
  if (v.is_zero()) return v;
  const double cut = log_cutoff();
  const Rounding md = magnitude_dir(v.sign(), dir);
  if (!v.is_log()) {
    const mpfr_exp_t e = mpfr_get_exp(v.raw().get());
    if (static_cast<double>(e) * std::log(2.0) <= cut) return v;
    Mpfr lower = ln_magnitude(v, Rounding::down, prec);
    if (mpfr_cmp_d(lower.get(), cut) <= 0) return v;
    return Real::from_log(v.sign(), ln_magnitude(v, md, prec));
  }
  if (mpfr_cmp_d(v.raw().get(), cut) > 0) return v;
  Mpfr x = make(prec);
  mpfr_exp(x.get(), v.raw().get(), rnd(md));
  if (v.sign() < 0) mpfr_neg(x.get(), x.get(), MPFR_RNDN);
  return Real::from_mpfr(std::move(x));
}

Real finite(Mpfr x) { return Real::from_mpfr(std::move(x)); }

Real negate(const Real& a) {
  if (a.is_log()) return Real::from_log(-a.sign(), a.raw());
  Mpfr x = a.raw();
  mpfr_neg(x.get(), x.get(), MPFR_RNDN);
  return finite(std::move(x));
}

Real abs_value(const Real& a) { return a.sign() < 0 ? negate(a) : a; }

bool convertible(const Real& a) {
  return !a.is_log() || mpfr_cmp_d(a.raw().get(), kConvertLimit) <= 0;
}

// The value as a plain MPFR float rounded in `r`; only for convertible values.
Mpfr as_mpfr(const Real& a, Rounding r, long prec) {
  Mpfr x = make(std::max(prec, a.precision()));
  if (!a.is_log()) {
    mpfr_set(x.get(), a.raw().get(), rnd(r));
    return x;
  }
  mpfr_exp(x.get(), a.raw().get(), rnd(magnitude_dir(a.sign(), r)));
  if (a.sign() < 0) mpfr_neg(x.get(), x.get(), MPFR_RNDN);
  return x;
}

int compare_magnitude(const Real& a, const Real& b) {
  if (a.is_zero() || b.is_zero()) {
    return (a.is_zero() ? 0 : 1) - (b.is_zero() ? 0 : 1);
  }
  if (!a.is_log() && !b.is_log()) return mpfr_cmpabs(a.raw().get(), b.raw().get());
  if (a.is_log() && b.is_log()) return mpfr_cmp(a.raw().get(), b.raw().get());
  const bool a_finite = !a.is_log();
  const Real& fin = a_finite ? a : b;
  const Real& lg = a_finite ? b : a;
  long prec = std::max(fin.precision(), lg.precision()) + 32;
  for (int attempt = 0; attempt < 10; ++attempt, prec *= 2) {
    Mpfr lo = ln_magnitude(fin, Rounding::down, prec);
    Mpfr hi = ln_magnitude(fin, Rounding::up, prec);
    if (mpfr_cmp(hi.get(), lg.raw().get()) < 0) return a_finite ? -1 : 1;
    if (mpfr_cmp(lo.get(), lg.raw().get()) > 0) return a_finite ? 1 : -1;
  }
  return 0;
}

Real add(const Real& a, const Real& b, Rounding dir, long prec) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!a.is_log() && !b.is_log()) {
    Mpfr x = make(prec);
    mpfr_add(x.get(), a.raw().get(), b.raw().get(), rnd(dir));
    return canonicalize(finite(std::move(x)), dir, prec);
  }
  const bool a_conv = convertible(a);
  const bool b_conv = convertible(b);
  if (a_conv && b_conv) {
    Mpfr xa = as_mpfr(a, dir, prec);
    Mpfr xb = as_mpfr(b, dir, prec);
    Mpfr x = make(prec);
    mpfr_add(x.get(), xa.get(), xb.get(), rnd(dir));
    return canonicalize(finite(std::move(x)), dir, prec);
  }

  // At least one magnitude is beyond any MPFR exponent: work with logs.
  const bool same_sign = a.sign() == b.sign();
  bool a_big;
  if (a_conv != b_conv) {
    a_big = !a_conv;
  } else {
    const int c = mpfr_cmp(a.raw().get(), b.raw().get());
    if (c == 0 && !same_sign) return Real(prec);
    a_big = c >= 0;
  }
  const Real& big = a_big ? a : b;
  const Real& small = a_big ? b : a;
  const Rounding md = magnitude_dir(big.sign(), dir);
  const long p = std::max(prec, big.precision());

  Mpfr t = make(p);
  if (same_sign) {
    // ln(e^Lb + e^Ls) = Lb + log1p(exp(Ls - Lb)), increasing in Ls.
    Mpfr ls = ln_magnitude(small, md, p);
    mpfr_sub(t.get(), ls.get(), big.raw().get(), rnd(md));
    mpfr_exp(t.get(), t.get(), rnd(md));
    mpfr_log1p(t.get(), t.get(), rnd(md));
  } else {
    // ln(e^Lb - e^Ls) = Lb + log1p(-exp(Ls - Lb)), decreasing in Ls.
    const Rounding inner = flip(md);
    Mpfr ls = ln_magnitude(small, inner, p);
    mpfr_sub(t.get(), ls.get(), big.raw().get(), rnd(inner));
    mpfr_exp(t.get(), t.get(), rnd(inner));
    mpfr_neg(t.get(), t.get(), MPFR_RNDN);
    mpfr_log1p(t.get(), t.get(), rnd(md));
    if (mpfr_inf_p(t.get())) return Real(prec);  // magnitude bound collapsed to 0
  }
  mpfr_add(t.get(), big.raw().get(), t.get(), rnd(md));
  return canonicalize(Real::from_log(big.sign(), std::move(t)), dir, prec);
}

Real sub(const Real& a, const Real& b, Rounding dir, long prec) {
  return add(a, negate(b), dir, prec);
}

Real mul(const Real& a, const Real& b, Rounding dir, long prec) {
  if (a.is_zero() || b.is_zero()) return Real(prec);
  const int s = a.sign() * b.sign();
  if (!a.is_log() && !b.is_log()) {
    Mpfr x = make(prec);
    mpfr_mul(x.get(), a.raw().get(), b.raw().get(), rnd(dir));
    return canonicalize(finite(std::move(x)), dir, prec);
  }
  const Rounding md = magnitude_dir(s, dir);
  Mpfr la = ln_magnitude(a, md, prec);
  Mpfr lb = ln_magnitude(b, md, prec);
  Mpfr l = make(std::max(la.precision(), lb.precision()));
  mpfr_add(l.get(), la.get(), lb.get(), rnd(md));
  return canonicalize(Real::from_log(s, std::move(l)), dir, prec);
}

Real div(const Real& a, const Real& b, Rounding dir, long prec) {
  if (a.is_zero()) return Real(prec);
  const int s = a.sign() * b.sign();
  if (!a.is_log() && !b.is_log()) {
    Mpfr x = make(prec);
    mpfr_div(x.get(), a.raw().get(), b.raw().get(), rnd(dir));
    return canonicalize(finite(std::move(x)), dir, prec);
  }
  const Rounding md = magnitude_dir(s, dir);
  Mpfr la = ln_magnitude(a, md, prec);
  Mpfr lb = ln_magnitude(b, flip(md), prec);
  Mpfr l = make(std::max(la.precision(), lb.precision()));
  mpfr_sub(l.get(), la.get(), lb.get(), rnd(md));
  return canonicalize(Real::from_log(s, std::move(l)), dir, prec);
}

Real exp_real(const Real& a, Rounding dir, long prec) {
  if (!a.is_log()) {
    if (mpfr_cmp_d(a.raw().get(), log_cutoff()) > 0) {
      Mpfr l = make(std::max(prec, a.precision()));
      mpfr_set(l.get(), a.raw().get(), rnd(dir));
      return Real::from_log(1, std::move(l));
    }
    Mpfr x = make(prec);
    mpfr_exp(x.get(), a.raw().get(), rnd(dir));
    return canonicalize(finite(std::move(x)), dir, prec);
  }
  if (a.sign() > 0) {
    Mpfr l = make(prec);
    mpfr_exp(l.get(), a.raw().get(), rnd(dir));
    if (mpfr_inf_p(l.get())) throw OverflowError("exp: log-magnitude exceeds the representable range");
    return Real::from_log(1, std::move(l));
  }
  // exp(-e^L): underflows to the smallest positive float or to zero.
  Mpfr t = make(prec);
  mpfr_exp(t.get(), a.raw().get(), rnd(flip(dir)));
  mpfr_neg(t.get(), t.get(), MPFR_RNDN);
  mpfr_exp(t.get(), t.get(), rnd(dir));
  return canonicalize(finite(std::move(t)), dir, prec);
}

// Requires a > 0.
Real log_real(const Real& a, Rounding dir, long prec) {
  Mpfr x = ln_magnitude(a, dir, prec);
  return canonicalize(finite(std::move(x)), dir, prec);
}

// Requires a >= 0.
Real sqrt_real(const Real& a, Rounding dir, long prec) {
  if (a.is_zero()) return Real(prec);
  if (!a.is_log()) {
    Mpfr x = make(prec);
    mpfr_sqrt(x.get(), a.raw().get(), rnd(dir));
    return canonicalize(finite(std::move(x)), dir, prec);
  }
  Mpfr l = make(std::max(prec, a.precision()));
  mpfr_div_2ui(l.get(), a.raw().get(), 1, rnd(dir));
  return canonicalize(Real::from_log(1, std::move(l)), dir, prec);
}

Real one(long prec) {
  Mpfr x = make(prec);
  mpfr_set_ui(x.get(), 1, MPFR_RNDN);
  return finite(std::move(x));
}

// a^(p/q), q >= 1, p != 0. Negative `a` only with q == 1; zero only with p > 0.
Real pow_real(const Real& a, std::int64_t p, std::int64_t q, Rounding dir, long prec) {
  if (a.is_zero()) return Real(prec);
  const int rs = (a.sign() < 0 && (p % 2 != 0)) ? -1 : 1;
  const Rounding md = magnitude_dir(rs, dir);
  const Real mag = abs_value(a);

  auto via_logs = [&]() {
    Mpfr lx = ln_magnitude(mag, p > 0 ? md : flip(md), prec);
    Mpfr l = make(lx.precision());
    mpfr_mul_si(l.get(), lx.get(), static_cast<long>(p), rnd(md));
    mpfr_div_si(l.get(), l.get(), static_cast<long>(q), rnd(md));
    return canonicalize(Real::from_log(1, std::move(l)), md, prec);
  };

  Real result(prec);
  if (mag.is_log()) {
    result = via_logs();
  } else {
    Mpfr x = make(prec);
    mpfr_pow_si(x.get(), mag.raw().get(), static_cast<long>(p), rnd(md));
    if (q > 1 && mpfr_number_p(x.get())) {
      mpfr_rootn_ui(x.get(), x.get(), static_cast<unsigned long>(q), rnd(md));
    }
    if (!mpfr_number_p(x.get()) || mpfr_zero_p(x.get())) {
      result = via_logs();
    } else {
      result = canonicalize(finite(std::move(x)), md, prec);
    }
  }
  return rs < 0 ? negate(result) : result;
}

Real cosh_real(const Real& x, Rounding dir, long prec) {
  Real s = add(exp_real(x, dir, prec), exp_real(negate(x), dir, prec), dir, prec);
  Mpfr half = make(prec);
  mpfr_set_d(half.get(), 0.5, MPFR_RNDN);
  return mul(s, finite(std::move(half)), dir, prec);
}

Real sinh_real(const Real& x, Rounding dir, long prec) {
  Real d = sub(exp_real(x, dir, prec), exp_real(negate(x), flip(dir), prec), dir, prec);
  Mpfr half = make(prec);
  mpfr_set_d(half.get(), 0.5, MPFR_RNDN);
  return mul(d, finite(std::move(half)), dir, prec);
}

const Real& min_real(const Real& a, const Real& b) { return compare(a, b) <= 0 ? a : b; }
const Real& max_real(const Real& a, const Real& b) { return compare(a, b) >= 0 ? a : b; }

long joint_precision(const Bound& a, const Bound& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

DomainError::DomainError(std::string operation, std::string detail)
    : std::domain_error(operation + ": " + detail), operation_(std::move(operation)) {}

long default_precision() { return g_precision.load(std::memory_order_relaxed); }

void set_default_precision(long bits) {
  if (bits < 53 || bits > 1 << 20) throw std::invalid_argument("precision must be in [53, 2^20] bits");
  g_precision.store(bits, std::memory_order_relaxed);
}

double magnitude_cutoff_log10() { return g_cutoff_log10.load(std::memory_order_relaxed); }

void set_magnitude_cutoff_log10(double log10_cutoff) {
  if (!(log10_cutoff >= 1.0 && log10_cutoff <= 1e6)) {
    throw std::invalid_argument("magnitude cutoff must be between 1e1 and 1e1000000");
  }
  g_cutoff_log10.store(log10_cutoff, std::memory_order_relaxed);
}

// --- Real -------------------------------------------------------------------

Real::Real(long prec) : form_(Form::finite), log_sign_(0), value_(make(prec)) {
  detail::ensure_exponent_range();
  mpfr_set_zero(value_.get(), 1);
}

Real::Real(Form form, int sign, detail::Mpfr value)
    : form_(form), log_sign_(sign), value_(std::move(value)) {}

Real Real::from_mpfr(detail::Mpfr value) {
  detail::ensure_exponent_range();
  if (!mpfr_number_p(value.get())) throw OverflowError("non-finite value in interval arithmetic");
  return Real(Form::finite, 0, std::move(value));
}

Real Real::from_log(int sign, detail::Mpfr log_magnitude) {
  detail::ensure_exponent_range();
  if (sign != 1 && sign != -1) throw std::invalid_argument("log-form sign must be +1 or -1");
  if (!mpfr_number_p(log_magnitude.get())) throw OverflowError("non-finite log-magnitude");
  return Real(Form::log_magnitude, sign, std::move(log_magnitude));
}

int Real::sign() const {
  if (form_ == Form::log_magnitude) return log_sign_;
  return mpfr_sgn(value_.get());
}

double Real::to_double(Rounding r) const {
  detail::ensure_exponent_range();
  if (is_log()) return log_sign_ * HUGE_VAL;
  return mpfr_get_d(value_.get(), rnd(r));
}

namespace {

std::string format_mpfr(mpfr_srcptr x, int digits, Rounding r) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*R*e", digits - 1, rnd(r), x);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

std::string Real::to_string(int digits, Rounding r) const {
  detail::ensure_exponent_range();
  digits = std::max(digits, 1);
  if (is_zero()) return "0";
  if (!is_log()) return format_mpfr(value_.get(), digits, r);

  const std::string sign = log_sign_ < 0 ? "-" : "";
  const Rounding md = magnitude_dir(log_sign_, r);
  if (mpfr_cmp_d(value_.get(), 1e6) > 0) {
    return sign + "exp(" + format_mpfr(value_.get(), digits, md) + ")";
  }
  // m * 10^E with E = floor(L / ln 10).
  const long p = precision() + 64;
  Mpfr ln10 = make(p);
  mpfr_set_ui(ln10.get(), 10, MPFR_RNDN);
  mpfr_log(ln10.get(), ln10.get(), rnd(flip(md)));
  Mpfr l10 = make(p);
  mpfr_div(l10.get(), value_.get(), ln10.get(), rnd(md));
  Mpfr whole = make(p);
  mpfr_floor(whole.get(), l10.get());
  const long exponent = mpfr_get_si(whole.get(), MPFR_RNDN);
  mpfr_sub(l10.get(), l10.get(), whole.get(), rnd(md));
  mpfr_exp10(l10.get(), l10.get(), rnd(md));
  std::string m = format_mpfr(l10.get(), digits, md);
  const auto e = m.find('e');
  const long shift = std::stol(m.substr(e + 1));
  const long total = exponent + shift;
  return sign + m.substr(0, e) + (total < 0 ? "e-" : "e+") + std::to_string(std::labs(total));
}

int compare(const Real& a, const Real& b) {
  detail::ensure_exponent_range();
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  return sa * compare_magnitude(a, b);
}

// --- Bound ------------------------------------------------------------------

Bound::Bound() : lo_(default_precision()), hi_(default_precision()) {}

Bound::Bound(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

long Bound::precision() const { return std::max(lo_.precision(), hi_.precision()); }

Bound Bound::from_endpoints(Real lo, Real hi) {
  if (compare(lo, hi) > 0) throw std::invalid_argument("Bound endpoints out of order");
  return Bound(std::move(lo), std::move(hi));
}

Bound Bound::from_rational(std::int64_t p, std::int64_t q, long prec) {
  detail::ensure_exponent_range();
  if (q == 0) throw DomainError("from_rational", "zero denominator");
  prec = std::max(prec, 64L);
  Mpfr lo = make(prec);
  Mpfr hi = make(prec);
  mpfr_set_si(lo.get(), static_cast<long>(p), MPFR_RNDN);
  mpfr_set_si(hi.get(), static_cast<long>(p), MPFR_RNDN);
  mpfr_div_si(lo.get(), lo.get(), static_cast<long>(q), MPFR_RNDD);
  mpfr_div_si(hi.get(), hi.get(), static_cast<long>(q), MPFR_RNDU);
  return Bound(finite(std::move(lo)), finite(std::move(hi)));
}

Bound Bound::from_int(std::int64_t n, long prec) { return from_rational(n, 1, prec); }

Bound Bound::from_double(double x, long prec) {
  detail::ensure_exponent_range();
  if (!std::isfinite(x)) throw DomainError("from_double", "non-finite input");
  prec = std::max(prec, 53L);
  Mpfr v = make(prec);
  mpfr_set_d(v.get(), x, MPFR_RNDN);
  Real r = finite(std::move(v));
  return Bound(canonicalize(r, Rounding::down, prec), canonicalize(r, Rounding::up, prec));
}

Bound Bound::from_decimal(std::string_view text, long prec) {
  detail::ensure_exponent_range();
  const std::string s(text);
  if (s.empty()) throw DomainError("from_decimal", "empty literal");
  Mpfr lo = make(prec);
  Mpfr hi = make(prec);
  char* end = nullptr;
  mpfr_strtofr(lo.get(), s.c_str(), &end, 10, MPFR_RNDD);
  if (end == s.c_str() || *end != '\0' || !mpfr_number_p(lo.get())) {
    throw DomainError("from_decimal", "not a finite decimal literal: '" + s + "'");
  }
  mpfr_strtofr(hi.get(), s.c_str(), &end, 10, MPFR_RNDU);
  return Bound(canonicalize(finite(std::move(lo)), Rounding::down, prec),
               canonicalize(finite(std::move(hi)), Rounding::up, prec));
}

Bound Bound::pi(long prec) {
  detail::ensure_exponent_range();
  Mpfr lo = make(prec);
  Mpfr hi = make(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return Bound(finite(std::move(lo)), finite(std::move(hi)));
}

bool Bound::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

bool Bound::contains(const Real& x) const { return compare(lo_, x) <= 0 && compare(x, hi_) <= 0; }

bool Bound::contains(const Bound& inner) const {
  return compare(lo_, inner.lo_) <= 0 && compare(inner.hi_, hi_) <= 0;
}

std::string Bound::to_string(int digits) const {
  return "[" + lo_.to_string(digits, Rounding::down) + ", " + hi_.to_string(digits, Rounding::up) + "]";
}

Bound operator-(const Bound& a) { return Bound::from_endpoints(negate(a.hi()), negate(a.lo())); }

Bound operator+(const Bound& a, const Bound& b) {
  const long p = joint_precision(a, b);
  return Bound::from_endpoints(add(a.lo(), b.lo(), Rounding::down, p), add(a.hi(), b.hi(), Rounding::up, p));
}

Bound operator-(const Bound& a, const Bound& b) {
  const long p = joint_precision(a, b);
  return Bound::from_endpoints(sub(a.lo(), b.hi(), Rounding::down, p), sub(a.hi(), b.lo(), Rounding::up, p));
}

Bound operator*(const Bound& a, const Bound& b) {
  const long p = joint_precision(a, b);
  const Real* xs[2] = {&a.lo(), &a.hi()};
  const Real* ys[2] = {&b.lo(), &b.hi()};
  std::optional<Real> lo;
  std::optional<Real> hi;
  for (const Real* x : xs) {
    for (const Real* y : ys) {
      Real d = mul(*x, *y, Rounding::down, p);
      Real u = mul(*x, *y, Rounding::up, p);
      if (!lo || compare(d, *lo) < 0) lo = std::move(d);
      if (!hi || compare(u, *hi) > 0) hi = std::move(u);
    }
  }
  return Bound::from_endpoints(std::move(*lo), std::move(*hi));
}

Bound operator/(const Bound& a, const Bound& b) {
  if (b.contains_zero()) throw DomainError("div", "divisor " + b.to_string() + " contains zero");
  const long p = joint_precision(a, b);
  const Real* xs[2] = {&a.lo(), &a.hi()};
  const Real* ys[2] = {&b.lo(), &b.hi()};
  std::optional<Real> lo;
  std::optional<Real> hi;
  for (const Real* x : xs) {
    for (const Real* y : ys) {
      Real d = div(*x, *y, Rounding::down, p);
      Real u = div(*x, *y, Rounding::up, p);
      if (!lo || compare(d, *lo) < 0) lo = std::move(d);
      if (!hi || compare(u, *hi) > 0) hi = std::move(u);
    }
  }
  return Bound::from_endpoints(std::move(*lo), std::move(*hi));
}

Bound exp(const Bound& x) {
  const long p = x.precision();
  return Bound::from_endpoints(exp_real(x.lo(), Rounding::down, p), exp_real(x.hi(), Rounding::up, p));
}

Bound log(const Bound& x) {
  if (!x.is_positive()) throw DomainError("log", "argument " + x.to_string() + " is not positive");
  const long p = x.precision();
  return Bound::from_endpoints(log_real(x.lo(), Rounding::down, p), log_real(x.hi(), Rounding::up, p));
}

Bound sqrt(const Bound& x) {
  if (!x.is_nonnegative()) throw DomainError("sqrt", "argument " + x.to_string() + " is not nonnegative");
  const long p = x.precision();
  return Bound::from_endpoints(sqrt_real(x.lo(), Rounding::down, p), sqrt_real(x.hi(), Rounding::up, p));
}

Bound cosh(const Bound& x) {
  const long p = x.precision();
  if (x.lo().sign() >= 0) {
    return Bound::from_endpoints(cosh_real(x.lo(), Rounding::down, p), cosh_real(x.hi(), Rounding::up, p));
  }
  if (x.hi().sign() <= 0) {
    return Bound::from_endpoints(cosh_real(x.hi(), Rounding::down, p), cosh_real(x.lo(), Rounding::up, p));
  }
  Real a = cosh_real(x.lo(), Rounding::up, p);
  Real b = cosh_real(x.hi(), Rounding::up, p);
  return Bound::from_endpoints(one(p), max_real(a, b));
}

Bound sinh(const Bound& x) {
  const long p = x.precision();
  return Bound::from_endpoints(sinh_real(x.lo(), Rounding::down, p), sinh_real(x.hi(), Rounding::up, p));
}

Bound pow(const Bound& x, Rational exponent) {
  std::int64_t num = exponent.num;
  std::int64_t den = exponent.den;
  if (den == 0) throw DomainError("pow_rational", "zero exponent denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  const long p = x.precision();
  if (num == 0) return Bound::from_endpoints(one(p), one(p));
  if (den > 1 && !x.is_nonnegative()) {
    throw DomainError("pow_rational", "fractional power of " + x.to_string() + " which is not nonnegative");
  }
  if (num < 0 && x.contains_zero()) {
    throw DomainError("pow_rational", "negative power of " + x.to_string() + " which contains zero");
  }

  auto up = [&](const Real& r) { return pow_real(r, num, den, Rounding::up, p); };
  auto down = [&](const Real& r) { return pow_real(r, num, den, Rounding::down, p); };

  const bool odd_integer = den == 1 && (num % 2 != 0);
  if (x.is_nonnegative() || odd_integer) {
    // Monotone on the whole argument range (for odd powers, on each side of 0
    // and, for positive powers, across it).
    if (num > 0) return Bound::from_endpoints(down(x.lo()), up(x.hi()));
    if (x.is_nonnegative() || x.hi().sign() < 0) return Bound::from_endpoints(down(x.hi()), up(x.lo()));
  }
  // Even integer power with some negative part.
  if (x.hi().sign() <= 0) {
    if (num > 0) return Bound::from_endpoints(down(x.hi()), up(x.lo()));
    return Bound::from_endpoints(down(x.lo()), up(x.hi()));
  }
  // Straddles zero, num > 0 and even.
  return Bound::from_endpoints(Real(p), max_real(up(x.lo()), up(x.hi())));
}

Bound min(const Bound& a, const Bound& b) {
  return Bound::from_endpoints(min_real(a.lo(), b.lo()), min_real(a.hi(), b.hi()));
}

Bound max(const Bound& a, const Bound& b) {
  return Bound::from_endpoints(max_real(a.lo(), b.lo()), max_real(a.hi(), b.hi()));
}

std::string_view to_string(ArithOp op) {
  switch (op) {
    case ArithOp::add: return "add";
    case ArithOp::sub: return "sub";
    case ArithOp::mul: return "mul";
    case ArithOp::div: return "div";
    case ArithOp::pow_rational: return "pow_rational";
    case ArithOp::exp: return "exp";
    case ArithOp::log: return "log";
    case ArithOp::cosh: return "cosh";
    case ArithOp::sinh: return "sinh";
    case ArithOp::sqrt: return "sqrt";
    case ArithOp::min: return "min";
    case ArithOp::max: return "max";
  }
  return "unknown";
}

Bound arith(ArithOp op, std::span<const Bound> args, std::optional<Rational> exponent) {
  const bool binary = op == ArithOp::add || op == ArithOp::sub || op == ArithOp::mul ||
                      op == ArithOp::div || op == ArithOp::min || op == ArithOp::max;
  const std::size_t want = binary ? 2 : 1;
  if (args.size() != want) {
    throw std::invalid_argument(std::string(to_string(op)) + " expects " + std::to_string(want) + " argument(s)");
  }
  switch (op) {
    case ArithOp::add: return args[0] + args[1];
    case ArithOp::sub: return args[0] - args[1];
    case ArithOp::mul: return args[0] * args[1];
    case ArithOp::div: return args[0] / args[1];
    case ArithOp::min: return min(args[0], args[1]);
    case ArithOp::max: return max(args[0], args[1]);
    case ArithOp::exp: return exp(args[0]);
    case ArithOp::log: return log(args[0]);
    case ArithOp::cosh: return cosh(args[0]);
    case ArithOp::sinh: return sinh(args[0]);
    case ArithOp::sqrt: return sqrt(args[0]);
    case ArithOp::pow_rational:
      if (!exponent) throw std::invalid_argument("pow_rational needs an exponent");
      return pow(args[0], *exponent);
  }
  throw std::invalid_argument("unknown operation");
}

bool certainly_le(const Bound& a, const Bound& b) { return compare(a.hi(), b.lo()) <= 0; }
bool certainly_lt(const Bound& a, const Bound& b) { return compare(a.hi(), b.lo()) < 0; }
bool possibly_le(const Bound& a, const Bound& b) { return compare(a.lo(), b.hi()) <= 0; }

Log10Report log10_report(const Bound& b, int digits) {
  if (!b.is_positive()) throw DomainError("log10_report", "argument " + b.to_string() + " is not positive");
  Bound value = log(b) / log(Bound::from_int(10, b.precision()));
  Log10Report out{value, value.lo().to_string(digits, Rounding::down), value.hi().to_string(digits, Rounding::up)};
  return out;
}

double relative_width(const Bound& b) {
  if (b.contains_zero()) return b.is_degenerate() ? 0.0 : HUGE_VAL;
  const long p = b.precision();
  Real width = sub(b.hi(), b.lo(), Rounding::up, p);
  const Real& smaller = b.lo().sign() > 0 ? b.lo() : b.hi();
  Real ratio = div(width, abs_value(smaller), Rounding::up, p);
  return ratio.to_double(Rounding::up);
}

}  // namespace hypbound
