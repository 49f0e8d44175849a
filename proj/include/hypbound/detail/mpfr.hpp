#pragma once

#include <mpfr.h>

#include <utility>

namespace hypbound::detail {

/// Owning handle for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }

  Mpfr(const Mpfr& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  Mpfr(Mpfr&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }

  Mpfr& operator=(const Mpfr& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }

  Mpfr& operator=(Mpfr&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }

  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

/// MPFR keeps its exponent range per thread. Every public entry point of the
/// interval layer calls this so values with very large binary exponents stay
/// representable regardless of which thread touches them.
void ensure_exponent_range();

}  // namespace hypbound::detail
