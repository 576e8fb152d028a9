#pragma once

// Independent reference computations for the tests.  Everything here goes
// through MPFR floating point or brute force, never through the library's
// certified paths.

#include "spectra/numeric.hpp"

#include <mpfr.h>

#include <string>
#include <vector>

namespace oracle {

class Big {
 public:
  explicit Big(long bits = 400) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Big(const Big& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Big& operator=(const Big& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
  ~Big() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

inline Big from_rational(const spectra::Rational& q, long bits = 400) {
  Big out(bits);
  mpfr_set_q(out.get(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

/// (p + q sqrt(d)) / r in floating point.
inline Big surd(const spectra::Integer& p, const spectra::Integer& q, const spectra::Integer& d,
                const spectra::Integer& r, long bits = 400) {
  Big out(bits);
  Big t(bits);
  mpfr_set_z(t.get(), d.get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(t.get(), t.get(), MPFR_RNDN);
  mpfr_mul_z(t.get(), t.get(), q.get_mpz_t(), MPFR_RNDN);
  mpfr_add_z(out.get(), t.get(), p.get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(out.get(), out.get(), r.get_mpz_t(), MPFR_RNDN);
  return out;
}

inline Big surd(const spectra::QuadSurd& s, long bits = 400) {
  return surd(s.p(), s.q(), s.d(), s.r(), bits);
}

/// [a0; digits...] folded from the right in floating point, optionally with a
/// final tail value appended after the last digit.
inline Big cf_fold(long a0, const std::vector<long>& digits, long bits = 400) {
  Big acc(bits);
  mpfr_set_zero(acc.get(), 1);
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    mpfr_add_si(acc.get(), acc.get(), *it, MPFR_RNDN);
    mpfr_si_div(acc.get(), 1, acc.get(), MPFR_RNDN);
  }
  mpfr_add_si(acc.get(), acc.get(), a0, MPFR_RNDN);
  return acc;
}

/// Periodic expansion approximated by repeating the period enough times.
inline Big cf_periodic(long a0, const std::vector<long>& pre, const std::vector<long>& period,
                       long bits = 400) {
  std::vector<long> digits = pre;
  while (digits.size() < static_cast<std::size_t>(bits)) digits.insert(digits.end(), period.begin(), period.end());
  return cf_fold(a0, digits, bits);
}

inline bool less(const Big& a, const Big& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

inline double gap(const Big& a, const Big& b) {
  Big t(mpfr_get_prec(a.get()));
  mpfr_sub(t.get(), a.get(), b.get(), MPFR_RNDN);
  return t.to_double();
}

/// Exact rational from a brute-force convergent recursion (no Mobius code).
inline spectra::Rational convergent(long a0, const std::vector<long>& digits) {
  spectra::Integer p_prev = 1, p = a0, q_prev = 0, q = 1;
  for (long a : digits) {
    spectra::Integer pn = a * p + p_prev;
    spectra::Integer qn = a * q + q_prev;
    p_prev = p;
    p = pn;
    q_prev = q;
    q = qn;
  }
  spectra::Rational out(p, q);
  out.canonicalize();
  return out;
}

}  // namespace oracle
