#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "spectra/errors.hpp"

namespace spectra {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "3.2930442439", "-12", "1e-6" or "22/7" into an exact rational.
Rational parse_rational(std::string_view text);

/// 10^-k as an exact rational.
Rational pow10_neg(int k);

/// 2^-k as an exact rational.
Rational pow2_neg(long k);

/// Three-way comparison for GMP values, which lack operator<=>.
inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

// -----------------------------------------------------------------------------
// IntervalReal
// -----------------------------------------------------------------------------

/// Closed interval [lo, hi] with exact rational endpoints that is guaranteed to
/// contain some real number.  Arithmetic is outward-exact (no rounding).
class IntervalReal {
 public:
  IntervalReal() = default;
  IntervalReal(Rational lo, Rational hi, long precision_bits = 0);
  static IntervalReal point(const Rational& x);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  long precision_bits() const { return precision_bits_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const IntervalReal& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  /// True when every point of *this is strictly below every point of other.
  bool certainly_less(const IntervalReal& other) const { return hi_ < other.lo_; }
  bool certainly_greater(const IntervalReal& other) const { return lo_ > other.hi_; }

  IntervalReal operator-() const;
  friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b);
  friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b);
  friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b);
  /// Throws NumericError when b contains zero.
  friend IntervalReal operator/(const IntervalReal& a, const IntervalReal& b);

  /// Digits after the decimal point on which lo and hi agree (truncated),
  /// capped at max_digits.  "3.29304" style string.
  std::string certified_decimal(int max_digits) const;

  /// True when the interval lies inside [d, d + 10^-k) where d is the printed
  /// decimal with k fractional digits, i.e. the real's expansion starts with it.
  bool matches_decimal_prefix(std::string_view printed) const;

  friend bool operator==(const IntervalReal&, const IntervalReal&) = default;

 private:
  Rational lo_{0};
  Rational hi_{0};
  long precision_bits_{0};
};

/// Decimal expansion of q truncated toward zero after `digits` places.
std::string truncated_decimal(const Rational& q, int digits);

// -----------------------------------------------------------------------------
// QuadSurd
// -----------------------------------------------------------------------------

/// Exact quadratic irrational (p + q*sqrt(d)) / r in canonical form:
/// r > 0, d square-free (d = 0 iff q = 0), gcd(p, q, r) = 1.
///
/// Square factors of d are removed by trial division with all primes below
/// 2^16 plus a perfect-square test of the cofactor, which is complete for
/// d < 2^32 and for every discriminant that occurs in practice here.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(const Rational& x);  // NOLINT(google-explicit-constructor)
  QuadSurd(long x) : QuadSurd(Rational(x)) {}  // NOLINT
  QuadSurd(Integer p, Integer q, Integer d, Integer r);

  static QuadSurd sqrt(const Integer& d) { return QuadSurd(0, 1, d, 1); }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& d() const { return d_; }
  const Integer& r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  Rational rational_part() const { return make_rational(p_, r_); }
  Rational sqrt_coefficient() const { return make_rational(q_, r_); }

  QuadSurd conjugate() const;
  QuadSurd reciprocal() const;
  int sign() const;

  QuadSurd operator-() const;
  /// Field operations; both operands must share d (or one must be rational),
  /// otherwise FieldMismatch is thrown.
  friend QuadSurd operator+(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator-(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator*(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator/(const QuadSurd& a, const QuadSurd& b);

  friend bool operator==(const QuadSurd&, const QuadSurd&) = default;

  /// "(p+q*sqrt(d))/r", "sqrt(2)", "7/3"...
  std::string to_string() const;

 private:
  struct Trusted {};
  QuadSurd(Integer p, Integer q, Integer d, Integer r, Trusted);
  void normalize(bool reduce_d);

  Integer p_{0};
  Integer q_{0};
  Integer d_{0};
  Integer r_{1};
};

/// Square-free part and square root of the removed square: d = f^2 * s.
struct SquareFreeSplit {
  Integer square_root;
  Integer square_free;
};
SquareFreeSplit split_square_free(const Integer& d);

/// Certified enclosure of a surd with width <= 2^-bits.
IntervalReal surd_eval(const QuadSurd& s, long bits);

/// Exact ordering of two surds (any discriminants).
std::strong_ordering surd_compare(const QuadSurd& a, const QuadSurd& b);

// -----------------------------------------------------------------------------
// SurdSum
// -----------------------------------------------------------------------------

/// Exact finite sum  c_1 + sum_k c_k * sqrt(d_k)  of rational multiples of
/// square roots of distinct square-free integers.  Keys are d (1 is the
/// rational part).  This is the carrier for lambda values whose two halves
/// live in different quadratic fields.
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(const Rational& x);  // NOLINT(google-explicit-constructor)
  SurdSum(long x) : SurdSum(Rational(x)) {}  // NOLINT
  SurdSum(const QuadSurd& s);  // NOLINT(google-explicit-constructor)

  const std::map<Integer, Rational>& terms() const { return terms_; }
  std::size_t irrational_terms() const;
  bool is_zero() const { return terms_.empty(); }

  /// The value as a single QuadSurd when at most one irrational key remains.
  std::optional<QuadSurd> as_surd() const;
  std::optional<Rational> as_rational() const;

  SurdSum operator-() const;
  SurdSum& operator+=(const SurdSum& other);
  SurdSum& operator-=(const SurdSum& other);
  SurdSum& operator*=(const Rational& k);
  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  friend SurdSum operator*(SurdSum a, const Rational& k) { return a *= k; }
  /// Product in the multiquadratic field; sqrt(a)*sqrt(b) = g*sqrt(ab/g^2).
  friend SurdSum operator*(const SurdSum& a, const SurdSum& b);

  friend bool operator==(const SurdSum&, const SurdSum&) = default;

  /// Exact sign.  Sums with at most two irrational keys are decided purely
  /// algebraically; larger sums try interval separation first and fall back
  /// to the same algebraic recursion.
  int sign() const;

  /// Enclosure of width <= 2^-bits.
  IntervalReal enclose(long bits) const;

  std::string to_string() const;

 private:
  void add_term(const Integer& key, const Rational& coeff);
  int algebraic_sign(int depth) const;
  int sign_at_depth(int depth) const;

  std::map<Integer, Rational> terms_;
};

std::strong_ordering compare(const SurdSum& a, const SurdSum& b);

/// Exact value of a + b together with a certified enclosure.  When both
/// summands share a discriminant the value is a single QuadSurd.
struct SurdPair {
  SurdSum exact;
  IntervalReal enclosure;
  std::optional<QuadSurd> as_surd() const { return exact.as_surd(); }
};
SurdPair sum2_eval(const QuadSurd& a, const QuadSurd& b, long bits);

}  // namespace spectra
