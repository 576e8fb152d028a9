#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectra/numeric.hpp"

namespace spectra {

using Digit = long;

/// Finite word of positive partial quotients.
class DigitWord {
 public:
  DigitWord() = default;
  DigitWord(std::initializer_list<Digit> digits);
  explicit DigitWord(std::vector<Digit> digits);

  /// Two syntaxes are accepted.  Without whitespace or commas every character
  /// is a single digit and "_k" (one digit) repeats the previous one:
  /// "2_21_2212_31" is 2,2,1,1,2,1,2,2,2,1.  With separators each token is a
  /// number with an optional "_k": "1_2 2_3 1 2".
  static DigitWord parse(std::string_view text);

  const std::vector<Digit>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  auto begin() const { return digits_.begin(); }
  auto end() const { return digits_.end(); }

  DigitWord transpose() const;
  DigitWord repeat(std::size_t times) const;
  DigitWord slice(std::size_t from, std::size_t count) const;
  /// Cyclic rotation: result[i] = (*this)[(i + k) mod size].
  DigitWord rotate(std::size_t k) const;
  void append(const DigitWord& other);
  void push_back(Digit d) { check(d); digits_.push_back(d); }

  friend DigitWord operator+(DigitWord a, const DigitWord& b) {
    a.append(b);
    return a;
  }
  friend auto operator<=>(const DigitWord&, const DigitWord&) = default;
  friend bool operator==(const DigitWord&, const DigitWord&) = default;

  /// Compact notation with multiplicities, e.g. "1_2 2_3 1 2".
  std::string to_string() const;
  /// Plain digits without separators (only meaningful when all digits < 10).
  std::string to_plain() const;

 private:
  static void check(Digit d);
  std::vector<Digit> digits_;
};

/// Eventually periodic tail  preperiod, period, period, ...
class CFTail {
 public:
  CFTail(DigitWord preperiod, DigitWord period);

  const DigitWord& preperiod() const { return preperiod_; }
  const DigitWord& period() const { return period_; }
  /// Digit at position k >= 0 of the infinite tail.
  Digit at(std::size_t k) const;
  /// Tail after dropping the first k digits.
  CFTail drop(std::size_t k) const;

  friend bool operator==(const CFTail&, const CFTail&) = default;
  std::string to_string() const;

 private:
  DigitWord preperiod_;
  DigitWord period_;
};

/// x -> (a x + b) / (c x + d) with integer entries.
struct Mobius {
  Integer a{1}, b{0}, c{0}, d{1};

  static Mobius digit(Digit k);           // x -> 1/(k + x)
  static Mobius word(const DigitWord& w);  // composition T_{w1} ... T_{wn}
  Mobius operator*(const Mobius& other) const;
  Rational apply(const Rational& x) const;
  /// Value at x = infinity, i.e. a/c.
  Rational at_infinity() const;
  QuadSurd apply(const QuadSurd& x) const;
  /// Fixed point in (0,1) of the matrix of a non-empty period.
  QuadSurd attracting_fixed_point() const;
};

/// [a0; head] (finite) or [a0; head, period, period, ...].
struct CFValue {
  Integer a0{0};
  DigitWord head;
  std::optional<DigitWord> period;

  /// "2; 1_2 2_3 1 2 | (1_2 2_3 1 2)*", "0;(2)*", "2;1 2".
  static CFValue parse(std::string_view text);

  bool is_finite() const { return !period.has_value(); }
  /// Partial quotient at 0-based position k (k = 0 is a0); nullopt past the
  /// end of a finite expansion.
  std::optional<Integer> digit(std::size_t k) const;
  QuadSurd value() const;
  std::string to_string() const;
};

Rational eval_finite(const Integer& a0, const DigitWord& w);
QuadSurd eval_periodic(const Integer& a0, const CFTail& tail);

/// Exact order of two expansions by the alternating first-difference rule;
/// finite expansions compare as if terminated by an infinite partial quotient.
std::strong_ordering cf_compare(const CFValue& x, const CFValue& y);

/// Allowed partial quotients for continuations: min_digit..max_digit.
struct DigitSet {
  Digit min_digit{1};
  std::optional<Digit> max_digit{2};
  bool contains(Digit d) const { return d >= min_digit && (!max_digit || d <= *max_digit); }
};

/// Closed bounds on every value [a0; prefix, x_{n+1}, ...] with continuation
/// digits in `digits`.  One side is the truncation [a0; prefix]; the other
/// appends the smallest allowed digit.  Strict for infinite continuations.
struct ParityBounds {
  Rational lo;
  Rational hi;
  /// True when the truncation [a0; prefix] is the upper bound (odd length).
  bool truncation_is_upper;
};
ParityBounds parity_bounds(const Integer& a0, const DigitWord& prefix, const DigitSet& digits = {});

/// First `count` partial quotients of x (fewer when x is rational).
std::vector<Integer> gauss_expand(const QuadSurd& x, std::size_t count);

}  // namespace spectra
