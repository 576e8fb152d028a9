#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/cf.hpp"
#include "spectra/numeric.hpp"

namespace spectra {

/// Bi-infinite sequence, eventually periodic on both sides, read left to right
/// as  ... LP LP LJ C RJ RP RP ...  with position 0 at C[origin].
class BiSeq {
 public:
  BiSeq(DigitWord left_period, DigitWord left_junction, DigitWord center, std::size_t origin,
        DigitWord right_junction, DigitWord right_period);

  /// "(LP)* LJ ; C with ^ after the origin digit ; RJ (RP)*", for example
  /// "(2 1_2 2 1_2 2 1 2_3 1)* 2_2 1 2 1_2 2_3 1 ; 2^ ; (1_2 2_3 1 2)*".
  static BiSeq parse(std::string_view text);
  /// The purely periodic sequence P P P ... with position 0 at P[origin].
  static BiSeq periodic(const DigitWord& period, std::size_t origin = 0);

  Digit at(long i) const;
  /// a_{i+1}, a_{i+2}, ...
  CFTail forward_tail(long i) const;
  /// a_{i-1}, a_{i-2}, ...
  CFTail backward_tail(long i) const;

  /// b_i = a_{-i}.
  BiSeq reversed() const;
  /// b_i = a_{i+k}.
  BiSeq shifted(long k) const;

  /// Positions < left_boundary() read the left period; positions >=
  /// right_boundary() read the right period.
  long left_boundary() const { return left_boundary_; }
  long right_boundary() const { return right_boundary_; }

  const DigitWord& left_period() const { return left_period_; }
  const DigitWord& left_junction() const { return left_junction_; }
  const DigitWord& center() const { return center_; }
  std::size_t origin() const { return origin_; }
  const DigitWord& right_junction() const { return right_junction_; }
  const DigitWord& right_period() const { return right_period_; }

  std::string to_string() const;

 private:
  DigitWord left_period_, left_junction_, center_, right_junction_, right_period_;
  std::size_t origin_;
  long left_boundary_;
  long right_boundary_;
};

/// lambda_i = [a_i; a_{i+1}, ...] + [0; a_{i-1}, ...].
struct LambdaValue {
  QuadSurd forward;   // [a_i; a_{i+1}, ...]
  QuadSurd backward;  // [0; a_{i-1}, ...]
  SurdSum exact;
  IntervalReal enclosure;
};

LambdaValue lambda_at(const BiSeq& b, long i, long bits);

enum class SupKind {
  Attained,  // m(B) = lambda at the witness
  Limit,     // m(B) equals a periodic limit value that no position reaches
};

struct LimitValue {
  char side;  // 'L' or 'R'
  std::size_t phase;
  SurdSum value;
};

struct MarkovCertificate {
  long window_lo;  // inclusive
  long window_hi;  // exclusive
  std::vector<LimitValue> limits;
  SurdSum limit_max;
  /// Positions outside the window satisfy |lambda_i - limit| < 2^-tail_bound_bits.
  long tail_bound_bits;
  /// m(B) minus the largest limit value; positive when the tail bound alone
  /// rules out every position outside the window.
  IntervalReal gap_to_limits;
  bool tail_bound_sufficient;
  /// Largest lambda_j in the window with j != witness, and its margin.
  std::optional<long> runner_up;
  std::optional<IntervalReal> runner_up_margin;
  std::size_t positions_evaluated;
};

struct MarkovResult {
  SurdSum exact;
  IntervalReal value;
  std::optional<long> witness;
  SupKind kind;
  MarkovCertificate certificate;
};

/// Certified m(B) = sup_i lambda_i(B).  Every position of the window
/// [L - r, R + r) is evaluated exactly (r defaults to the span between the
/// periodic parts plus 3 lcm(periods) + 40).  Outside the window the
/// backward (right side) or forward (left side) tails of positions of a fixed
/// phase form an orbit of one Mobius map converging to the periodic limit, so
/// their lambdas are bounded by the two shallowest members of the orbit and
/// the limit itself, all of which are inside the window.
/// Throws WindowInsufficient when r is shorter than two periods.
MarkovResult markov_value(const BiSeq& b, long bits, std::optional<long> window_radius = std::nullopt);

/// l(P-bar) = m(P-bar) = max of lambda over one period.
struct LagrangeResult {
  SurdSum exact;
  IntervalReal value;
  std::size_t witness;  // offset in P
};
LagrangeResult lagrange_value(const DigitWord& period, long bits);

struct MlMemberCertificate {
  BiSeq sequence;
  MarkovResult markov;
  bool inside_target;  // value in (alpha_inf - 1e-8, alpha_inf + 1e-8)
};

/// For an eventually periodic gamma with 2_3 gamma admissible, builds
///   B = gamma^T 2_4 1 2 1_2 2_3 1 2^ (1_2 2_3 1 2)*
/// and certifies m(B) = lambda_0(B).  Throws InadmissibleError otherwise.
MlMemberCertificate build_ml_member(const CFTail& gamma, long bits);

}  // namespace spectra
