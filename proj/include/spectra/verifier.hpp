#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spectra/cf.hpp"
#include "spectra/numeric.hpp"

namespace spectra {

enum class CheckStatus { Pass, Fail, Info };
std::string to_string(CheckStatus s);

struct CheckReport {
  std::string id;
  CheckStatus status{CheckStatus::Fail};
  std::string computed;  // exact value
  std::string decimal;   // certified leading digits of the computed value
  std::string threshold;
  /// Signed distance by which the claim holds; absent for exact identities.
  std::optional<IntervalReal> margin;
  std::string note;
  double cpu_ms{0};

  std::string margin_decimal(int digits = 12) const;
};

enum class Relation { Less, Greater };

enum class Anchor { AlphaInf, Alpha2, BInf };

/// The claim  lambda_j(B) (< or >) anchor + offset  for every B containing
/// `pattern` with j at the starred digit, bounded by the sum of the explicit
/// expansions `forward` (starting at the starred digit) and `backward`.
struct PatternCheck {
  std::string id;
  std::string pattern;  // spaced digit word with '*' after the marked digit
  Relation relation;
  Anchor anchor;
  Rational offset;
  /// Continuation digits: {1, 2} for sequences over two letters, otherwise
  /// any positive integer.
  bool binary{true};
  CFValue forward;
  CFValue backward;
  std::optional<Rational> expected;
  std::optional<std::string> printed;
};

const std::vector<PatternCheck>& pattern_checks();

/// Exact bound value, the exact comparison with the threshold, and a check
/// that each bounding expansion lies on the correct side of every
/// continuation of the pattern.
CheckReport run_pattern_check(const PatternCheck& check, long bits = 256);

std::vector<CheckReport> verify_constants(long bits = 256);

enum class Family { Pa, Ta };

/// Builds P_a = Q_a R S_a or T_a = U_a V W_a and checks the bound on
/// l of the periodic sequence.  Throws ConstructionError when the block
/// lengths disagree with 24a + 24 or 14a + 72.
CheckReport verify_family(Family which, int a, long bits = 256);
DigitWord family_word(Family which, int a);

std::vector<CheckReport> verify_extremes(long bits = 256);

struct LedgerItem {
  std::string id;
  std::function<CheckReport(long bits)> run;
};

/// Every check in fixed order.
const std::vector<LedgerItem>& ledger();

/// True when `id` matches one of the whitespace-separated shell globs.
bool matches_any(const std::string& id, const std::string& patterns);

/// Runs the selected checks (all when `only` is empty) in parallel; the
/// result keeps ledger order.
std::vector<CheckReport> run_ledger(const std::string& only = {}, long bits = 256);

}  // namespace spectra
