#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra/cf.hpp"
#include "spectra/numeric.hpp"
#include "spectra/subshift.hpp"

namespace spectra {

/// A Gauss-Cantor set given by a prefix-free block alphabet, or the one-sided
/// subshift avoiding a forbidden set.
struct CantorSpec {
  enum class Mode { Blocks, Forbidden };

  Mode mode{Mode::Blocks};
  std::string name;
  std::vector<DigitWord> blocks;
  std::optional<ForbiddenSet> forbidden;

  static CantorSpec from_blocks(std::vector<DigitWord> blocks, std::string name = {});
  static CantorSpec from_forbidden(ForbiddenSet forbidden, std::string name = {});

  Automaton automaton() const;
};

/// inf and sup of |(Psi^n)'| over the cylinder of `word`.  Points of the
/// cylinder are [0; word, y] with y ranging between the smallest and largest
/// admissible continuations, and |(Psi^n)'| = (q_N + y q_{N-1})^2.
struct CylinderBound {
  DigitWord word;
  QuadSurd lam_exact;
  QuadSurd Lam_exact;
  IntervalReal lam;
  IntervalReal Lam;
};

/// Throws InadmissibleError when the word is not a block concatenation
/// (block mode) or has no infinite admissible continuation (forbidden mode).
CylinderBound cylinder_bounds(const CantorSpec& spec, const DigitWord& word, long bits);

/// Level-n cylinders: words of n blocks, or admissible words of n digits
/// that extend to infinite admissible sequences.
std::vector<DigitWord> level_words(const CantorSpec& spec, std::size_t n);

struct DimensionBracket {
  Rational alpha;  // multiple of tol, alpha <= true alpha_n
  Rational beta;   // multiple of tol, beta >= true beta_n
  long bits;       // precision that certified both roots
  std::size_t cylinders;
};

/// alpha_n solves sum (1/Lam_R)^s = 1 and beta_n solves sum (1/lam_R)^s = 1.
/// Roots are located on the grid k*tol: alpha is rounded down and beta up,
/// each certified to lie within one grid step of the true root.  For a
/// forbidden-factor spec only beta bounds the dimension (cylinder bounds are
/// submultiplicative but word counts are not supermultiplicative).  Precision
/// doubles from `bits` up to 8*bits before PrecisionError is thrown.
DimensionBracket palis_takens_bounds(const CantorSpec& spec, std::size_t n, const Rational& tol, long bits = 256);

/// Enclosure of sum over cylinders of exp(-s log D_R) with D = Lam (upper =
/// false) or lam.
IntervalReal cylinder_sum(const std::vector<CylinderBound>& cylinders, const Rational& s, bool use_lam, long bits);

/// Heuristic dimension estimate from the periodic-orbit expansion of the
/// Fredholm determinant of the transfer operator, truncated at order n
/// (blocks in block mode, digits in forbidden mode).  Not certified.
struct PressureResult {
  double value;
  std::size_t orbits;
};
PressureResult pressure_root(const CantorSpec& spec, std::size_t n, double tol = 1e-10);

/// The truncated determinant evaluated at s.
double fredholm_determinant(const CantorSpec& spec, std::size_t n, double s);

}  // namespace spectra
