#pragma once

#include <string>

#include "spectra/cf.hpp"
#include "spectra/numeric.hpp"
#include "spectra/perron.hpp"
#include "spectra/subshift.hpp"

namespace spectra::constants {

/// The nine forbidden words defining X.
ForbiddenSet forbidden_P();

/// 1_2 2_3 1 2, the period of the forward tail shared by every constant.
DigitWord base_period();

/// [2; (1_2 2_3 1 2)*].
QuadSurd head();

/// A value [a0; pre (per)*] + [0; pre2 (per2)*] with both halves kept exact.
struct TwoSided {
  QuadSurd forward;
  QuadSurd backward;
  SurdSum exact() const { return SurdSum(forward) + SurdSum(backward); }
};

TwoSided two_sided(long a0, const char* pre, const char* per, const char* pre2, const char* per2);

TwoSided alpha_inf();
/// [2; (1_2 2_3 1 2)*] + [0; 1 2_3 1_2 2 1 2_n (1 2 1_2 2_3)*].
TwoSided alpha_n(int n);
TwoSided b_inf();
TwoSided B_inf();
TwoSided c();
TwoSided gamma();
/// [2; 1 (1 2_3 1 2 1_2 2 1_2 2)*] + [0; (1 2_3 1_2 2)*].
TwoSided berstein_guess();
/// [2; 1 (1 2_3 1 2 1_2 2 1_2 2)*] + [0; 1 (2_3 1_2)*].
TwoSided berstein_claim();

/// Closed forms: c = (77+sqrt(18229))/82 + (17633692-sqrt(151905))/24923467 and
/// gamma = (77+sqrt(18229))/82 + (7219908-18 sqrt(82))/10204619.
QuadSurd c_closed_first();
QuadSurd c_closed_second();
QuadSurd gamma_closed_second();
/// (2221564096 + 283748 sqrt(462)) / 491993569.
QuadSurd freiman();

BiSeq G();
BiSeq g();

}  // namespace spectra::constants
