#include "spectra/constants.hpp"

namespace spectra::constants {

namespace {

QuadSurd tail_value(long a0, const char* pre, const char* per) {
  return eval_periodic(a0, CFTail(DigitWord::parse(pre), DigitWord::parse(per)));
}

}  // namespace

ForbiddenSet forbidden_P() {
  std::vector<DigitWord> words;
  for (const char* w : {"21212", "2121_3", "1_3212", "12121_2", "1_22121", "2_3121_22_21", "12_21_2212_3",
                        "12_3121_22_2", "2_21_2212_31"})
    words.push_back(DigitWord::parse(w));
  return ForbiddenSet(std::move(words));
}

DigitWord base_period() { return DigitWord::parse("1_2 2_3 1 2"); }

QuadSurd head() { return eval_periodic(2, CFTail({}, base_period())); }

TwoSided two_sided(long a0, const char* pre, const char* per, const char* pre2, const char* per2) {
  return {tail_value(a0, pre, per), tail_value(0, pre2, per2)};
}

TwoSided alpha_inf() { return {head(), tail_value(0, "1 2_3 1_2 2 1", "2")}; }

TwoSided alpha_n(int n) {
  DigitWord pre = DigitWord::parse("1 2_3 1_2 2 1") + DigitWord{2}.repeat(static_cast<std::size_t>(n));
  return {head(), eval_periodic(0, CFTail(pre, DigitWord::parse("1 2 1_2 2_3")))};
}

TwoSided b_inf() { return two_sided(2, "", "1_2 2_3 1 2", "", "1 2_3 1_2 2"); }

TwoSided B_inf() {
  return two_sided(2, "1", "1 2_3 1 2 1_2 2 1_2 2", "1 2_3 1_2 2 1 2_3 1_2 2 1 2_2", "1 2_3 1 2 1_2 2 1_2 2");
}

TwoSided c() { return two_sided(2, "", "1_2 2_3 1 2", "1 2_3 1_2 2 1 2_2", "1 2_3 1 2 1_2 2 1_2 2"); }

TwoSided gamma() { return two_sided(2, "", "1_2 2_3 1 2", "1 2_3 1_2 2 1 2_5", "1 2 1_2 2_4"); }

TwoSided berstein_guess() { return two_sided(2, "1", "1 2_3 1 2 1_2 2 1_2 2", "", "1 2_3 1_2 2"); }

TwoSided berstein_claim() { return two_sided(2, "1", "1 2_3 1 2 1_2 2 1_2 2", "1", "2_3 1_2"); }

QuadSurd c_closed_first() { return QuadSurd(77, 1, 18229, 82); }
QuadSurd c_closed_second() { return QuadSurd(17633692, -1, 151905, 24923467); }
QuadSurd gamma_closed_second() { return QuadSurd(7219908, -18, 82, 10204619); }
QuadSurd freiman() { return QuadSurd(2221564096, 283748, 462, 491993569); }

BiSeq G() { return BiSeq::parse("(2 1_2 2 1_2 2 1 2_3 1)* 2_2 1 2 1_2 2_3 1 ; 2^ ; (1_2 2_3 1 2)*"); }

BiSeq g() { return BiSeq::parse("(2_4 1_2 2 1)* 2_5 1 2 1_2 2_3 1 ; 2^ ; (1_2 2_3 1 2)*"); }

}  // namespace spectra::constants
