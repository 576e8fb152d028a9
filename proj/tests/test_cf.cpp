#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "spectra/cf.hpp"

using namespace spectra;

namespace {

DigitWord W(const char* s) { return DigitWord::parse(s); }

std::vector<long> random_word(std::mt19937_64& rng, std::size_t n) {
  std::vector<long> w(n);
  for (auto& d : w) d = static_cast<long>(rng() % 2) + 1;
  return w;
}

}  // namespace

TEST_CASE("word literals") {
  CHECK(W("2_21_2212_31") == DigitWord{2, 2, 1, 1, 2, 1, 2, 2, 2, 1});
  CHECK(W("1_2 2_3 1 2") == DigitWord{1, 1, 2, 2, 2, 1, 2});
  CHECK(W("12, 3_2") == DigitWord{12, 3, 3});
  CHECK(W("") == DigitWord{});
  CHECK(W("1 2_3 1_2 2").to_string() == "1 2_3 1_2 2");
  try {
    (void)W("1 2 x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(W("0"), ParseError);
  CHECK_THROWS_AS(W("_2"), ParseError);
}

TEST_CASE("cf literals") {
  CFValue v = CFValue::parse("2; 1_2 2_3 1 2 | (1_2 2_3 1 2)*");
  CHECK(v.a0 == 2);
  CHECK(v.head == W("1_2 2_3 1 2"));
  REQUIRE(v.period);
  CHECK(*v.period == W("1_2 2_3 1 2"));
  CFValue z = CFValue::parse("0;(2)*");
  CHECK(z.head.empty());
  CHECK(z.value() == QuadSurd(-1, 1, 2, 1));
  CHECK(CFValue::parse("2;1 2").value() == QuadSurd(Rational(8, 3)));
  try {
    (void)CFValue::parse("2;1 2 (1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
  CHECK_THROWS_AS(CFValue::parse("1 2"), ParseError);
  CHECK_THROWS_AS(CFValue::parse("2;(1)"), ParseError);
}

TEST_CASE("eval_finite examples") {
  CHECK(Rational(eval_finite(2, W("1 2")) + eval_finite(0, W("1 2"))) == Rational(10, 3));
  CHECK(eval_finite(0, DigitWord{}) == 0);
  CHECK(Rational(eval_finite(2, W("1 1 2 1 2 1")) + eval_finite(0, W("1 2 1 1 2 1"))) ==
        Rational(2143, 650));
}

TEST_CASE("eval_periodic examples") {
  CHECK(eval_periodic(0, CFTail({}, {2})) == QuadSurd(-1, 1, 2, 1));
  CHECK(eval_periodic(0, CFTail({}, {1})) == QuadSurd(-1, 1, 5, 2));
  QuadSurd first = eval_periodic(2, CFTail({}, W("1 1 2 2 2 1 2")));
  CHECK(first == QuadSurd(77, 1, 18229, 82));
  auto f = oracle::cf_periodic(2, {}, {1, 1, 2, 2, 2, 1, 2});
  CHECK(std::abs(oracle::gap(f, oracle::surd(77, 1, 18229, 82))) < 1e-90);
}

TEST_CASE("b_inf as a sum of two periodic expansions") {
  QuadSurd fwd = eval_periodic(2, CFTail({}, W("1_2 2_3 1 2")));
  QuadSurd bwd = eval_periodic(0, CFTail({}, W("1 2_3 1_2 2")));
  SurdPair s = sum2_eval(fwd, bwd, 64);
  CHECK(s.enclosure.matches_decimal_prefix("3.2930442439"));
  auto f = oracle::cf_periodic(2, {}, {1, 1, 2, 2, 2, 1, 2});
  auto b = oracle::cf_periodic(0, {}, {1, 2, 2, 2, 1, 1, 2});
  mpfr_add(f.get(), f.get(), b.get(), MPFR_RNDN);
  CHECK(s.enclosure.contains(parse_rational("3.29304424395")) == false);
  CHECK(std::abs(oracle::gap(f, oracle::from_rational(s.enclosure.midpoint()))) < 1e-18);
}

TEST_CASE("canonical tails") {
  CFTail t(W("1 2"), W("1 2"));
  CHECK(t.preperiod().empty());
  CHECK(t.period() == W("1 2"));
  CHECK(CFTail({}, W("2 2 2")).period() == DigitWord{2});
  CHECK(CFTail(W("1 2 1"), W("2 1 2 1")).period() == W("1 2"));
  CHECK(CFTail(W("1 2 1"), W("2 1 2 1")).preperiod().empty());
  CHECK(CFTail(W("2 2 1"), W("2 1 2 1")).preperiod() == W("2"));
  CHECK(CFTail(W("1"), W("2")).drop(3) == CFTail({}, {2}));
  CHECK(eval_periodic(0, CFTail(W("1 2"), W("1 2"))) == eval_periodic(0, CFTail({}, W("1 2"))));
}

TEST_CASE("cf_compare examples") {
  CHECK(cf_compare(CFValue::parse("2;1 2"), CFValue::parse("2;1 1")) == std::strong_ordering::greater);
  CHECK(cf_compare(CFValue::parse("2;1 2 (1)*"), CFValue::parse("2;1 1 (1)*")) ==
        std::strong_ordering::greater);
  CHECK(cf_compare(CFValue::parse("0;(2)*"), CFValue::parse("0;1 (2)*")) == std::strong_ordering::less);
  CHECK(surd_compare(CFValue::parse("0;(2)*").value(), CFValue::parse("0;1 (2)*").value()) ==
        std::strong_ordering::less);
  CHECK(cf_compare(CFValue::parse("0;1 (2 1)*"), CFValue::parse("0;1 2 (1 2)*")) ==
        std::strong_ordering::equal);
  CHECK(cf_compare(CFValue::parse("0;2"), CFValue::parse("0;1 1")) == std::strong_ordering::equal);
  CHECK(cf_compare(CFValue::parse("0;1 1"), CFValue::parse("0;1 1 (1 2)*")) == std::strong_ordering::less);
}

TEST_CASE("parity_bounds examples") {
  ParityBounds one = parity_bounds(0, W("1"));
  CHECK(one.lo == Rational(1, 2));
  CHECK(one.hi == 1);
  CHECK(one.truncation_is_upper);
  ParityBounds fwd = parity_bounds(2, W("1_2 2_3 1"));
  ParityBounds bwd = parity_bounds(0, W("1 2_3 1 2"));
  CHECK(Rational(fwd.lo + bwd.lo) == Rational(8776, 2665));
  ParityBounds s = parity_bounds(0, W("1 2 2 2 1 1 2 1 2 2 2"));
  QuadSurd inside = eval_periodic(0, CFTail(W("1 2_3 1_2 2 1 2_3"), W("1_2 2_3 1 2")));
  CHECK(surd_compare(QuadSurd(s.lo), inside) == std::strong_ordering::less);
  CHECK(surd_compare(inside, QuadSurd(s.hi)) == std::strong_ordering::less);
}

TEST_CASE("transpose") {
  CHECK(W("1222121122").transpose() == W("2211212221"));
  CHECK(DigitWord{}.transpose() == DigitWord{});
  CHECK(W("121").transpose() == W("121"));
}

TEST_CASE("property: eval_finite matches the convergent recursion and a right fold") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = rng() % 30;
    std::vector<long> w(n);
    for (auto& d : w) d = static_cast<long>(rng() % 7) + 1;
    long a0 = static_cast<long>(rng() % 5);
    Rational exact = eval_finite(a0, DigitWord(w));
    CHECK(exact == oracle::convergent(a0, w));
    Rational fold = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) fold = 1 / (*it + fold);
    CHECK(exact == Rational(fold + a0));
  }
}

TEST_CASE("property: agreement on positions 0..n forces distance below 2^-(n-1)") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng() % 20;
    auto common = random_word(rng, n);
    auto x = common;
    auto y = common;
    auto tx = random_word(rng, 1 + rng() % 20);
    auto ty = random_word(rng, 1 + rng() % 20);
    x.insert(x.end(), tx.begin(), tx.end());
    y.insert(y.end(), ty.begin(), ty.end());
    Rational dx = eval_finite(2, DigitWord(x)) - eval_finite(2, DigitWord(y));
    CHECK(abs(dx) < pow2_neg(static_cast<long>(n) - 1));
  }
}

TEST_CASE("property: parity bounds sandwich random continuations") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    auto prefix = random_word(rng, 1 + rng() % 12);
    ParityBounds b = parity_bounds(0, DigitWord(prefix));
    auto cont = random_word(rng, 1 + rng() % 10);
    auto full = prefix;
    full.insert(full.end(), cont.begin(), cont.end());
    Rational finite = eval_finite(0, DigitWord(full));
    CHECK(b.lo <= finite);
    CHECK(finite <= b.hi);
    QuadSurd inf = eval_periodic(0, CFTail(DigitWord(full), DigitWord(random_word(rng, 1 + rng() % 4))));
    CHECK(surd_compare(QuadSurd(b.lo), inf) == std::strong_ordering::less);
    CHECK(surd_compare(inf, QuadSurd(b.hi)) == std::strong_ordering::less);
  }
}

TEST_CASE("property: Gauss expansion of eval_periodic reproduces the digits") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    DigitWord pre(random_word(rng, rng() % 6));
    std::vector<long> per = random_word(rng, 1 + rng() % 6);
    for (auto& d : per) d += static_cast<long>(rng() % 2);
    CFTail tail(pre, DigitWord(per));
    long a0 = static_cast<long>(rng() % 3);
    auto digits = gauss_expand(eval_periodic(a0, tail), 51);
    REQUIRE(digits.size() == 51);
    CHECK(digits[0] == a0);
    for (std::size_t k = 1; k <= 50; ++k) CHECK(digits[k] == tail.at(k - 1));
  }
}

TEST_CASE("property: cf_compare agrees with exact surd comparison") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    CFValue x{1, DigitWord(random_word(rng, rng() % 5)), DigitWord(random_word(rng, 1 + rng() % 3))};
    CFValue y{1, DigitWord(random_word(rng, rng() % 5)), DigitWord(random_word(rng, 1 + rng() % 3))};
    if (rng() % 4 == 0) y.period.reset();
    CHECK(cf_compare(x, y) == surd_compare(x.value(), y.value()));
  }
}
