#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "spectra/constants.hpp"
#include "spectra/errors.hpp"
#include "spectra/subshift.hpp"

using namespace spectra;

namespace {

DigitWord W(const char* s) { return DigitWord::parse(s); }

DigitWord from_bits(unsigned long bits, std::size_t n) {
  DigitWord w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<Digit>(1 + ((bits >> (n - 1 - i)) & 1)));
  return w;
}

std::size_t brute_count(const ForbiddenSet& f, std::size_t n) {
  std::size_t count = 0;
  for (unsigned long b = 0; b < (1UL << n); ++b)
    if (f.admits(from_bits(b, n))) ++count;
  return count;
}

oracle::Big tail_value(const CFTail& t) {
  std::vector<long> pre(t.preperiod().begin(), t.preperiod().end());
  std::vector<long> per(t.period().begin(), t.period().end());
  return oracle::cf_periodic(0, pre, per, 300);
}

// Random admissible continuation of length n from state s, folded as [0; ...].
oracle::Big random_continuation(const Automaton& a, Automaton::State s, std::size_t n, std::mt19937_64& rng) {
  std::vector<long> digits;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Digit> options;
    for (Digit d = 1; d <= a.alphabet_max(); ++d)
      if (auto t = a.step(s, d); t && a.live(*t)) options.push_back(d);
    Digit d = options[rng() % options.size()];
    digits.push_back(d);
    s = *a.step(s, d);
  }
  return oracle::cf_fold(0, digits, 300);
}

}  // namespace

TEST_CASE("forbidden set validation") {
  CHECK_THROWS_AS(ForbiddenSet({W("212"), W("21212")}), ConstructionError);
  CHECK_THROWS_AS(ForbiddenSet({W("13")}), ConstructionError);
  CHECK_THROWS_AS(ForbiddenSet({DigitWord{}}), ConstructionError);
  CHECK_THROWS_AS(ForbiddenSet({}, 0), ConstructionError);
  CHECK(constants::forbidden_P().words().size() == 9);
  CHECK_FALSE(constants::forbidden_P().admits(W("1 2 2 1 1 2 1 2 2 2")));
}

TEST_CASE("single forbidden word") {
  Automaton a = Automaton::factor(ForbiddenSet({W("21212")}));
  CHECK(a.live_count() == 5);
  CHECK_FALSE(a.accepts(W("212121")));
  CHECK(a.accepts(W("212211")));
}

TEST_CASE("empty forbidden set") {
  Automaton a = Automaton::factor(ForbiddenSet({}));
  CHECK(a.size() == 1);
  CHECK(a.accepts(W("1221212112")));
  CHECK(count_admissible(ForbiddenSet({}), 10) == 1024);
}

TEST_CASE("counts for P") {
  ForbiddenSet P = constants::forbidden_P();
  CHECK(count_admissible(P, 0) == 1);
  CHECK(count_admissible(P, 1) == 2);
  CHECK(count_admissible(P, 5) == 31);
  CHECK(count_admissible(P, 6) == 56);
  for (std::size_t n = 0; n <= 16; ++n) CHECK(count_admissible(P, n) == brute_count(P, n));
}

TEST_CASE("automaton acceptance equals the naive scan") {
  ForbiddenSet P = constants::forbidden_P();
  Automaton a = Automaton::factor(P);
  for (std::size_t n = 1; n <= 14; ++n)
    for (unsigned long b = 0; b < (1UL << n); ++b) {
      DigitWord w = from_bits(b, n);
      REQUIRE(a.accepts(w) == P.admits(w));
    }
}

TEST_CASE("enumeration") {
  ForbiddenSet P = constants::forbidden_P();
  CHECK(enumerate_admissible(P, 1) == std::vector<DigitWord>{W("1"), W("2")});
  auto five = enumerate_admissible(P, 5);
  CHECK(five.size() == 31);
  CHECK(std::find(five.begin(), five.end(), W("21212")) == five.end());
  CHECK(std::is_sorted(five.begin(), five.end()));
  CHECK(enumerate_admissible(ForbiddenSet({W("22")}), 3) ==
        std::vector<DigitWord>{W("111"), W("112"), W("121"), W("211"), W("212")});
  Automaton a = Automaton::factor(P);
  for (std::size_t n = 0; n <= 16; ++n) {
    auto words = enumerate_admissible(P, n);
    CHECK(Integer(static_cast<unsigned long>(words.size())) == count_admissible(P, n));
    for (const auto& w : words) REQUIRE(a.accepts(w));
  }
}

TEST_CASE("count growth bounds") {
  ForbiddenSet P = constants::forbidden_P();
  for (std::size_t m = 1; m <= 12; ++m)
    for (std::size_t n = 1; n <= 12; ++n) CHECK(count_admissible(P, m + n) <= count_admissible(P, m) * count_admissible(P, n));
  for (std::size_t n = 0; n <= 20; ++n) CHECK(count_admissible(P, n + 1) <= 2 * count_admissible(P, n));
}

TEST_CASE("extremal tails of the full shift and of K({1, 2_2})") {
  Automaton full = Automaton::factor(ForbiddenSet({}));
  CHECK(extremal_tail(full, 0, Sense::Max) == CFTail({}, W("1 2")));
  CHECK(extremal_tail(full, 0, Sense::Min) == CFTail({}, W("2 1")));

  Automaton k = Automaton::blocks({W("1"), W("2 2")});
  CHECK(extremal_tail(k, 0, Sense::Max) == CFTail(W("1"), W("2")));
  CHECK(extremal_tail(k, 0, Sense::Min) == CFTail({}, W("2")));
  CHECK(k.boundary(0));
  CHECK_FALSE(k.boundary(*k.step(0, 2)));
  CHECK_FALSE(k.accepts(W("2 1")));
  CHECK(k.accepts(W("1 2 2 1 2")));
}

TEST_CASE("extremal tail avoiding 22 matches a depth-12 brute force") {
  ForbiddenSet F({W("22")});
  Automaton a = Automaton::factor(F);
  CFTail best = extremal_tail(a, 0, Sense::Max);
  CHECK(best == CFTail({}, W("1 2")));
  std::vector<long> top;
  oracle::Big top_value(300);
  mpfr_set_si(top_value.get(), -1, MPFR_RNDN);
  for (unsigned long b = 0; b < (1UL << 12); ++b) {
    DigitWord w = from_bits(b, 12);
    if (!F.admits(w)) continue;
    // Finite prefixes are compared by their midpoint with a 1,2,... continuation.
    std::vector<long> d(w.begin(), w.end());
    oracle::Big v = oracle::cf_fold(0, d, 300);
    if (oracle::less(top_value, v)) {
      top_value = v;
      top = d;
    }
  }
  for (std::size_t i = 0; i < 11; ++i) CHECK(top[i] == best.at(i));
}

TEST_CASE("extremal tails bound random continuations for P") {
  Automaton a = Automaton::factor(constants::forbidden_P());
  std::mt19937_64 rng(7);
  for (Automaton::State s = 0; s < a.size(); ++s) {
    if (!a.live(s)) {
      CHECK_THROWS_AS(extremal_tail(a, s, Sense::Min), DeadStateError);
      continue;
    }
    oracle::Big lo = tail_value(extremal_tail(a, s, Sense::Min));
    oracle::Big hi = tail_value(extremal_tail(a, s, Sense::Max));
    for (int t = 0; t < 500; ++t) {
      oracle::Big v = random_continuation(a, s, 200, rng);
      CHECK(oracle::gap(v, lo) > -1e-80);
      CHECK(oracle::gap(hi, v) > -1e-80);
    }
  }
}

TEST_CASE("extremal tails are admissible") {
  Automaton a = Automaton::factor(constants::forbidden_P());
  for (Sense s : {Sense::Min, Sense::Max})
    for (std::size_t parity : {1u, 2u}) {
      CFTail t = extremal_tail(a, 0, s, parity);
      DigitWord w = t.preperiod() + t.period().repeat(20);
      CHECK(a.accepts(w));
    }
}
