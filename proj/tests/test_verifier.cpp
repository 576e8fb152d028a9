#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracle.hpp"
#include "spectra/constants.hpp"
#include "spectra/errors.hpp"
#include "spectra/parallel.hpp"
#include "spectra/perron.hpp"
#include "spectra/verifier.hpp"

using namespace spectra;

namespace {

const PatternCheck& find(const std::string& id) {
  for (const auto& c : pattern_checks())
    if (c.id == id) return c;
  FAIL("no check " << id);
  throw;
}

// Sum of two expansions in MPFR.
double oracle_sum(const CFValue& f, const CFValue& b) {
  auto part = [](const CFValue& v) {
    std::vector<long> pre(v.head.begin(), v.head.end());
    if (!v.period) return oracle::cf_fold(v.a0.get_si(), pre, 200);
    std::vector<long> per(v.period->begin(), v.period->end());
    return oracle::cf_periodic(v.a0.get_si(), pre, per, 200);
  };
  oracle::Big x = part(f);
  oracle::Big y = part(b);
  mpfr_add(x.get(), x.get(), y.get(), MPFR_RNDN);
  return mpfr_get_d(x.get(), MPFR_RNDN);
}

}  // namespace

TEST_CASE("pattern bounds reproduce their fractions") {
  std::size_t fractions = 0;
  for (const auto& c : pattern_checks()) {
    CAPTURE(c.id);
    if (!c.expected) continue;
    ++fractions;
    SurdSum bound = SurdSum(c.forward.value()) + SurdSum(c.backward.value());
    CHECK(bound == SurdSum(*c.expected));
    CHECK(std::abs(oracle_sum(c.forward, c.backward) - c.expected->get_d()) < 1e-14);
  }
  CHECK(fractions == 19);
}

TEST_CASE("every pattern check passes") {
  for (const auto& c : pattern_checks()) {
    CAPTURE(c.id);
    CheckReport r = run_pattern_check(c);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.margin);
    CHECK(r.margin->lo() > 0);
    INFO(r.note);
  }
}

TEST_CASE("pattern check values") {
  CHECK(run_pattern_check(find("L1.i")).computed == "10/3");
  CHECK(run_pattern_check(find("B2")).decimal.rfind("3.2930444541", 0) == 0);
  CHECK(run_pattern_check(find("B3")).decimal.rfind("3.2930444822", 0) == 0);
  // Lxii bounds are irrational and compared exactly.
  CheckReport p = run_pattern_check(find("Lxii.prime"));
  CHECK(p.computed.find("sqrt") != std::string::npos);
  CHECK(p.margin->hi() < parse_rational("1e-9"));
}

TEST_CASE("a wrong pattern bound is rejected") {
  PatternCheck c = find("L1.i");
  c.forward = CFValue::parse("2;1 1");
  CheckReport r = run_pattern_check(c);
  CHECK(r.status == CheckStatus::Fail);

  PatternCheck d = find("L2.c");
  d.backward = CFValue::parse("0;1_4");
  CHECK(run_pattern_check(d).status == CheckStatus::Fail);

  PatternCheck e = find("L1.ii");
  e.offset = parse_rational("1e-1");
  CHECK(run_pattern_check(e).status == CheckStatus::Fail);
}

TEST_CASE("family words") {
  for (int a = 1; a <= 6; ++a) {
    CHECK(family_word(Family::Pa, a).size() == 24u * a + 24);
    CHECK(family_word(Family::Ta, a).size() == 14u * a + 72);
  }
  DigitWord p1 = family_word(Family::Pa, 1);
  CHECK(p1[29] == 2);
  CHECK_THROWS_AS(family_word(Family::Pa, 0), std::invalid_argument);
}

TEST_CASE("family bounds") {
  for (int a = 1; a <= 4; ++a) {
    CAPTURE(a);
    CheckReport p = verify_family(Family::Pa, a);
    INFO(p.note);
    CHECK(p.status == CheckStatus::Pass);
  }
  CheckReport t = verify_family(Family::Ta, 4);
  INFO(t.note);
  CHECK(t.status == CheckStatus::Pass);
  CHECK(verify_family(Family::Ta, 1).status == CheckStatus::Info);
}

TEST_CASE("constants and extremes") {
  for (const auto& r : verify_constants()) {
    CAPTURE(r.id);
    INFO(r.note);
    CHECK(r.status == CheckStatus::Pass);
  }
  for (const auto& r : verify_extremes()) {
    CAPTURE(r.id);
    INFO(r.note);
    CHECK(r.status == CheckStatus::Pass);
  }
}

TEST_CASE("ledger selection") {
  std::set<std::string> ids;
  for (const auto& item : ledger()) CHECK(ids.insert(item.id).second);
  std::size_t l1 = 0;
  for (const auto& item : ledger()) l1 += matches_any(item.id, "L1.*");
  CHECK(l1 == 11);
  CHECK(matches_any("BPa.3", "C.* BPa.*"));
  CHECK(matches_any("E.order", "L1.i,E.*"));
  CHECK_FALSE(matches_any("L1.ii", "L1.i"));
  CHECK(run_ledger("L2.*").size() == 6);
  CHECK(run_ledger("nothing").empty());
}

TEST_CASE("reports do not depend on the thread count") {
  auto strip = [](std::vector<CheckReport> v) {
    std::vector<std::string> out;
    for (auto& r : v) out.push_back(r.id + to_string(r.status) + r.computed + r.decimal + r.margin_decimal() + r.note);
    return out;
  };
  set_thread_count(1);
  auto one = strip(run_ledger("L* B2 B3 C.*"));
  set_thread_count(4);
  auto four = strip(run_ledger("L* B2 B3 C.*"));
  set_thread_count(0);
  CHECK(one == four);
}

TEST_CASE("margin formatting") {
  CheckReport r;
  CHECK(r.margin_decimal().empty());
  r.margin = IntervalReal(parse_rational("0.00125"), parse_rational("0.0013"));
  CHECK(r.margin_decimal(3) == "1.25e-03");
}
