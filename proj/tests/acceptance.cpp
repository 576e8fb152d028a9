// One line per acceptance criterion.  Exit status is nonzero when any gating
// criterion fails; criterion 8 is reported but does not gate.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spectra/constants.hpp"
#include "spectra/dimension.hpp"
#include "spectra/perron.hpp"
#include "spectra/subshift.hpp"
#include "spectra/verifier.hpp"

using namespace spectra;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x, int prec = 2) {
  std::ostringstream s;
  s.precision(prec);
  s << std::fixed << x;
  return s.str();
}

const Rational& tol6() {
  static const Rational t(1, 1000000);
  return t;
}

CantorSpec K122() { return CantorSpec::from_blocks({DigitWord{1}, DigitWord{2, 2}}, "K({1, 2_2})"); }

Outcome golden_fractions() {
  auto t0 = std::chrono::steady_clock::now();
  auto reports = run_ledger("L1.* L2.* B2 B3");
  double secs = seconds_since(t0);
  const std::set<std::string> printed = {
      "10/3",         "33/10",          "2143/650",       "9933/3016",     "8776/2665",
      "115702/35133", "195086/59241",   "26529/8056",     "1621169/492300", "1615094/490455",
      "446537/135600", "89/28",         "36/11",          "3395/1032",      "47081/14301",
      "45641/13860",  "12230321/3713986", "22619524795/6868879214"};
  std::set<std::string> seen;
  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.status == CheckStatus::Pass && r.margin && r.margin->lo() > 0;
    if (printed.count(r.computed)) seen.insert(r.computed);
  }
  bool ok = all_pass && seen.size() == printed.size() && secs < 5;
  return {ok, std::to_string(seen.size()) + "/18 fractions exact, " + std::to_string(reports.size()) +
                  " inequalities " + (all_pass ? "pass" : "FAIL") + ", " + fmt(secs) + " s"};
}

Outcome constants_match() {
  auto t0 = std::chrono::steady_clock::now();
  auto reports = run_ledger("C.b_inf C.B_inf C.alpha_inf C.alpha_2 C.alpha_4 C.c C.gamma C.ratio");
  double secs = seconds_since(t0);
  std::size_t passed = 0;
  std::string failed;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::Pass) ++passed;
    else failed += " " + r.id;
  }
  bool ok = passed == 8 && reports.size() == 8 && secs < 5;
  return {ok, std::to_string(passed) + "/8 (prefixes, closed surd forms, ratio 32.58 +- 0.01)" +
                  (failed.empty() ? "" : ", failed:" + failed) + ", " + fmt(secs) + " s"};
}

Outcome dimension_bracket() {
  auto t0 = std::chrono::steady_clock::now();
  DimensionBracket r = palis_takens_bounds(K122(), 12, tol6(), 256);
  double secs = seconds_since(t0);
  Rational a_lo = parse_rational("0.353465"), a_hi = parse_rational("0.353466");
  Rational b_lo = parse_rational("0.357917"), b_hi = parse_rational("0.357918");
  bool alpha_ok = r.alpha >= a_lo && r.alpha < a_hi;
  bool beta_ok = r.beta > b_lo && r.beta <= b_hi;
  bool headline = r.alpha > parse_rational("0.353") && r.beta < parse_rational("0.35792");
  std::string detail = "alpha_12 = " + truncated_decimal(r.alpha, 6) + (alpha_ok ? " in" : " NOT in") +
                       " [0.353465, 0.353466), beta_12 = " + truncated_decimal(r.beta, 6) +
                       (beta_ok ? " in" : " NOT in") + " (0.357917, 0.357918], 0.353 < alpha, beta < 0.35792 " +
                       (headline ? "hold" : "FAIL") + ", " + fmt(secs) + " s";
  return {alpha_ok && beta_ok && headline && secs < 60, detail};
}

Outcome bracket_coherence() {
  std::vector<DimensionBracket> b;
  for (std::size_t n = 2; n <= 12; n += 2) b.push_back(palis_takens_bounds(K122(), n, tol6()));
  std::size_t good = 0, total = 0;
  for (const auto& x : b)
    for (const auto& y : b) {
      ++total;
      good += x.alpha <= y.beta;
    }
  return {good == 36 && total == 36, std::to_string(good) + "/" + std::to_string(total) + " comparisons alpha_n <= beta_m"};
}

Outcome word_families() {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  for (int a = 1; a <= 3; ++a) {
    CheckReport r = verify_family(Family::Pa, a);
    ok = ok && r.status == CheckStatus::Pass;
    detail += "P_" + std::to_string(a) + " " + to_string(r.status) + ", ";
  }
  CheckReport t = verify_family(Family::Ta, 4);
  ok = ok && t.status == CheckStatus::Pass;
  double secs = seconds_since(t0);
  detail += "T_4 " + to_string(t.status) + " (margin " + t.margin_decimal(3) + "), " + fmt(secs) + " s";
  return {ok && secs < 30, detail};
}

Outcome spectra_witnesses() {
  MarkovResult G = markov_value(constants::G(), 256);
  MarkovResult g = markov_value(constants::g(), 256);
  MarkovResult two = markov_value(BiSeq::periodic(DigitWord{2}), 256);
  bool G_ok = G.witness == 0L && G.value.matches_decimal_prefix("3.293044479901");
  bool g_ok = g.witness == 0L && g.value.matches_decimal_prefix("3.293044264273");
  bool two_ok = two.exact == SurdSum(QuadSurd::sqrt(8));
  return {G_ok && g_ok && two_ok, std::string("m(G) ") + (G_ok ? "witness 0, c to 12 decimals" : "FAIL") +
                                      ", m(g) " + (g_ok ? "witness 0, gamma to 12 decimals" : "FAIL") +
                                      ", m(all 2s) " + (two_ok ? "= sqrt(8)" : "FAIL")};
}

Outcome subshift_counts() {
  auto t0 = std::chrono::steady_clock::now();
  ForbiddenSet P = constants::forbidden_P();
  bool agree = true;
  std::vector<Integer> counts;
  for (std::size_t n = 1; n <= 16; ++n) {
    std::size_t brute = 0;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      std::vector<Digit> d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = (mask >> i) & 1 ? 2 : 1;
      brute += P.admits(DigitWord(std::move(d)));
    }
    Integer c = count_admissible(P, n);
    counts.push_back(c);
    agree = agree && c == brute;
  }
  double secs = seconds_since(t0);
  bool known = counts[0] == 2 && counts[4] == 31 && counts[5] == 56;
  return {agree && known && secs < 10, std::string("n <= 16 ") + (agree ? "agree" : "DISAGREE") + " with brute force, counts " +
                                           counts[0].get_str() + ", " + counts[4].get_str() + ", " + counts[5].get_str() +
                                           " at n = 1, 5, 6, " + fmt(secs) + " s"};
}

Outcome pressure_roots() {
  DimensionBracket r = palis_takens_bounds(K122(), 12, tol6());
  double lo = r.alpha.get_d(), hi = r.beta.get_d();
  const std::vector<std::pair<std::size_t, const char*>> reported = {{4, "0.355052"}, {6, "0.35540064"}, {12, "0.3553986"}};
  bool inside = true;
  std::string detail;
  for (std::size_t n = 4; n <= 12; n += 2) {
    double s = pressure_root(K122(), n).value;
    inside = inside && s >= lo && s <= hi;
    detail += "s_" + std::to_string(n) + "=" + fmt(s, 8);
    for (const auto& [m, text] : reported)
      if (m == n) detail += std::string(" (printed ") + text + ")";
    detail += " ";
  }
  return {inside, detail + (inside ? "all inside [alpha_12, beta_12]" : "NOT all inside [alpha_12, beta_12]")};
}

Outcome ml_members() {
  ForbiddenSet P = constants::forbidden_P();
  Automaton a = Automaton::factor(P);
  std::mt19937_64 rng(20240601);
  std::set<std::string> values;
  std::size_t certified = 0, attempts = 0, failures = 0;
  while (values.size() < 100 && attempts < 2000) {
    ++attempts;
    auto state = a.run(a.initial(), DigitWord{2, 2, 2});
    DigitWord prefix;
    std::size_t length = std::uniform_int_distribution<std::size_t>(0, 24)(rng);
    for (std::size_t i = 0; i < length; ++i) {
      std::vector<std::pair<Digit, Automaton::State>> options;
      for (Digit d = 1; d <= 2; ++d)
        if (auto next = a.step(*state, d); next && a.live(*next)) options.emplace_back(d, *next);
      auto pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      prefix.push_back(pick.first);
      state = pick.second;
    }
    Sense sense = rng() % 2 ? Sense::Max : Sense::Min;
    CFTail tail = extremal_tail(a, *state, sense, 1 + rng() % 2);
    CFTail gamma(prefix + tail.preperiod(), tail.period());
    try {
      MlMemberCertificate c = build_ml_member(gamma, 256);
      bool ok = c.inside_target && c.markov.kind == SupKind::Attained && c.markov.witness == 0L &&
                c.markov.certificate.runner_up_margin && c.markov.certificate.runner_up_margin->lo() >= 0;
      if (!ok) {
        ++failures;
        continue;
      }
      if (values.insert(c.markov.exact.to_string()).second) ++certified;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  return {certified >= 100, std::to_string(certified) + " distinct certified points in (alpha_inf - 1e-8, alpha_inf + 1e-8) from " +
                                std::to_string(attempts) + " random admissible tails (" + std::to_string(failures) +
                                " uncertified)"};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    bool gating;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden fractions", true, golden_fractions},
      {2, "constants", true, constants_match},
      {3, "dimension bracket", true, dimension_bracket},
      {4, "bracket coherence", true, bracket_coherence},
      {5, "word families", true, word_families},
      {6, "spectra witnesses", true, spectra_witnesses},
      {7, "subshift counts", true, subshift_counts},
      {8, "heuristic pressure (soft)", false, pressure_roots},
      {9, "Markov spectrum members", true, ml_members},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const char* status = o.pass ? "PASS" : (c.gating ? "FAIL" : "SOFT-FAIL");
    std::printf("criterion %d %-28s %-9s %s\n", c.number, c.title, status, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass && c.gating) ++failed;
  }
  std::printf("%d gating criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
