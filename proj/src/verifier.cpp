#include "spectra/verifier.hpp"

#include <fnmatch.h>
#include <time.h>

#include <sstream>

#include "spectra/constants.hpp"
#include "spectra/parallel.hpp"
#include "spectra/perron.hpp"
#include "spectra/subshift.hpp"

namespace spectra {

namespace {

double thread_cpu_ms() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) * 1e3 + static_cast<double>(ts.tv_nsec) / 1e6;
}

CFValue cf(const char* text) { return CFValue::parse(text); }

SurdSum anchor_value(Anchor a) {
  switch (a) {
    case Anchor::AlphaInf: return constants::alpha_inf().exact();
    case Anchor::Alpha2: return constants::alpha_n(2).exact();
    case Anchor::BInf: return constants::B_inf().exact();
  }
  return {};
}

std::string anchor_name(Anchor a) {
  switch (a) {
    case Anchor::AlphaInf: return "alpha_inf";
    case Anchor::Alpha2: return "alpha_2";
    case Anchor::BInf: return "B_inf";
  }
  return {};
}

std::string offset_text(const Rational& offset) {
  if (offset == 0) return {};
  return (offset > 0 ? " + " : " - ") + to_string(Rational(abs(offset)));
}

std::string exact_text(const SurdSum& s) {
  if (auto q = s.as_rational()) return to_string(*q);
  if (auto v = s.as_surd()) return v->to_string();
  return s.to_string();
}

// Splits "2 1 2* 1 2" into the digits after the mark and the digits before
// it read backwards.
std::pair<DigitWord, DigitWord> split_pattern(const std::string& pattern) {
  auto star = pattern.find('*');
  if (star == std::string::npos) throw ParseError("pattern has no marked digit", pattern.size());
  std::string before = pattern.substr(0, star);
  std::string after = pattern.substr(star + 1);
  auto trimmed = [](const std::string& s) {
    auto b = s.find_first_not_of(" ");
    return b == std::string::npos ? std::string() : s.substr(b, s.find_last_not_of(" ") - b + 1);
  };
  DigitWord left = DigitWord::parse(trimmed(before));
  if (left.empty()) throw ParseError("pattern has no marked digit", star);
  DigitWord forward = DigitWord::parse(trimmed(after));
  DigitWord backward = left.slice(0, left.size() - 1).transpose();
  return {forward, backward};
}

// Whether `bound` lies on the required side of [a0; known, x...] for every
// admissible continuation x.
bool bound_valid(const QuadSurd& bound, const Integer& a0, const DigitWord& known, bool lower, bool binary) {
  if (!binary) {
    ParityBounds p = parity_bounds(a0, known, DigitSet{1, std::nullopt});
    QuadSurd edge(lower ? p.lo : p.hi);
    auto c = surd_compare(bound, edge);
    return lower ? c <= 0 : c >= 0;
  }
  static const Automaton full = Automaton::factor(ForbiddenSet({}));
  CFTail tail = extremal_tail(full, full.initial(), lower ? Sense::Min : Sense::Max, known.size() + 1);
  QuadSurd edge = eval_periodic(a0, CFTail(known + tail.preperiod(), tail.period()));
  auto c = surd_compare(bound, edge);
  return lower ? c <= 0 : c >= 0;
}

CheckReport blank(std::string id) {
  CheckReport r;
  r.id = std::move(id);
  return r;
}

void fail(CheckReport& r, const std::string& why) {
  r.status = CheckStatus::Fail;
  r.note += (r.note.empty() ? "" : "; ") + why;
}

// Fills computed/decimal/margin for "value lies strictly inside the decimal
// prefix" and returns whether it does.
bool prefix_check(CheckReport& r, const SurdSum& value, const std::string& printed, long bits) {
  IntervalReal e = value.enclose(bits);
  r.computed = exact_text(value);
  r.decimal = e.certified_decimal(20);
  r.threshold = printed + "...";
  Rational d = parse_rational(printed);
  auto dot = printed.find('.');
  int k = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  SurdSum below = value - SurdSum(d);
  SurdSum above = SurdSum(d + pow10_neg(k)) - value;
  SurdSum m = compare(below, above) < 0 ? below : above;
  r.margin = m.enclose(bits);
  bool ok = below.sign() >= 0 && above.sign() > 0;
  if (!ok) fail(r, "value outside " + printed + "...");
  return ok;
}

CheckReport constant_report(const std::string& id, const SurdSum& value, const std::string& printed, long bits) {
  CheckReport r = blank(id);
  r.status = CheckStatus::Pass;
  prefix_check(r, value, printed, bits);
  return r;
}

void require(CheckReport& r, bool ok, const std::string& what) {
  if (!ok) fail(r, what);
  else r.note += (r.note.empty() ? "" : "; ") + what;
}

SurdSum min_of(const SurdSum& a, const SurdSum& b) { return compare(a, b) < 0 ? a : b; }

CheckReport markov_report(const std::string& id, const BiSeq& b, const SurdSum& expected, long bits) {
  CheckReport r = blank(id);
  r.status = CheckStatus::Pass;
  MarkovResult m = markov_value(b, bits);
  r.computed = exact_text(m.exact);
  r.decimal = m.value.certified_decimal(20);
  r.threshold = "lambda_0 = " + exact_text(expected);
  r.margin = m.certificate.runner_up_margin;
  require(r, m.kind == SupKind::Attained && m.witness == 0L, "witness 0");
  require(r, m.exact == expected, "exact value");
  require(r, m.certificate.runner_up_margin && m.certificate.runner_up_margin->lo() > 0, "unique maximum");
  r.note += "; " + std::to_string(m.certificate.positions_evaluated) + " positions";
  return r;
}

std::vector<LedgerItem> build_ledger() {
  std::vector<LedgerItem> items;
  for (const PatternCheck& p : pattern_checks())
    items.push_back({p.id, [&p](long bits) { return run_pattern_check(p, bits); }});
  for (int a = 1; a <= 4; ++a)
    items.push_back({"BPa." + std::to_string(a), [a](long bits) { return verify_family(Family::Pa, a, bits); }});
  for (int a = 1; a <= 4; ++a)
    items.push_back({"BTa." + std::to_string(a), [a](long bits) { return verify_family(Family::Ta, a, bits); }});

  namespace k = constants;
  auto add = [&](std::string id, std::function<CheckReport(long)> run) { items.push_back({std::move(id), std::move(run)}); };

  add("C.b_inf", [](long bits) {
    CheckReport r = constant_report("C.b_inf", k::b_inf().exact(), "3.2930442439", bits);
    LagrangeResult l = lagrange_value(DigitWord::parse("2 1_2 2_3 1"), bits);
    require(r, l.exact == k::b_inf().exact(), "l of the periodic word 2 1_2 2_3 1");
    return r;
  });
  add("C.B_inf", [](long bits) {
    CheckReport r = constant_report("C.B_inf", k::B_inf().exact(), "3.293044481438", bits);
    require(r, k::B_inf().exact().enclose(bits).matches_decimal_prefix("3.2930444814"), "prefix 3.2930444814");
    return r;
  });
  add("C.alpha_inf", [](long bits) { return constant_report("C.alpha_inf", k::alpha_inf().exact(), "3.293", bits); });
  add("C.alpha_4", [](long bits) { return constant_report("C.alpha_4", k::alpha_n(4).exact(), "3.29304427", bits); });
  add("C.alpha_2", [](long bits) { return constant_report("C.alpha_2", k::alpha_n(2).exact(), "3.2930444886", bits); });
  add("C.c", [](long bits) {
    CheckReport r = constant_report("C.c", k::c().exact(), "3.29304447990138", bits);
    require(r, k::c().forward == k::c_closed_first(), "first summand (77+sqrt(18229))/82");
    require(r, k::c().backward == k::c_closed_second(), "second summand (17633692-sqrt(151905))/24923467");
    return r;
  });
  add("C.gamma", [](long bits) {
    CheckReport r = constant_report("C.gamma", k::gamma().exact(), "3.29304426427375", bits);
    require(r, k::gamma().forward == k::c_closed_first(), "first summand (77+sqrt(18229))/82");
    require(r, k::gamma().backward == k::gamma_closed_second(), "second summand (7219908-18sqrt(82))/10204619");
    return r;
  });
  add("C.ratio", [](long bits) {
    CheckReport r = blank("C.ratio");
    SurdSum ai = k::alpha_inf().exact();
    IntervalReal num = (k::c().exact() - ai).enclose(bits);
    IntervalReal den = (k::alpha_n(4).exact() - ai).enclose(bits);
    IntervalReal q = num / den;
    Rational lo = parse_rational("32.57"), hi = parse_rational("32.59");
    r.computed = "(c - alpha_inf)/(alpha_4 - alpha_inf)";
    r.decimal = q.certified_decimal(6);
    r.threshold = "32.58 +- 0.01";
    IntervalReal below = q - IntervalReal::point(lo);
    IntervalReal above = IntervalReal::point(hi) - q;
    r.margin = below.lo() < above.lo() ? below : above;
    r.status = q.lo() > lo && q.hi() < hi ? CheckStatus::Pass : CheckStatus::Fail;
    return r;
  });
  add("C.berstein.lower", [](long bits) {
    CheckReport r = constant_report("C.berstein.lower", k::gamma().exact(), "3.2930442642", bits);
    r.note = "lower end of the interval; equal to gamma";
    return r;
  });
  add("C.berstein.guess", [](long bits) {
    CheckReport r = constant_report("C.berstein.guess", k::berstein_guess().exact(), "3.293044481451", bits);
    require(r, (k::berstein_guess().exact() - k::B_inf().exact()).sign() > 0, "above B_inf");
    return r;
  });
  add("C.berstein.claim", [](long bits) {
    return constant_report("C.berstein.claim", k::berstein_claim().exact(), "3.29306183", bits);
  });
  add("C.c_F", [](long bits) { return constant_report("C.c_F", SurdSum(k::freiman()), "4.5278", bits); });

  add("E.G.witness", [](long bits) { return markov_report("E.G.witness", k::G(), k::c().exact(), bits); });
  add("E.g.witness", [](long bits) { return markov_report("E.g.witness", k::g(), k::gamma().exact(), bits); });
  add("E.G.lambda_minus7", [](long bits) {
    CheckReport r = blank("E.G.lambda_minus7");
    LambdaValue v = lambda_at(k::G(), -7, bits);
    SurdSum threshold = k::alpha_inf().exact() - SurdSum(pow10_neg(5));
    SurdSum m = threshold - v.exact;
    r.computed = exact_text(v.exact);
    r.decimal = v.enclosure.certified_decimal(20);
    r.threshold = "< alpha_inf - 1/100000";
    r.margin = m.enclose(bits);
    r.status = m.sign() > 0 ? CheckStatus::Pass : CheckStatus::Fail;
    return r;
  });
  add("E.ml.alpha_inf", [](long bits) {
    CheckReport r = blank("E.ml.alpha_inf");
    r.status = CheckStatus::Pass;
    MlMemberCertificate c = build_ml_member(CFTail({}, DigitWord{2}), bits);
    r.computed = exact_text(c.markov.exact);
    r.decimal = c.markov.value.certified_decimal(20);
    r.threshold = "m = alpha_inf";
    r.margin = c.markov.certificate.runner_up_margin;
    require(r, c.markov.kind == SupKind::Attained && c.markov.witness == 0L, "witness 0");
    require(r, c.markov.exact == k::alpha_inf().exact(), "exact value");
    require(r, c.inside_target, "within 1e-8 of alpha_inf");
    return r;
  });
  add("E.order", [](long bits) {
    CheckReport r = blank("E.order");
    std::vector<std::pair<std::string, SurdSum>> chain = {
        {"b_inf", k::b_inf().exact()},         {"gamma", k::gamma().exact()}, {"alpha_inf", k::alpha_inf().exact()},
        {"alpha_4", k::alpha_n(4).exact()},    {"c", k::c().exact()},         {"B_inf", k::B_inf().exact()},
        {"alpha_2", k::alpha_n(2).exact()}};
    r.status = CheckStatus::Pass;
    std::optional<SurdSum> smallest;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      SurdSum gap = chain[i + 1].second - chain[i].second;
      if (gap.sign() <= 0) fail(r, chain[i].first + " >= " + chain[i + 1].first);
      smallest = smallest ? min_of(*smallest, gap) : gap;
    }
    for (std::size_t i = 0; i < chain.size(); ++i) r.threshold += (i ? " < " : "") + chain[i].first;
    r.computed = "ordered chain";
    r.margin = smallest->enclose(bits);
    return r;
  });
  return items;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Info: return "info";
  }
  return "?";
}

std::string CheckReport::margin_decimal(int digits) const {
  if (!margin) return {};
  mpf_class x(margin->lo(), 256);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fe", digits - 1, x.get_mpf_t());
  return buf.data();
}

const std::vector<PatternCheck>& pattern_checks() {
  static const std::vector<PatternCheck> checks = [] {
    using R = Relation;
    using A = Anchor;
    auto q = [](const char* s) { return parse_rational(s); };
    std::vector<PatternCheck> c = {
        {"L1.i", "2 1 2* 1 2", R::Greater, A::AlphaInf, q("1e-2"), true, cf("2;1 2"), cf("0;1 2"), q("10/3"), {}},
        {"L1.ii", "2 1 2* 1_3", R::Greater, A::AlphaInf, q("1e-3"), true, cf("2;1_4"), cf("0;1 2_2 1"), q("33/10"), {}},
        {"L1.iii", "1 2 1 2* 1_2", R::Greater, A::AlphaInf, q("1e-3"), true, cf("2;1_2 2 1 2 1"), cf("0;1 2 1_2 2 1"),
         q("2143/650"), {}},
        {"L1.iv", "2_3 1 2* 1_2 2_2 1", R::Greater, A::AlphaInf, q("1e-4"), true, cf("2;1_2 2_2 1_2 2 1"),
         cf("0;1 2_4 1"), q("9933/3016"), {}},
        {"L1.v", "2 1 2_3 1 2* 1_2 2_3", R::Greater, A::AlphaInf, q("1e-5"), true, cf("2;1_2 2_3 1"),
         cf("0;1 2_3 1 2"), q("8776/2665"), {}},
        {"L1.vi", "1_2 2_3 1 2* 1_2 2_4", R::Greater, A::AlphaInf, q("1e-4"), true, cf("2;1_2 2_5 1"),
         cf("0;1 2_3 1_2 2 1"), q("115702/35133"), {}},
        {"L1.vii", "1_2 2_3 1 2* 1_2 2_3 1_2", R::Greater, A::AlphaInf, q("1e-5"), true, cf("2;1_2 2_3 1_3 2 1"),
         cf("0;1 2_3 1_2 2 1"), q("195086/59241"), {}},
        {"L1.viii", "1_3 2_3 1 2* 1_2 2_3 1 2", R::Greater, A::AlphaInf, q("1e-5"), true, cf("2;1_2 2_3 1 2 1"),
         cf("0;1 2_3 1_4"), q("26529/8056"), {}},
        {"L1.ix", "2 1_2 2_3 1 2* 1_2 2_3 1 2_2", R::Greater, A::AlphaInf, q("1e-6"), true,
         cf("2;1_2 2_3 1 2_3 1"), cf("0;1 2_3 1_2 2 1 2 1"), q("1621169/492300"), {}},
        {"L1.x", "2_2 1_2 2_3 1 2* 1_2 2_3 1 2 1", R::Greater, A::AlphaInf, q("1e-6"), true,
         cf("2;1_2 2_3 1 2 1 2 1"), cf("0;1 2_3 1_2 2_3 1"), q("1615094/490455"), {}},
        {"L1.xi", "1_2 2 1_2 2_3 1 2* 1_2 2_3 1 2 1_2 2", R::Greater, A::AlphaInf, q("1e-6"), true,
         cf("2;1_2 2_3 1 2 1_2 2"), cf("0;1 2_3 1_2 2 1_2 1"), q("446537/135600"), {}},
        {"L2.a", "1*", R::Less, A::AlphaInf, q("-1e-1"), true, cf("1;1"), cf("0;1"), q("3"), {}},
        {"L2.b", "2 2*", R::Less, A::AlphaInf, q("-1e-1"), true, cf("2;1 2 1"), cf("0;2 2 1"), q("89/28"), {}},
        {"L2.c", "1_2 2* 1_2", R::Less, A::AlphaInf, q("-1e-2"), true, cf("2;1_3 2 1"), cf("0;1_3 2 1"), q("36/11"),
         {}},
        {"L2.d", "2_2 1 2* 1_2 2 1", R::Less, A::AlphaInf, q("-1e-3"), true, cf("2;1_2 2 1_2 2 1"),
         cf("0;1 2_3 1"), q("3395/1032"), {}},
        {"L2.e", "1 2_2 1 2* 1_2 2", R::Less, A::AlphaInf, q("-1e-4"), true, cf("2;1_2 2_2 1 2 1"),
         cf("0;1 2_2 1_2 2 1 2 1"), q("47081/14301"), {}},
        {"L2.f", "2_4 1 2* 1_2 2_3", R::Less, A::AlphaInf, q("-1e-5"), true, cf("2;1_2 2_4 1"), cf("0;1 2_5 1"),
         q("45641/13860"), {}},
        {"Lxii.prime", "1 2 1 2_2 1 2 1_2 2_3 1 2* 1_2 2_3 1 2 1_2 2_3 1 2 1_2 2", R::Greater, A::BInf, q("6e-9"),
         true, cf("2;1_2 2_3 1 2 1_2 2_3 1 2 1_2 2 | (1 2)*"), cf("0;1 2_3 1_2 2 1 2_2 1 2 1 | (1 2)*"), {}, {}},
        {"Lxii.dprime", "2_2 1 2_2 1 2 1_2 2_3 1 2* 1_2 2_3 1 2 1_2 2_3 1 2 1_2 2", R::Less, A::BInf, q("-1e-9"),
         true, cf("2;1_2 2_3 1 2 1_2 2_3 1 2 1_2 2 | (2 1)*"), cf("0;1 2_3 1_2 2 1 2_2 1 2_2 | (2 1)*"), {}, {}},
        {"B2", "2_3 1 2 1_2 2_3 1 2* 1_2 2_3 1 2 1_2 2_2", R::Less, A::Alpha2, q("-3e-8"), false,
         cf("2;1_2 2_3 1 2 1_2 2_2"), cf("0;1 2_3 1_2 2 1 2_3"), q("12230321/3713986"), "3.2930444541"},
        {"B3", "1 2 1_2 2_3 1 2 1_2 2_3 1 2* 1_2 2_3 1 2 1_2 2 1_2 2 1 2_3 1 2", R::Less, A::Alpha2, q("-6e-9"),
         false, cf("2;1_2 2_3 1 2 1_2 2 1_2 2 1 2_3 1 2"), cf("0;1 2_3 1_2 2 1 2_3 1_2 2 1"),
         q("22619524795/6868879214"), "3.2930444822"},
    };
    return c;
  }();
  return checks;
}

CheckReport run_pattern_check(const PatternCheck& check, long bits) {
  CheckReport r = blank(check.id);
  r.status = CheckStatus::Pass;
  bool lower = check.relation == Relation::Greater;
  SurdSum bound = SurdSum(check.forward.value()) + SurdSum(check.backward.value());
  SurdSum threshold = anchor_value(check.anchor) + SurdSum(check.offset);
  SurdSum margin = lower ? bound - threshold : threshold - bound;

  r.computed = exact_text(bound);
  r.decimal = bound.enclose(bits).certified_decimal(20);
  r.threshold = (lower ? "> " : "< ") + anchor_name(check.anchor) + offset_text(check.offset);
  r.margin = margin.enclose(bits);
  if (margin.sign() <= 0) fail(r, "threshold not met");

  if (check.expected && bound != SurdSum(*check.expected))
    fail(r, "bound is not " + to_string(*check.expected));
  if (check.printed && !bound.enclose(bits).matches_decimal_prefix(*check.printed))
    fail(r, "bound does not start with " + *check.printed);

  auto [after, before] = split_pattern(check.pattern);
  Integer a0 = check.forward.a0;
  DigitWord marked = DigitWord::parse(check.pattern.substr(0, check.pattern.find('*')));
  if (a0 != marked[marked.size() - 1]) fail(r, "integer part differs from the marked digit");
  if (check.backward.a0 != 0) fail(r, "backward expansion must start with 0");
  if (!bound_valid(check.forward.value(), a0, after, lower, check.binary))
    fail(r, "forward expansion is not a bound");
  if (!bound_valid(check.backward.value(), 0, before, lower, check.binary))
    fail(r, "backward expansion is not a bound");
  return r;
}

DigitWord family_word(Family which, int a) {
  if (a < 1) throw std::invalid_argument("family index must be positive");
  auto n = static_cast<std::size_t>(a);
  auto W = [](const char* s) { return DigitWord::parse(s); };
  if (which == Family::Pa) {
    DigitWord q = W("2 1_2 2 1_2 2 1 2_3 1").repeat(n);
    DigitWord r = W("2_2 1 2 1_2 2_3 1 2 1_2 2_3 1 2 1");
    DigitWord s = W("1 2_3 1 2 1_2 2 1_2 2").repeat(n) + W("1 2_3 1");
    DigitWord p = q + r + s;
    if (p.size() != 24 * n + 24)
      throw ConstructionError("P_" + std::to_string(a) + " has length " + std::to_string(p.size()));
    return p;
  }
  DigitWord u = W("2 1 2_3 1 2 1_2 2 1_2 2 1 2_3 1_2 2 1") + W("2_3 1_2 2 1").repeat(n);
  DigitWord v = W("2_3 1_2 2 1 2_3 1_2 2 1 2_2 1 2 1_2 2_3 1 2");
  DigitWord w = W("1_2 2_3 1 2").repeat(n) + W("1_2 2_3 1 2 1_2 2_3 1 2 1_2 2 1_2 2 1 2_3 1 2");
  DigitWord t = u + v + w;
  if (t.size() != 14 * n + 72)
    throw ConstructionError("T_" + std::to_string(a) + " has length " + std::to_string(t.size()));
  return t;
}

CheckReport verify_family(Family which, int a, long bits) {
  DigitWord word = family_word(which, a);
  LagrangeResult l = lagrange_value(word, bits);
  CheckReport r = blank((which == Family::Pa ? "BPa." : "BTa.") + std::to_string(a));
  r.status = CheckStatus::Pass;
  r.computed = exact_text(l.exact);
  r.decimal = l.value.certified_decimal(20);
  std::string at = "max at offset " + std::to_string(l.witness) + " of " + std::to_string(word.size());

  if (which == Family::Pa) {
    SurdSum b = constants::B_inf().exact();
    long e = 12L * a - 1;
    SurdSum below = l.exact - b;
    SurdSum above = b + SurdSum(pow2_neg(e)) - l.exact;
    r.threshold = "B_inf < l < B_inf + 2^-" + std::to_string(e);
    r.margin = min_of(below, above).enclose(bits);
    if (below.sign() <= 0) fail(r, "not above B_inf");
    if (above.sign() <= 0) fail(r, "not below B_inf + 2^-" + std::to_string(e));
    if (l.witness != 12 * static_cast<std::size_t>(a) + 17) fail(r, "maximum not at the marked digit");
    r.note += (r.note.empty() ? "" : "; ") + at;
    return r;
  }

  SurdSum d = l.exact - constants::alpha_n(2).exact();
  SurdSum dist = d.sign() < 0 ? -d : d;
  long e = 7L * a;
  SurdSum slack = SurdSum(pow2_neg(e)) - dist;
  r.threshold = "|l - alpha_2| < 2^-" + std::to_string(e);
  r.margin = slack.enclose(bits);
  std::size_t u = 21 + 7 * static_cast<std::size_t>(a);
  bool marked = l.witness == u + 5 || l.witness == u + 24;
  if (a < 4) {
    r.status = CheckStatus::Info;
    r.note = std::string(slack.sign() > 0 ? "bound holds" : "bound not yet reached") + "; " + at;
    return r;
  }
  if (slack.sign() <= 0) fail(r, "too far from alpha_2");
  if (!marked) fail(r, "maximum not at a marked digit");
  r.note += (r.note.empty() ? "" : "; ") + at;
  return r;
}

const std::vector<LedgerItem>& ledger() {
  static const std::vector<LedgerItem> items = build_ledger();
  return items;
}

bool matches_any(const std::string& id, const std::string& patterns) {
  std::istringstream in(patterns);
  std::string glob;
  while (in >> glob) {
    std::string::size_type start = 0;
    while (start <= glob.size()) {
      auto comma = glob.find(',', start);
      std::string one = glob.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!one.empty() && fnmatch(one.c_str(), id.c_str(), 0) == 0) return true;
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return false;
}

std::vector<CheckReport> run_ledger(const std::string& only, long bits) {
  std::vector<const LedgerItem*> chosen;
  for (const LedgerItem& item : ledger())
    if (only.empty() || matches_any(item.id, only)) chosen.push_back(&item);
  std::vector<CheckReport> out(chosen.size());
  parallel_for(chosen.size(), [&](std::size_t i) {
    double start = thread_cpu_ms();
    try {
      out[i] = chosen[i]->run(bits);
    } catch (const std::exception& e) {
      out[i] = blank(chosen[i]->id);
      out[i].status = CheckStatus::Fail;
      out[i].note = e.what();
    }
    out[i].id = chosen[i]->id;
    out[i].cpu_ms = thread_cpu_ms() - start;
  });
  return out;
}

std::vector<CheckReport> verify_constants(long bits) { return run_ledger("C.*", bits); }

std::vector<CheckReport> verify_extremes(long bits) { return run_ledger("E.*", bits); }

}  // namespace spectra
