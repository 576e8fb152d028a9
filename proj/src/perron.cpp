#include "spectra/perron.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "spectra/constants.hpp"
#include "spectra/errors.hpp"
#include "spectra/parallel.hpp"
#include "spectra/subshift.hpp"

namespace spectra {

namespace {

long floor_mod(long a, long m) { return ((a % m) + m) % m; }

long ceil_div(long a, long m) { return (a + m - 1) / m; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

DigitWord parse_part(std::string_view text, std::size_t offset) {
  try {
    return DigitWord::parse(trim(text));
  } catch (const ParseError& e) {
    throw ParseError(std::string("bad digit word '") + trim(text) + "'", offset + e.position());
  }
}

}  // namespace

BiSeq::BiSeq(DigitWord left_period, DigitWord left_junction, DigitWord center, std::size_t origin,
             DigitWord right_junction, DigitWord right_period)
    : left_period_(std::move(left_period)),
      left_junction_(std::move(left_junction)),
      center_(std::move(center)),
      right_junction_(std::move(right_junction)),
      right_period_(std::move(right_period)),
      origin_(origin) {
  if (left_period_.empty() || right_period_.empty()) throw ParseError("periods must be non-empty", 0);
  if (origin_ >= center_.size()) throw ParseError("origin outside the center word", 0);
  left_boundary_ = -static_cast<long>(origin_) - static_cast<long>(left_junction_.size());
  right_boundary_ = static_cast<long>(center_.size() - origin_ + right_junction_.size());
}

BiSeq BiSeq::parse(std::string_view text) {
  auto s1 = text.find(';');
  auto s2 = s1 == std::string_view::npos ? s1 : text.find(';', s1 + 1);
  if (s2 == std::string_view::npos) throw ParseError("expected 'left ; center ; right'", text.size());
  if (text.find(';', s2 + 1) != std::string_view::npos) throw ParseError("too many ';'", text.find(';', s2 + 1));

  std::string_view left = text.substr(0, s1);
  std::string_view mid = text.substr(s1 + 1, s2 - s1 - 1);
  std::string_view right = text.substr(s2 + 1);

  auto lo = left.find('(');
  auto lc = left.find(")*");
  if (lo == std::string_view::npos || lc == std::string_view::npos || lc < lo ||
      !trim(left.substr(0, lo)).empty())
    throw ParseError("left side must start with (period)*", 0);
  DigitWord lp = parse_part(left.substr(lo + 1, lc - lo - 1), lo + 1);
  DigitWord lj = parse_part(left.substr(lc + 2), lc + 2);

  auto ro = right.rfind('(');
  auto rc = right.rfind(")*");
  std::size_t roff = s2 + 1;
  if (ro == std::string_view::npos || rc == std::string_view::npos || rc < ro || !trim(right.substr(rc + 2)).empty())
    throw ParseError("right side must end with (period)*", roff + right.size());
  DigitWord rj = parse_part(right.substr(0, ro), roff);
  DigitWord rp = parse_part(right.substr(ro + 1, rc - ro - 1), roff + ro + 1);

  std::size_t moff = s1 + 1;
  auto caret = mid.find('^');
  if (caret == std::string_view::npos) throw ParseError("center needs '^' after the origin digit", moff + mid.size());
  if (mid.find('^', caret + 1) != std::string_view::npos) throw ParseError("more than one '^'", moff + caret);
  DigitWord before = parse_part(mid.substr(0, caret), moff);
  DigitWord after = parse_part(mid.substr(caret + 1), moff + caret + 1);
  if (before.empty()) throw ParseError("'^' must follow a digit", moff + caret);
  std::size_t origin = before.size() - 1;
  return BiSeq(lp, lj, before + after, origin, rj, rp);
}

BiSeq BiSeq::periodic(const DigitWord& period, std::size_t origin) {
  if (period.empty()) throw ParseError("empty period", 0);
  return BiSeq(period, {}, period, origin % period.size(), {}, period);
}

Digit BiSeq::at(long i) const {
  if (i >= right_boundary_) {
    long p = static_cast<long>(right_period_.size());
    return right_period_[static_cast<std::size_t>(floor_mod(i - right_boundary_, p))];
  }
  if (i < left_boundary_) {
    long p = static_cast<long>(left_period_.size());
    return left_period_[static_cast<std::size_t>(floor_mod(i - left_boundary_, p))];
  }
  auto k = static_cast<std::size_t>(i - left_boundary_);
  if (k < left_junction_.size()) return left_junction_[k];
  k -= left_junction_.size();
  if (k < center_.size()) return center_[k];
  return right_junction_[k - center_.size()];
}

CFTail BiSeq::forward_tail(long i) const {
  long j = i + 1;
  long pr = static_cast<long>(right_period_.size());
  if (j >= right_boundary_)
    return CFTail({}, right_period_.rotate(static_cast<std::size_t>(floor_mod(j - right_boundary_, pr))));
  DigitWord pre;
  for (long k = j; k < right_boundary_; ++k) pre.push_back(at(k));
  return CFTail(pre, right_period_);
}

CFTail BiSeq::backward_tail(long i) const {
  long j = i - 1;
  long pl = static_cast<long>(left_period_.size());
  DigitWord reversed = left_period_.transpose();
  if (j < left_boundary_)
    return CFTail({}, reversed.rotate(static_cast<std::size_t>(floor_mod(left_boundary_ - 1 - j, pl))));
  DigitWord pre;
  for (long k = j; k >= left_boundary_; --k) pre.push_back(at(k));
  return CFTail(pre, reversed);
}

BiSeq BiSeq::reversed() const {
  return BiSeq(right_period_.transpose(), right_junction_.transpose(), center_.transpose(),
               center_.size() - 1 - origin_, left_junction_.transpose(), left_period_.transpose());
}

BiSeq BiSeq::shifted(long k) const {
  long pl = static_cast<long>(left_period_.size());
  long pr = static_cast<long>(right_period_.size());
  long lo = left_boundary_ - pl * ceil_div(std::max(0L, left_boundary_ - k), pl);
  long hi = right_boundary_ + pr * ceil_div(std::max(0L, k + 1 - right_boundary_), pr);
  DigitWord c;
  for (long i = lo; i < hi; ++i) c.push_back(at(i));
  return BiSeq(left_period_, {}, c, static_cast<std::size_t>(k - lo), {}, right_period_);
}

std::string BiSeq::to_string() const {
  std::string out = "(" + left_period_.to_string() + ")*";
  if (!left_junction_.empty()) out += " " + left_junction_.to_string();
  out += " ; " + center_.slice(0, origin_ + 1).to_string() + "^";
  if (origin_ + 1 < center_.size()) out += " " + center_.slice(origin_ + 1, center_.size() - origin_ - 1).to_string();
  out += " ;";
  if (!right_junction_.empty()) out += " " + right_junction_.to_string();
  out += " (" + right_period_.to_string() + ")*";
  return out;
}

LambdaValue lambda_at(const BiSeq& b, long i, long bits) {
  QuadSurd fwd = eval_periodic(Integer(b.at(i)), b.forward_tail(i));
  QuadSurd bwd = eval_periodic(Integer(0), b.backward_tail(i));
  SurdPair sum = sum2_eval(fwd, bwd, bits);
  return {fwd, bwd, sum.exact, sum.enclosure};
}

namespace {

struct Candidate {
  long position;
  SurdSum exact;
  IntervalReal enclosure;
};

// Earlier in this order wins exact ties: smaller |i|, then negative first.
bool preferred(long a, long b) {
  if (std::labs(a) != std::labs(b)) return std::labs(a) < std::labs(b);
  return a < b;
}

// Index of the exact maximum among items, using enclosures to discard most
// of them before any exact comparison.
template <typename Items, typename Exact, typename Enc, typename Better>
std::size_t argmax(const Items& items, Exact exact, Enc enc, Better better_on_tie) {
  Rational best_lo = enc(items[0]).lo();
  for (const auto& it : items)
    if (enc(it).lo() > best_lo) best_lo = enc(it).lo();
  std::size_t best = items.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (enc(items[i]).hi() < best_lo) continue;
    if (best == items.size()) {
      best = i;
      continue;
    }
    auto c = compare(exact(items[i]), exact(items[best]));
    if (c > 0 || (c == 0 && better_on_tie(items[i], items[best]))) best = i;
  }
  return best;
}

}  // namespace

MarkovResult markov_value(const BiSeq& b, long bits, std::optional<long> window_radius) {
  const long pl = static_cast<long>(b.left_period().size());
  const long pr = static_cast<long>(b.right_period().size());
  const long L0 = b.left_boundary();
  const long R0 = b.right_boundary();
  const long r = window_radius.value_or((R0 - L0) + 3 * std::lcm(pl, pr) + 40);
  if (r < 2 * std::max(pl, pr))
    throw WindowInsufficient("window radius " + std::to_string(r) + " is shorter than two periods (" +
                             std::to_string(2 * std::max(pl, pr)) + ")");

  const long lo = L0 - r;
  const long hi = R0 + r;
  std::vector<Candidate> window(static_cast<std::size_t>(hi - lo), Candidate{0, SurdSum(), IntervalReal(0, 0, bits)});
  parallel_for(window.size(), [&](std::size_t k) {
    long i = lo + static_cast<long>(k);
    LambdaValue v = lambda_at(b, i, bits);
    window[k] = Candidate{i, std::move(v.exact), v.enclosure};
  });

  std::vector<LimitValue> limits;
  std::vector<IntervalReal> limit_enc;
  for (long phi = 0; phi < pr; ++phi) {
    LambdaValue v = lambda_at(BiSeq::periodic(b.right_period(), static_cast<std::size_t>(phi)), 0, bits);
    limits.push_back({'R', static_cast<std::size_t>(phi), v.exact});
    limit_enc.push_back(v.enclosure);
  }
  for (long phi = 0; phi < pl; ++phi) {
    LambdaValue v = lambda_at(BiSeq::periodic(b.left_period(), static_cast<std::size_t>(phi)), 0, bits);
    limits.push_back({'L', static_cast<std::size_t>(phi), v.exact});
    limit_enc.push_back(v.enclosure);
  }

  std::size_t wi = argmax(
      window, [](const Candidate& c) -> const SurdSum& { return c.exact; },
      [](const Candidate& c) -> const IntervalReal& { return c.enclosure; },
      [](const Candidate& x, const Candidate& y) { return preferred(x.position, y.position); });

  std::vector<std::size_t> limit_index(limits.size());
  std::iota(limit_index.begin(), limit_index.end(), 0);
  std::size_t li = limit_index[argmax(
      limit_index, [&](std::size_t k) -> const SurdSum& { return limits[k].value; },
      [&](std::size_t k) -> const IntervalReal& { return limit_enc[k]; },
      [](std::size_t, std::size_t) { return false; })];

  const Candidate& top = window[wi];
  const SurdSum& limit_max = limits[li].value;
  bool attained = compare(top.exact, limit_max) >= 0;

  MarkovResult out{attained ? top.exact : limit_max,
                   attained ? top.enclosure : limit_enc[li],
                   attained ? std::optional<long>(top.position) : std::nullopt,
                   attained ? SupKind::Attained : SupKind::Limit,
                   MarkovCertificate{lo, hi, limits, limit_max, r - 1, IntervalReal(0, 0, bits), false, std::nullopt,
                                     std::nullopt, window.size()}};

  MarkovCertificate& cert = out.certificate;
  cert.gap_to_limits = (out.exact - limit_max).enclose(bits);
  cert.tail_bound_sufficient = cert.gap_to_limits.lo() >= pow2_neg(cert.tail_bound_bits);

  std::optional<std::size_t> second;
  for (std::size_t k = 0; k < window.size(); ++k) {
    if (attained && k == wi) continue;
    if (!second) {
      second = k;
      continue;
    }
    const auto& a = window[k];
    const auto& c = window[*second];
    if (a.enclosure.hi() < c.enclosure.lo()) continue;
    auto cmp = a.enclosure.certainly_greater(c.enclosure) ? std::strong_ordering::greater : compare(a.exact, c.exact);
    if (cmp > 0 || (cmp == 0 && preferred(a.position, c.position))) second = k;
  }
  if (second) {
    cert.runner_up = window[*second].position;
    cert.runner_up_margin = (out.exact - window[*second].exact).enclose(bits);
  }
  return out;
}

LagrangeResult lagrange_value(const DigitWord& period, long bits) {
  if (period.empty()) throw ParseError("empty period", 0);
  BiSeq b = BiSeq::periodic(period, 0);
  std::vector<Candidate> values(period.size(), Candidate{0, SurdSum(), IntervalReal(0, 0, bits)});
  parallel_for(values.size(), [&](std::size_t k) {
    LambdaValue v = lambda_at(b, static_cast<long>(k), bits);
    values[k] = Candidate{static_cast<long>(k), std::move(v.exact), v.enclosure};
  });
  std::size_t best = argmax(
      values, [](const Candidate& c) -> const SurdSum& { return c.exact; },
      [](const Candidate& c) -> const IntervalReal& { return c.enclosure; },
      [](const Candidate& x, const Candidate& y) { return x.position < y.position; });
  return {values[best].exact, values[best].enclosure, best};
}

MlMemberCertificate build_ml_member(const CFTail& gamma, long bits) {
  const ForbiddenSet P = constants::forbidden_P();
  std::size_t longest = 0;
  for (const auto& w : P.words()) longest = std::max(longest, w.size());
  DigitWord probe = DigitWord{2, 2, 2} + gamma.preperiod() +
                    gamma.period().repeat(longest / gamma.period().size() + 3);
  for (const auto& f : P.words())
    if (contains_factor(probe, f))
      throw InadmissibleError("2_3 followed by " + gamma.to_string() + " contains the forbidden word " +
                              f.to_plain());

  DigitWord center = DigitWord::parse("2_4 1 2 1_2 2_3 1 2");
  BiSeq seq(gamma.period().transpose(), gamma.preperiod().transpose(), center, center.size() - 1, {},
            constants::base_period());
  MarkovResult m = markov_value(seq, bits);
  SurdSum a = constants::alpha_inf().exact();
  Rational eps = pow10_neg(8);
  bool inside = compare(m.exact, a - SurdSum(eps)) > 0 && compare(m.exact, a + SurdSum(eps)) < 0;
  return {seq, std::move(m), inside};
}

}  // namespace spectra
