#include "spectra/cf.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace spectra {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

DigitWord parse_word_at(std::string_view text, std::size_t offset) {
  std::vector<Digit> out;
  bool spaced = std::any_of(text.begin(), text.end(), [](char c) { return is_space(c) || c == ','; });
  auto fail = [&](const std::string& what, std::size_t i) { return ParseError(what, offset + i); };

  if (!spaced) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      if (ch == '_') {
        if (out.empty()) throw fail("multiplicity without a digit", i);
        if (i + 1 >= text.size() || !is_digit(text[i + 1]) || text[i + 1] == '0')
          throw fail("expected multiplicity 1-9 after '_'", i + 1);
        int k = text[++i] - '0';
        Digit last = out.back();
        out.insert(out.end(), static_cast<std::size_t>(k - 1), last);
      } else if (is_digit(ch) && ch != '0') {
        out.push_back(ch - '0');
      } else {
        throw fail(std::string("unexpected character '") + ch + "'", i);
      }
    }
    return DigitWord(std::move(out));
  }

  std::size_t i = 0;
  auto read_number = [&](const char* what) {
    std::size_t start = i;
    long value = 0;
    while (i < text.size() && is_digit(text[i])) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000'000L) throw fail("number too large", start);
      ++i;
    }
    if (i == start) throw fail(std::string("expected ") + what, i);
    if (value == 0) throw fail(std::string(what) + " must be positive", start);
    return value;
  };
  while (i < text.size()) {
    if (is_space(text[i]) || text[i] == ',') {
      ++i;
      continue;
    }
    Digit d = read_number("digit");
    long k = 1;
    if (i < text.size() && text[i] == '_') {
      ++i;
      k = read_number("multiplicity");
    }
    if (i < text.size() && !is_space(text[i]) && text[i] != ',')
      throw fail(std::string("unexpected character '") + text[i] + "'", i);
    out.insert(out.end(), static_cast<std::size_t>(k), d);
  }
  return DigitWord(std::move(out));
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

// ---------------------------------------------------------------- DigitWord

void DigitWord::check(Digit d) {
  if (d < 1) throw NumericError("partial quotients must be positive, got " + std::to_string(d));
}

DigitWord::DigitWord(std::initializer_list<Digit> digits) : digits_(digits) {
  for (Digit d : digits_) check(d);
}

DigitWord::DigitWord(std::vector<Digit> digits) : digits_(std::move(digits)) {
  for (Digit d : digits_) check(d);
}

DigitWord DigitWord::parse(std::string_view text) { return parse_word_at(text, 0); }

DigitWord DigitWord::transpose() const {
  return DigitWord(std::vector<Digit>(digits_.rbegin(), digits_.rend()));
}

DigitWord DigitWord::repeat(std::size_t times) const {
  DigitWord out;
  out.digits_.reserve(digits_.size() * times);
  for (std::size_t t = 0; t < times; ++t) out.append(*this);
  return out;
}

DigitWord DigitWord::slice(std::size_t from, std::size_t count) const {
  if (from + count > digits_.size()) throw std::out_of_range("DigitWord::slice");
  auto first = digits_.begin() + static_cast<std::ptrdiff_t>(from);
  return DigitWord(std::vector<Digit>(first, first + static_cast<std::ptrdiff_t>(count)));
}

DigitWord DigitWord::rotate(std::size_t k) const {
  if (digits_.empty()) return *this;
  std::vector<Digit> out = digits_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return DigitWord(std::move(out));
}

void DigitWord::append(const DigitWord& other) {
  digits_.insert(digits_.end(), other.digits_.begin(), other.digits_.end());
}

std::string DigitWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size();) {
    std::size_t j = i;
    while (j < digits_.size() && digits_[j] == digits_[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(digits_[i]);
    if (j - i > 1) out += "_" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string DigitWord::to_plain() const {
  std::string out;
  for (Digit d : digits_) out += std::to_string(d);
  return out;
}

// ---------------------------------------------------------------- CFTail

CFTail::CFTail(DigitWord preperiod, DigitWord period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw NumericError("periodic tail needs a non-empty period");
  const std::size_t n = period_.size();
  for (std::size_t len = 1; len <= n; ++len) {
    if (n % len != 0) continue;
    if (period_.rotate(len) == period_) {
      period_ = period_.slice(0, len);
      break;
    }
  }
  std::vector<Digit> pre = preperiod_.digits();
  while (!pre.empty() && pre.back() == period_[period_.size() - 1]) {
    pre.pop_back();
    period_ = period_.rotate(period_.size() - 1);
  }
  preperiod_ = DigitWord(std::move(pre));
}

Digit CFTail::at(std::size_t k) const {
  if (k < preperiod_.size()) return preperiod_[k];
  return period_[(k - preperiod_.size()) % period_.size()];
}

CFTail CFTail::drop(std::size_t k) const {
  if (k <= preperiod_.size()) return CFTail(preperiod_.slice(k, preperiod_.size() - k), period_);
  return CFTail(DigitWord{}, period_.rotate((k - preperiod_.size()) % period_.size()));
}

std::string CFTail::to_string() const {
  std::string out = preperiod_.to_string();
  if (!out.empty()) out += ' ';
  return out + "(" + period_.to_string() + ")*";
}

// ---------------------------------------------------------------- Mobius

Mobius Mobius::digit(Digit k) { return Mobius{0, 1, 1, Integer(k)}; }

Mobius Mobius::word(const DigitWord& w) {
  Mobius m;
  for (Digit k : w) m = m * digit(k);
  return m;
}

Mobius Mobius::operator*(const Mobius& o) const {
  return Mobius{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Rational Mobius::apply(const Rational& x) const {
  return make_rational(a * x.get_num() + b * x.get_den(), c * x.get_num() + d * x.get_den());
}

Rational Mobius::at_infinity() const { return make_rational(a, c); }

QuadSurd Mobius::apply(const QuadSurd& x) const {
  if (x.is_rational()) return QuadSurd(apply(x.rational_part()));
  QuadSurd num = QuadSurd(Rational(a)) * x + QuadSurd(Rational(b));
  QuadSurd den = QuadSurd(Rational(c)) * x + QuadSurd(Rational(d));
  return num / den;
}

QuadSurd Mobius::attracting_fixed_point() const {
  if (c <= 0) throw NumericError("fixed point requested for a non-expanding map");
  Integer disc = (d - a) * (d - a) + 4 * b * c;
  return QuadSurd(a - d, 1, disc, 2 * c);
}

// ---------------------------------------------------------------- CFValue

CFValue CFValue::parse(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected ';' after the integer part", text.size());
  CFValue out;
  std::string head = trim(text.substr(0, semi));
  if (head.empty()) throw ParseError("missing integer part", 0);
  std::size_t head_pos = text.find_first_not_of(" \t");
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (!is_digit(head[i]) && !(i == 0 && head[i] == '-'))
      throw ParseError("invalid integer part", head_pos + i);
  }
  out.a0 = Integer(head);

  std::string_view body = text.substr(semi + 1);
  std::size_t base = semi + 1;
  std::string word_part;
  std::vector<std::size_t> positions;
  auto open = body.find('(');
  std::string_view before = open == std::string_view::npos ? body : body.substr(0, open);
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i] == ')' || before[i] == '*') throw ParseError("unbalanced period", base + i);
    word_part += before[i] == '|' ? ' ' : before[i];
  }
  std::string stripped = trim(word_part);
  std::size_t lead = word_part.find_first_not_of(" \t\n");
  if (!stripped.empty()) out.head = parse_word_at(stripped, base + (lead == std::string::npos ? 0 : lead));

  if (open != std::string_view::npos) {
    auto close = body.find(')', open);
    if (close == std::string_view::npos) throw ParseError("missing ')'", base + body.size());
    if (close + 1 >= body.size() || body[close + 1] != '*')
      throw ParseError("period must be written as (...)*", base + close + 1);
    std::string rest = trim(body.substr(close + 2));
    if (!rest.empty()) throw ParseError("text after periodic part", base + close + 2);
    std::string inner = trim(body.substr(open + 1, close - open - 1));
    if (inner.empty()) throw ParseError("empty period", base + open + 1);
    out.period = parse_word_at(inner, base + open + 1);
  }
  return out;
}

std::optional<Integer> CFValue::digit(std::size_t k) const {
  if (k == 0) return a0;
  std::size_t j = k - 1;
  if (j < head.size()) return Integer(head[j]);
  if (!period) return std::nullopt;
  return Integer((*period)[(j - head.size()) % period->size()]);
}

QuadSurd CFValue::value() const {
  if (!period) return QuadSurd(eval_finite(a0, head));
  return eval_periodic(a0, CFTail(head, *period));
}

std::string CFValue::to_string() const {
  std::string out = a0.get_str() + ";";
  if (!head.empty()) out += " " + head.to_string();
  if (period) out += (head.empty() ? " (" : " | (") + period->to_string() + ")*";
  return out;
}

Rational eval_finite(const Integer& a0, const DigitWord& w) {
  Mobius m = Mobius::word(w);
  return Rational(a0) + make_rational(m.b, m.d);
}

QuadSurd eval_periodic(const Integer& a0, const CFTail& tail) {
  QuadSurd t = Mobius::word(tail.period()).attracting_fixed_point();
  return QuadSurd(Rational(a0)) + Mobius::word(tail.preperiod()).apply(t);
}

std::strong_ordering cf_compare(const CFValue& x, const CFValue& y) {
  if (x.is_finite() && y.is_finite()) return compare(eval_finite(x.a0, x.head), eval_finite(y.a0, y.head));
  std::size_t px = x.period ? x.period->size() : 1;
  std::size_t py = y.period ? y.period->size() : 1;
  std::size_t limit = std::max(x.head.size(), y.head.size()) + std::lcm(px, py) + 2;
  for (std::size_t k = 0; k <= limit; ++k) {
    auto a = x.digit(k);
    auto b = y.digit(k);
    if (a && b && *a == *b) continue;
    // An absent digit acts as +infinity.
    int diff = !a ? 1 : (!b ? -1 : (*a > *b ? 1 : -1));
    if (k % 2 == 1) diff = -diff;
    return diff > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

ParityBounds parity_bounds(const Integer& a0, const DigitWord& prefix, const DigitSet& digits) {
  Rational truncated = eval_finite(a0, prefix);
  DigitWord extended = prefix;
  extended.push_back(digits.min_digit);
  Rational other = eval_finite(a0, extended);
  bool odd = prefix.size() % 2 == 1;
  if (odd) return {other, truncated, true};
  return {truncated, other, false};
}

std::vector<Integer> gauss_expand(const QuadSurd& x0, std::size_t count) {
  std::vector<Integer> out;
  QuadSurd x = x0;
  for (std::size_t k = 0; k < count; ++k) {
    Integer a;
    if (x.is_rational()) {
      Rational q = x.rational_part();
      mpz_fdiv_q(a.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    } else {
      for (long bits = 32;; bits *= 2) {
        IntervalReal box = surd_eval(x, bits);
        Integer lo;
        Integer hi;
        mpz_fdiv_q(lo.get_mpz_t(), box.lo().get_num_mpz_t(), box.lo().get_den_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), box.hi().get_num_mpz_t(), box.hi().get_den_mpz_t());
        if (lo == hi) {
          a = lo;
          break;
        }
      }
    }
    out.push_back(a);
    QuadSurd frac = x - QuadSurd(Rational(a));
    if (frac.sign() == 0) break;
    x = frac.reciprocal();
  }
  return out;
}

}  // namespace spectra
