#include "spectra/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace spectra {

namespace {

int sign_of(const Integer& z) { return z > 0 ? 1 : (z == 0 ? 0 : -1); }
int sign_of(const Rational& q) { return q > 0 ? 1 : (q == 0 ? 0 : -1); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer isqrt(const Integer& n) {
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

Integer pow2(unsigned long k) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, k);
  return z;
}

Integer pow10(unsigned long k) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), 10, k);
  return z;
}

long bitlen(const Integer& z) {
  return z == 0 ? 0 : static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 1UL << 16;
    std::vector<bool> composite(limit, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

/// Enclosure of c*sqrt(d) with width <= 2^-bits (d >= 0).
IntervalReal scaled_sqrt(const Rational& c, const Integer& d, long bits) {
  if (c == 0 || d == 0) return IntervalReal::point(0);
  Integer root = isqrt(d);
  if (root * root == d) return IntervalReal::point(c * root);
  Integer cap = floor_of(abs(c)) + 1;
  long k = std::max<long>(bits, 0) + bitlen(cap);
  Integer scale = pow2(static_cast<unsigned long>(k));
  Integer f = isqrt(d * scale * scale);
  Rational lo = c * Rational(f, scale);
  Rational hi = c * Rational(f + 1, scale);
  lo.canonicalize();
  hi.canonicalize();
  if (c < 0) std::swap(lo, hi);
  return IntervalReal(lo, hi, bits);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw NumericError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&](std::size_t pos) { return ParseError("invalid number '" + s + "'", pos); };
  if (s.empty()) throw bad(0);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(std::string_view(s).substr(0, slash));
    Rational den = parse_rational(std::string_view(s).substr(slash + 1));
    if (den == 0) throw bad(slash + 1);
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  Integer mantissa = 0;
  long scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa = mantissa * 10 + (ch - '0');
      any_digit = true;
      if (seen_point) --scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw bad(i);
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw bad(i);
    std::size_t epos = ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    if (i == s.size()) throw bad(epos);
    long e = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad(i);
      e = e * 10 + (s[i] - '0');
      if (e > 100000) throw bad(i);
    }
    scale += eneg ? -e : e;
  }
  Rational q = scale >= 0 ? Rational(mantissa * pow10(static_cast<unsigned long>(scale)))
                          : make_rational(mantissa, pow10(static_cast<unsigned long>(-scale)));
  return negative ? Rational(-q) : q;
}

Rational pow10_neg(int k) {
  return k >= 0 ? make_rational(1, pow10(static_cast<unsigned long>(k)))
                : Rational(pow10(static_cast<unsigned long>(-k)));
}

Rational pow2_neg(long k) {
  return k >= 0 ? make_rational(1, pow2(static_cast<unsigned long>(k)))
                : Rational(pow2(static_cast<unsigned long>(-k)));
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- IntervalReal

IntervalReal::IntervalReal(Rational lo, Rational hi, long precision_bits)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_bits_(precision_bits) {
  lo_.canonicalize();
  hi_.canonicalize();
  if (lo_ > hi_) throw NumericError("interval with lo > hi");
}

IntervalReal IntervalReal::point(const Rational& x) { return IntervalReal(x, x, 0); }

IntervalReal IntervalReal::operator-() const { return IntervalReal(-hi_, -lo_, precision_bits_); }

IntervalReal operator+(const IntervalReal& a, const IntervalReal& b) {
  return IntervalReal(a.lo_ + b.lo_, a.hi_ + b.hi_, std::min(a.precision_bits_, b.precision_bits_));
}

IntervalReal operator-(const IntervalReal& a, const IntervalReal& b) { return a + (-b); }

IntervalReal operator*(const IntervalReal& a, const IntervalReal& b) {
  Rational c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
  return IntervalReal(*mn, *mx, std::min(a.precision_bits_, b.precision_bits_));
}

IntervalReal operator/(const IntervalReal& a, const IntervalReal& b) {
  if (b.lo_ <= 0 && b.hi_ >= 0) throw NumericError("interval division by an interval containing 0");
  IntervalReal inv(1 / b.hi_, 1 / b.lo_, b.precision_bits_);
  return a * inv;
}

std::string truncated_decimal(const Rational& q, int digits) {
  Rational a = abs(q);
  Integer scaled = floor_of(a * Rational(pow10(static_cast<unsigned long>(std::max(digits, 0)))));
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  bool negative = q < 0 && scaled != 0;
  return negative ? "-" + s : s;
}

std::string IntervalReal::certified_decimal(int max_digits) const {
  if (lo_ < 0 && hi_ > 0) return "0";
  if (hi_ <= 0 && lo_ < 0) return (-*this).certified_decimal(max_digits).insert(0, "-");
  int best = -1;
  for (int k = 0; k <= max_digits; ++k) {
    Rational scale(pow10(static_cast<unsigned long>(k)));
    if (floor_of(lo_ * scale) != floor_of(hi_ * scale)) break;
    best = k;
  }
  if (best < 0) {
    // Not even the integer part is certain; print the integer part of lo.
    return truncated_decimal(lo_, 0);
  }
  return truncated_decimal(lo_, best);
}

bool IntervalReal::matches_decimal_prefix(std::string_view printed) const {
  std::string s(printed);
  bool negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);
  auto dot = s.find('.');
  int k = dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
  Rational d = parse_rational(s);
  Rational lo = negative ? Rational(-hi_) : lo_;
  Rational hi = negative ? Rational(-lo_) : hi_;
  return lo >= d && hi < d + pow10_neg(k);
}

// ---------------------------------------------------------------- QuadSurd

SquareFreeSplit split_square_free(const Integer& d) {
  if (d < 0) throw NumericError("negative radicand");
  if (d == 0) return {0, 0};
  Integer m = d;
  Integer f = 1;
  Integer s = 1;
  for (unsigned long p : small_primes()) {
    if (Integer(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) f *= p;
    if (e % 2 == 1) s *= p;
  }
  Integer root = isqrt(m);
  if (root * root == m) {
    f *= root;
  } else {
    s *= m;
  }
  return {f, s};
}

QuadSurd::QuadSurd(const Rational& x) : p_(x.get_num()), q_(0), d_(0), r_(x.get_den()) {}

QuadSurd::QuadSurd(Integer p, Integer q, Integer d, Integer r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
  normalize(true);
}

QuadSurd::QuadSurd(Integer p, Integer q, Integer d, Integer r, Trusted)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
  normalize(false);
}

void QuadSurd::normalize(bool reduce_d) {
  if (r_ == 0) throw NumericError("zero denominator in surd");
  if (d_ < 0) throw NumericError("negative radicand in surd");
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
  } else if (reduce_d) {
    auto [f, s] = split_square_free(d_);
    q_ *= f;
    d_ = s;
  }
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
    d_ = 0;
  }
  Integer g = gcd(gcd(p_, q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
  if (p_ == 0 && q_ == 0) r_ = 1;
}

QuadSurd QuadSurd::conjugate() const { return QuadSurd(p_, -q_, d_, r_, Trusted{}); }

int QuadSurd::sign() const {
  int a = sign_of(p_);
  int b = sign_of(q_);
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  Integer lhs = p_ * p_;
  Integer rhs = q_ * q_ * d_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? a : b;
}

QuadSurd QuadSurd::operator-() const { return QuadSurd(-p_, -q_, d_, r_, Trusted{}); }

namespace {
Integer common_d(const QuadSurd& a, const QuadSurd& b) {
  if (a.is_rational()) return b.d();
  if (b.is_rational() || a.d() == b.d()) return a.d();
  throw FieldMismatch("surds sqrt(" + a.d().get_str() + ") and sqrt(" + b.d().get_str() +
                      ") lie in different fields");
}
}  // namespace

QuadSurd operator+(const QuadSurd& a, const QuadSurd& b) {
  Integer d = common_d(a, b);
  return QuadSurd(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, d, a.r_ * b.r_,
                  QuadSurd::Trusted{});
}

QuadSurd operator-(const QuadSurd& a, const QuadSurd& b) { return a + (-b); }

QuadSurd operator*(const QuadSurd& a, const QuadSurd& b) {
  Integer d = common_d(a, b);
  return QuadSurd(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, d, a.r_ * b.r_,
                  QuadSurd::Trusted{});
}

QuadSurd QuadSurd::reciprocal() const {
  Integer norm = p_ * p_ - q_ * q_ * d_;
  if (norm == 0) throw NumericError("reciprocal of zero surd");
  return QuadSurd(r_ * p_, -r_ * q_, d_, norm, Trusted{});
}

QuadSurd operator/(const QuadSurd& a, const QuadSurd& b) {
  common_d(a, b);
  return a * b.reciprocal();
}

std::string QuadSurd::to_string() const {
  if (q_ == 0) return rational_part().get_str();
  Integer q_abs = abs(q_);
  if (p_ == 0) {
    std::string s = (q_ < 0 ? "-" : "") + ("sqrt(" + Integer(q_abs * q_abs * d_).get_str() + ")");
    return r_ == 1 ? s : s + "/" + r_.get_str();
  }
  std::string s = "(" + p_.get_str() + (q_ < 0 ? "-" : "+");
  if (q_abs != 1) s += q_abs.get_str() + "*";
  s += "sqrt(" + d_.get_str() + "))/" + r_.get_str();
  return s;
}

IntervalReal surd_eval(const QuadSurd& s, long bits) {
  if (s.is_rational()) {
    IntervalReal pt = IntervalReal::point(s.rational_part());
    return IntervalReal(pt.lo(), pt.hi(), bits);
  }
  IntervalReal root = scaled_sqrt(s.sqrt_coefficient(), s.d(), bits);
  Rational base = s.rational_part();
  return IntervalReal(root.lo() + base, root.hi() + base, bits);
}

std::strong_ordering surd_compare(const QuadSurd& a, const QuadSurd& b) {
  if (a == b) return std::strong_ordering::equal;
  int s = (SurdSum(a) - SurdSum(b)).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---------------------------------------------------------------- SurdSum

SurdSum::SurdSum(const Rational& x) {
  if (x != 0) terms_.emplace(Integer(1), x);
}

SurdSum::SurdSum(const QuadSurd& s) {
  add_term(1, s.rational_part());
  if (!s.is_rational()) add_term(s.d(), s.sqrt_coefficient());
}

void SurdSum::add_term(const Integer& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    it->second.canonicalize();
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t SurdSum::irrational_terms() const {
  return terms_.size() - (terms_.count(Integer(1)) != 0 ? 1 : 0);
}

std::optional<QuadSurd> SurdSum::as_surd() const {
  if (irrational_terms() > 1) return std::nullopt;
  Rational base = 0;
  Rational c = 0;
  Integer d = 0;
  for (const auto& [key, coeff] : terms_) {
    if (key == 1) {
      base = coeff;
    } else {
      c = coeff;
      d = key;
    }
  }
  if (c == 0) return QuadSurd(base);
  Integer r = base.get_den() * c.get_den();
  return QuadSurd(base.get_num() * c.get_den(), c.get_num() * base.get_den(), d, r);
}

std::optional<Rational> SurdSum::as_rational() const {
  if (irrational_terms() > 0) return std::nullopt;
  auto it = terms_.find(Integer(1));
  return it == terms_.end() ? Rational(0) : it->second;
}

SurdSum SurdSum::operator-() const {
  SurdSum out = *this;
  for (auto& [key, coeff] : out.terms_) coeff = -coeff;
  return out;
}

SurdSum& SurdSum::operator+=(const SurdSum& other) {
  for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& other) {
  for (const auto& [key, coeff] : other.terms_) add_term(key, -coeff);
  return *this;
}

SurdSum& SurdSum::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) {
    coeff *= k;
    coeff.canonicalize();
  }
  return *this;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
  SurdSum out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Integer g = gcd(ka, kb);
      out.add_term((ka / g) * (kb / g), ca * cb * Rational(g));
    }
  }
  return out;
}

namespace {

/// Pairwise coprime integers > 1 whose products generate every key.
std::vector<Integer> coprime_base(const std::map<Integer, Rational>& terms) {
  std::vector<Integer> base;
  for (const auto& [key, coeff] : terms)
    if (key > 1) base.push_back(key);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        Integer g = gcd(base[i], base[j]);
        if (g == 1) continue;
        Integer a = base[i] / g;
        Integer b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (const Integer& x : {a, b, g})
          if (x > 1 && std::find(base.begin(), base.end(), x) == base.end()) base.push_back(x);
        changed = true;
      }
    }
  }
  std::sort(base.begin(), base.end());
  return base;
}

}  // namespace

int SurdSum::algebraic_sign(int depth) const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sign_of(terms_.begin()->second);
  std::vector<Integer> base = coprime_base(terms_);
  if (base.empty()) return sign_of(terms_.begin()->second);
  // Write the sum as u + v*sqrt(p) with u, v free of sqrt(p).
  const Integer& p = base.back();
  SurdSum u;
  SurdSum v;
  for (const auto& [key, coeff] : terms_) {
    if (mpz_divisible_p(key.get_mpz_t(), p.get_mpz_t()) != 0) {
      v.add_term(key / p, coeff);
    } else {
      u.add_term(key, coeff);
    }
  }
  int su = u.algebraic_sign(depth + 1);
  int sv = v.algebraic_sign(depth + 1);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  SurdSum t = u * u - (v * v) * Rational(p);
  int st = t.sign_at_depth(depth + 1);
  if (st == 0) return 0;
  return st > 0 ? su : sv;
}

int SurdSum::sign_at_depth(int depth) const {
  if (irrational_terms() >= 3) {
    for (long bits : {64L, 256L}) {
      IntervalReal box = enclose(bits);
      if (box.lo() > 0) return 1;
      if (box.hi() < 0) return -1;
    }
  }
  return algebraic_sign(depth);
}

int SurdSum::sign() const { return sign_at_depth(0); }

IntervalReal SurdSum::enclose(long bits) const {
  IntervalReal acc = IntervalReal::point(0);
  long extra = bitlen(Integer(static_cast<unsigned long>(terms_.size() + 1)));
  for (const auto& [key, coeff] : terms_) {
    acc = acc + (key == 1 ? IntervalReal::point(coeff) : scaled_sqrt(coeff, key, bits + extra));
  }
  return IntervalReal(acc.lo(), acc.hi(), bits);
}

std::string SurdSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : terms_) {
    std::string c = Rational(abs(coeff)).get_str();
    if (!out.empty()) out += coeff < 0 ? " - " : " + ";
    else if (coeff < 0) out += "-";
    if (key == 1) {
      out += c;
    } else {
      if (abs(coeff) != 1) out += "(" + c + ")*";
      out += "sqrt(" + key.get_str() + ")";
    }
  }
  return out;
}

std::strong_ordering compare(const SurdSum& a, const SurdSum& b) {
  int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

SurdPair sum2_eval(const QuadSurd& a, const QuadSurd& b, long bits) {
  SurdSum exact = SurdSum(a) + SurdSum(b);
  if (auto q = exact.as_rational()) return {exact, IntervalReal(*q, *q, bits)};
  return {exact, exact.enclose(bits)};
}

}  // namespace spectra
