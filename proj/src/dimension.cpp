#include "spectra/dimension.hpp"

#include <mpfr.h>

#include <cmath>
#include <functional>
#include <map>

#include "spectra/errors.hpp"
#include "spectra/parallel.hpp"

namespace spectra {

CantorSpec CantorSpec::from_blocks(std::vector<DigitWord> blocks, std::string name) {
  CantorSpec spec;
  spec.mode = Mode::Blocks;
  spec.name = std::move(name);
  spec.blocks = std::move(blocks);
  spec.automaton();  // validates prefix-freeness
  return spec;
}

CantorSpec CantorSpec::from_forbidden(ForbiddenSet forbidden, std::string name) {
  CantorSpec spec;
  spec.mode = Mode::Forbidden;
  spec.name = std::move(name);
  spec.forbidden = std::move(forbidden);
  return spec;
}

Automaton CantorSpec::automaton() const {
  return mode == Mode::Blocks ? Automaton::blocks(blocks) : Automaton::factor(*forbidden);
}

namespace {

class Mp {
 public:
  explicit Mp(long bits) { mpfr_init2(v_, bits); }
  Mp(const Mp& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mp& operator=(const Mp&) = delete;
  ~Mp() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

Rational to_rational(const Mp& x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x.get());
  return q;
}

struct Tails {
  QuadSurd lo;
  QuadSurd hi;
};

// Continuation range [y_min, y_max] from each automaton state, computed lazily.
class TailCache {
 public:
  explicit TailCache(const Automaton& a) : a_(a) {}
  const Tails& at(Automaton::State s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    QuadSurd lo = eval_periodic(0, extremal_tail(a_, s, Sense::Min, 1));
    QuadSurd hi = eval_periodic(0, extremal_tail(a_, s, Sense::Max, 1));
    return cache_.emplace(s, Tails{lo, hi}).first->second;
  }

 private:
  const Automaton& a_;
  std::map<Automaton::State, Tails> cache_;
};

Automaton::State end_state(const CantorSpec& spec, const Automaton& a, const DigitWord& word) {
  auto s = a.run(a.initial(), word);
  if (!s) throw InadmissibleError("word " + word.to_string() + " is not admissible");
  if (spec.mode == CantorSpec::Mode::Blocks && !a.boundary(*s))
    throw InadmissibleError("word " + word.to_string() + " is not a concatenation of blocks");
  if (!a.live(*s)) throw InadmissibleError("word " + word.to_string() + " has no infinite continuation");
  return *s;
}

CylinderBound bound_with(const DigitWord& word, const Tails& tails, long bits) {
  Integer q_prev = 0, q = 1;
  for (Digit d : word) {
    Integer next = d * q + q_prev;
    q_prev = q;
    q = next;
  }
  auto D = [&](const QuadSurd& y) {
    QuadSurd base = QuadSurd(Rational(q)) + y * QuadSurd(Rational(q_prev));
    return base * base;
  };
  QuadSurd lam = D(tails.lo);
  QuadSurd Lam = D(tails.hi);
  return {word, lam, Lam, surd_eval(lam, bits), surd_eval(Lam, bits)};
}

std::vector<CylinderBound> all_bounds(const CantorSpec& spec, const std::vector<DigitWord>& words, long bits) {
  Automaton a = spec.automaton();
  TailCache tails(a);
  std::vector<const Tails*> per_word(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) per_word[i] = &tails.at(end_state(spec, a, words[i]));
  std::vector<CylinderBound> out(words.size(), CylinderBound{{}, QuadSurd(1), QuadSurd(1), IntervalReal(1, 1, bits),
                                                             IntervalReal(1, 1, bits)});
  parallel_for(words.size(), [&](std::size_t i) { out[i] = bound_with(words[i], *per_word[i], bits); });
  return out;
}

// Directed-rounding enclosures of log D for every cylinder.
struct LogTable {
  std::vector<Mp> lo, hi;
  long bits;
};

LogTable log_table(const std::vector<CylinderBound>& cylinders, bool use_lam, long bits) {
  LogTable t{{}, {}, bits};
  t.lo.reserve(cylinders.size());
  t.hi.reserve(cylinders.size());
  for (const auto& c : cylinders) {
    const IntervalReal& D = use_lam ? c.lam : c.Lam;
    Mp lo(bits), hi(bits);
    mpfr_set_q(lo.get(), D.lo().get_mpq_t(), MPFR_RNDD);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_set_q(hi.get(), D.hi().get_mpq_t(), MPFR_RNDU);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    t.lo.push_back(lo);
    t.hi.push_back(hi);
  }
  return t;
}

// Enclosure of sum exp(-s log D) for s >= 0.
IntervalReal sum_at(const LogTable& t, const Rational& s) {
  const long bits = t.bits;
  Mp s_lo(bits), s_hi(bits), term(bits), sum_lo(bits), sum_hi(bits);
  mpfr_set_q(s_lo.get(), s.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(s_hi.get(), s.get_mpq_t(), MPFR_RNDU);
  mpfr_set_zero(sum_lo.get(), 1);
  mpfr_set_zero(sum_hi.get(), 1);
  for (std::size_t i = 0; i < t.lo.size(); ++i) {
    mpfr_mul(term.get(), s_hi.get(), t.hi[i].get(), MPFR_RNDU);
    mpfr_neg(term.get(), term.get(), MPFR_RNDD);
    mpfr_exp(term.get(), term.get(), MPFR_RNDD);
    mpfr_add(sum_lo.get(), sum_lo.get(), term.get(), MPFR_RNDD);

    mpfr_mul(term.get(), s_lo.get(), t.lo[i].get(), MPFR_RNDD);
    mpfr_neg(term.get(), term.get(), MPFR_RNDU);
    mpfr_exp(term.get(), term.get(), MPFR_RNDU);
    mpfr_add(sum_hi.get(), sum_hi.get(), term.get(), MPFR_RNDU);
  }
  return IntervalReal(to_rational(sum_lo), to_rational(sum_hi), bits);
}

const Rational one(1);

}  // namespace

CylinderBound cylinder_bounds(const CantorSpec& spec, const DigitWord& word, long bits) {
  Automaton a = spec.automaton();
  TailCache tails(a);
  return bound_with(word, tails.at(end_state(spec, a, word)), bits);
}

std::vector<DigitWord> level_words(const CantorSpec& spec, std::size_t n) {
  std::vector<DigitWord> out;
  if (spec.mode == CantorSpec::Mode::Blocks) {
    DigitWord cur;
    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
      if (depth == n) {
        out.push_back(cur);
        return;
      }
      for (const auto& b : spec.blocks) {
        DigitWord saved = cur;
        cur.append(b);
        rec(depth + 1);
        cur = saved;
      }
    };
    rec(0);
    return out;
  }
  Automaton a = spec.automaton();
  enumerate_admissible(a, n, [&](const DigitWord& w) {
    if (a.live(*a.run(a.initial(), w))) out.push_back(w);
  });
  return out;
}

IntervalReal cylinder_sum(const std::vector<CylinderBound>& cylinders, const Rational& s, bool use_lam, long bits) {
  return sum_at(log_table(cylinders, use_lam, bits), s);
}

DimensionBracket palis_takens_bounds(const CantorSpec& spec, std::size_t n, const Rational& tol, long bits) {
  if (n < 1) throw std::invalid_argument("palis_takens_bounds needs n >= 1");
  if (tol <= 0) throw std::invalid_argument("palis_takens_bounds needs tol > 0");
  std::vector<DigitWord> words = level_words(spec, n);
  if (words.empty()) throw NoRootError("no level-" + std::to_string(n) + " cylinders");
  Integer K;
  mpz_cdiv_q(K.get_mpz_t(), tol.get_den_mpz_t(), tol.get_num_mpz_t());  // ceil(1 / tol)

  for (long b = bits; b <= 8 * bits; b *= 2) {
    std::vector<CylinderBound> cyl = all_bounds(spec, words, b);
    LogTable Lam = log_table(cyl, false, b);
    LogTable lam = log_table(cyl, true, b);
    auto grid = [&](const Integer& k) -> Rational { return Rational(k) * tol; };

    // Largest k with sum_Lam(k tol) >= 1.
    Integer lo = 0, hi = K + 1;
    while (hi - lo > 1) {
      Integer mid = (lo + hi) / 2;
      if (sum_at(Lam, grid(mid)).lo() >= one) lo = mid; else hi = mid;
    }
    bool alpha_ok = sum_at(Lam, grid(lo)).lo() >= one && (lo == K || sum_at(Lam, grid(lo + 1)).hi() < one);

    // Smallest k with sum_lam(k tol) <= 1.
    if (sum_at(lam, grid(K)).lo() > one) throw NoRootError("beta root lies above 1");
    Integer blo = -1, bhi = K;
    while (bhi - blo > 1) {
      Integer mid = (blo + bhi) / 2;
      if (sum_at(lam, grid(mid)).hi() <= one) bhi = mid; else blo = mid;
    }
    bool beta_ok = sum_at(lam, grid(bhi)).hi() <= one && (bhi == 0 || sum_at(lam, grid(bhi - 1)).lo() > one);

    if (alpha_ok && beta_ok) return {grid(lo), grid(bhi), b, words.size()};
  }
  throw PrecisionError("could not certify the dimension bracket at n = " + std::to_string(n) + " up to " +
                       std::to_string(8 * bits) + " bits");
}

namespace {

struct Orbit {
  std::size_t period;     // in blocks or digits
  long double log_d;      // log |(Psi^p)'| at the fixed point
  long double inv_d;      // 1 / |(Psi^p)'|
  bool odd;               // orientation reversing
};

std::vector<Orbit> periodic_orbits(const CantorSpec& spec, std::size_t n) {
  std::vector<Orbit> out;
  Automaton a = spec.automaton();
  std::size_t longest = 0;
  if (spec.forbidden)
    for (const auto& w : spec.forbidden->words()) longest = std::max(longest, w.size());
  for (std::size_t p = 1; p <= n; ++p) {
    for (const DigitWord& w : level_words(spec, p)) {
      if (spec.mode == CantorSpec::Mode::Forbidden) {
        std::size_t reps = (longest + w.size()) / w.size() + 1;
        if (!a.accepts(w.repeat(reps))) continue;
      }
      long double x = 0.5L;
      for (int it = 0; it < 200; ++it)
        for (auto d = w.digits().rbegin(); d != w.digits().rend(); ++d) x = 1.0L / (static_cast<long double>(*d) + x);
      long double q_prev = 0, q = 1;
      for (Digit d : w) {
        long double next = static_cast<long double>(d) * q + q_prev;
        q_prev = q;
        q = next;
      }
      long double root = q + x * q_prev;
      out.push_back({p, 2.0L * std::log(root), 1.0L / (root * root), w.size() % 2 == 1});
    }
  }
  return out;
}

long double determinant(const std::vector<Orbit>& orbits, std::size_t n, long double s) {
  std::vector<long double> trace(n + 1, 0.0L);
  for (const auto& o : orbits) {
    long double sign = o.odd ? -1.0L : 1.0L;
    trace[o.period] += std::exp(-s * o.log_d) / (1.0L - sign * o.inv_d);
  }
  std::vector<long double> coeff(n + 1, 0.0L);
  coeff[0] = 1.0L;
  long double total = 1.0L;
  for (std::size_t k = 1; k <= n; ++k) {
    long double acc = 0.0L;
    for (std::size_t j = 1; j <= k; ++j) acc += trace[j] * coeff[k - j];
    coeff[k] = -acc / static_cast<long double>(k);
    total += coeff[k];
  }
  return total;
}

}  // namespace

double fredholm_determinant(const CantorSpec& spec, std::size_t n, double s) {
  return static_cast<double>(determinant(periodic_orbits(spec, n), n, s));
}

PressureResult pressure_root(const CantorSpec& spec, std::size_t n, double tol) {
  if (n < 1) throw std::invalid_argument("pressure_root needs n >= 1");
  std::vector<Orbit> orbits = periodic_orbits(spec, n);
  const long double step = 0.005L;
  long double hi = 1.0L;
  long double f_hi = determinant(orbits, n, hi);
  for (long double lo = 1.0L - step; lo > -step / 2; lo -= step) {
    long double s_lo = std::max(lo, 0.0L);
    long double f_lo = determinant(orbits, n, s_lo);
    if ((f_lo < 0) != (f_hi < 0) || f_lo == 0) {
      long double a = s_lo, b = hi, fa = f_lo;
      while (b - a > tol) {
        long double m = (a + b) / 2;
        long double fm = determinant(orbits, n, m);
        if ((fm < 0) == (fa < 0) && fm != 0) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      return {static_cast<double>((a + b) / 2), orbits.size()};
    }
    hi = s_lo;
    f_hi = f_lo;
  }
  throw NoRootError("truncated determinant has no root in [0, 1] at order " + std::to_string(n));
}

}  // namespace spectra
