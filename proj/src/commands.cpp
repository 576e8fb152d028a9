#include "spectra/commands.hpp"

#include <time.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectra/constants.hpp"
#include "spectra/dimension.hpp"
#include "spectra/errors.hpp"
#include "spectra/parallel.hpp"
#include "spectra/perron.hpp"
#include "spectra/spec_document.hpp"
#include "spectra/subshift.hpp"
#include "spectra/verifier.hpp"

namespace spectra {

namespace {

using nlohmann::json;

double cpu_ms() {
  timespec ts{};
  clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) * 1e3 + static_cast<double>(ts.tv_nsec) / 1e6;
}

std::string exact_text(const SurdSum& s) {
  if (auto q = s.as_rational()) return to_string(*q);
  if (auto v = s.as_surd()) return v->to_string();
  return s.to_string();
}

std::string certified(const IntervalReal& e, int digits) { return e.certified_decimal(digits) + " [certified]"; }

std::string heuristic(double x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x << " [heuristic]";
  return s.str();
}

std::string grid_decimal(const Rational& q, const Rational& tol) {
  int digits = 0;
  for (Rational step = tol; step < 1 && digits < 40; step *= 10) ++digits;
  return truncated_decimal(q, digits);
}

SpecDocument resolve_spec(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) return builtin_spec_document(source.substr(8));
  return load_spec_document(source);
}

std::string word_text(const DigitWord& w) {
  bool small = std::all_of(w.begin(), w.end(), [](Digit d) { return d < 10; });
  return small ? w.to_plain() : w.to_string();
}

void write_json(const json& j, const std::string& target, std::ostream& out) {
  if (target == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream file(target);
  if (!file) throw ParseError("cannot write " + target, 0);
  file << j.dump(2) << "\n";
}

struct Options {
  long bits{256};
  unsigned threads{0};

  std::vector<std::string> literals;
  int digits{20};

  std::string biseq;
  std::optional<long> window;
  bool as_json{false};

  std::string spec;
  std::vector<std::size_t> n;
  std::string tol;
  bool use_heuristic{false};
  std::string format{"csv"};

  std::string only;
  std::string json_target;

  bool count{false};
  bool list{false};
};

int cmd_eval(const Options& o, std::ostream& out) {
  SurdSum total;
  for (const auto& text : o.literals) total += SurdSum(CFValue::parse(text).value());
  long bits = std::max<long>(o.bits, o.digits * 4L + 32);
  out << exact_text(total) << " ≈ " << certified(total.enclose(bits), o.digits) << "\n";
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  BiSeq b = BiSeq::parse(o.biseq);
  MarkovResult m = markov_value(b, o.bits, o.window);
  const MarkovCertificate& c = m.certificate;
  if (o.as_json) {
    json j;
    j["sequence"] = b.to_string();
    j["exact"] = exact_text(m.exact);
    j["decimal"] = m.value.certified_decimal(30);
    j["kind"] = m.kind == SupKind::Attained ? "attained" : "limit";
    j["witness"] = m.witness ? json(*m.witness) : json(nullptr);
    j["window"] = {c.window_lo, c.window_hi};
    j["positions_evaluated"] = c.positions_evaluated;
    j["limit_max"] = exact_text(c.limit_max);
    j["tail_bound_bits"] = c.tail_bound_bits;
    j["tail_bound_sufficient"] = c.tail_bound_sufficient;
    j["runner_up"] = c.runner_up ? json(*c.runner_up) : json(nullptr);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "sequence: " << b.to_string() << "\n";
  out << "m = " << exact_text(m.exact) << "\n";
  out << "  ≈ " << certified(m.value, 30) << "\n";
  if (m.kind == SupKind::Attained) out << "attained at position " << *m.witness << "\n";
  else out << "limit value, not attained\n";
  out << "window: [" << c.window_lo << ", " << c.window_hi << "), " << c.positions_evaluated << " positions\n";
  out << "largest periodic limit ≈ " << certified(c.limit_max.enclose(o.bits), 20) << "\n";
  out << "tail bound: 2^-" << c.tail_bound_bits << (c.tail_bound_sufficient ? " (separates the limits)" : " (does not separate the limits)")
      << "\n";
  if (c.runner_up) {
    CheckReport r;
    r.margin = c.runner_up_margin;
    out << "runner-up: position " << *c.runner_up << ", margin " << r.margin_decimal(6) << "\n";
  }
  return kExitOk;
}

int cmd_dimension(const Options& o, std::ostream& out, std::ostream& err) {
  SpecDocument doc = resolve_spec(o.spec);
  std::vector<std::size_t> ns = o.n.empty() ? doc.n_values : o.n;
  if (ns.empty()) throw ParseError("no level given; pass --n or set 'n' in the spec document", 0);
  Rational tol = o.tol.empty() ? doc.tolerance : parse_rational(o.tol);
  long bits = doc.precision_bits ? *doc.precision_bits : o.bits;
  json rows = json::array();

  if (o.use_heuristic) {
    if (o.format == "csv") out << "n,estimate,orbits,cpu_ms\n";
    for (std::size_t n : ns) {
      double start = cpu_ms();
      PressureResult p = pressure_root(doc.spec, n);
      double ms = cpu_ms() - start;
      std::ostringstream v;
      v << std::fixed << std::setprecision(10) << p.value;
      if (o.format == "csv") out << n << "," << v.str() << "," << p.orbits << "," << std::fixed << std::setprecision(1) << ms << "\n";
      else rows.push_back({{"n", n}, {"estimate", v.str()}, {"display", heuristic(p.value, 10)}, {"orbits", p.orbits}});
    }
    err << "note: pressure estimates are heuristic, not bounds\n";
  } else {
    if (o.format == "csv") out << "n,alpha,beta,width,cpu_ms\n";
    for (std::size_t n : ns) {
      double start = cpu_ms();
      DimensionBracket r = palis_takens_bounds(doc.spec, n, tol, bits);
      double ms = cpu_ms() - start;
      std::string a = grid_decimal(r.alpha, tol), b = grid_decimal(r.beta, tol);
      std::string w = grid_decimal(r.beta - r.alpha, tol);
      if (o.format == "csv") {
        out << n << "," << a << "," << b << "," << w << "," << std::fixed << std::setprecision(1) << ms << "\n";
      } else {
        rows.push_back({{"n", n}, {"alpha", a}, {"beta", b}, {"width", w}, {"cylinders", r.cylinders}, {"bits", r.bits}});
      }
    }
    if (doc.spec.mode == CantorSpec::Mode::Forbidden)
      err << "note: for a forbidden-factor set only beta is a certified bound\n";
  }
  if (o.format != "csv") out << rows.dump(2) << "\n";
  return kExitOk;
}

json report_json(const CheckReport& r) {
  json j;
  j["id"] = r.id;
  j["status"] = to_string(r.status);
  j["computed"] = r.computed;
  j["decimal"] = r.decimal;
  j["threshold"] = r.threshold;
  j["margin_decimal"] = r.margin ? json(r.margin_decimal()) : json(nullptr);
  j["note"] = r.note;
  return j;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<CheckReport> reports = run_ledger(o.only, o.bits);
  if (reports.empty()) throw ParseError("no check matches '" + o.only + "'", 0);
  std::size_t passed = 0, failed = 0, info = 0;
  std::optional<Rational> min_margin;
  std::string min_id;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::Pass) ++passed;
    else if (r.status == CheckStatus::Fail) ++failed;
    else ++info;
    if (r.status == CheckStatus::Pass && r.margin && (!min_margin || r.margin->lo() < *min_margin)) {
      min_margin = r.margin->lo();
      min_id = r.id;
    }
  }
  if (!o.json_target.empty()) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    write_json(arr, o.json_target, out);
    if (o.json_target == "-") return failed ? kExitCheckFailed : kExitOk;
  }
  for (const auto& r : reports) {
    out << std::left << std::setw(18) << r.id << std::setw(6) << to_string(r.status) << std::setw(20)
        << (r.margin ? r.margin_decimal(6) : "-") << r.computed;
    if (!r.threshold.empty()) out << "  vs " << r.threshold;
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
  }
  out << reports.size() << " checks: " << passed << " passed, " << failed << " failed, " << info << " informational\n";
  if (min_margin) {
    CheckReport m;
    m.margin = IntervalReal::point(*min_margin);
    out << "minimum margin " << m.margin_decimal(6) << " at " << min_id << "\n";
  }
  return failed ? kExitCheckFailed : kExitOk;
}

int cmd_words(const Options& o, std::ostream& out) {
  SpecDocument doc = resolve_spec(o.spec);
  std::vector<std::size_t> ns = o.n.empty() ? doc.n_values : o.n;
  if (ns.empty()) throw ParseError("no length given; pass --n", 0);
  for (std::size_t n : ns) {
    if (o.list) {
      if (doc.spec.mode == CantorSpec::Mode::Forbidden)
        enumerate_admissible(doc.spec.automaton(), n, [&](const DigitWord& w) { out << word_text(w) << "\n"; });
      else
        for (const auto& w : level_words(doc.spec, n)) out << word_text(w) << "\n";
    } else {
      Integer count = doc.spec.mode == CantorSpec::Mode::Forbidden ? count_admissible(*doc.spec.forbidden, n)
                                                                    : Integer(level_words(doc.spec, n).size());
      out << (ns.size() > 1 ? std::to_string(n) + " " : "") << count.get_str() << "\n";
    }
  }
  return kExitOk;
}

int cmd_constants(const Options& o, std::ostream& out) {
  namespace k = constants;
  std::vector<std::pair<std::string, SurdSum>> table = {
      {"b_inf", k::b_inf().exact()},     {"gamma", k::gamma().exact()},       {"alpha_inf", k::alpha_inf().exact()},
      {"alpha_4", k::alpha_n(4).exact()}, {"c", k::c().exact()},              {"B_inf", k::B_inf().exact()},
      {"alpha_2", k::alpha_n(2).exact()}, {"berstein_guess", k::berstein_guess().exact()},
      {"berstein_claim", k::berstein_claim().exact()}, {"c_F", SurdSum(k::freiman())}};
  json arr = json::array();
  for (const auto& [name, value] : table) {
    IntervalReal e = value.enclose(std::max<long>(o.bits, 128));
    if (o.as_json) {
      arr.push_back({{"name", name}, {"exact", exact_text(value)}, {"decimal", e.certified_decimal(20)}});
    } else {
      out << std::left << std::setw(16) << name << certified(e, 20) << "\n";
      out << std::setw(16) << "" << exact_text(value) << "\n";
    }
  }
  if (o.as_json) out << arr.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

long default_precision_bits() {
  if (const char* env = std::getenv("SPECTRA_PRECISION_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 32) return v;
  }
  return 256;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact continued-fraction spectra, Cantor-set dimensions and the check ledger", "spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  o.bits = default_precision_bits();
  app.add_option("--bits", o.bits, "Working precision in bits (default SPECTRA_PRECISION_BITS or 256)")
      ->check(CLI::Range(32L, 1L << 20));
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto* eval = app.add_subcommand("eval", "Exact value of a sum of continued-fraction literals");
  eval->add_option("literal", o.literals, "Literals such as \"2;1 2\" or \"0;(2)*\"")->required();
  eval->add_option("--digits", o.digits, "Decimal digits to print")->check(CLI::Range(1, 2000));

  auto* spectrum = app.add_subcommand("spectrum", "Certified Markov value of a bi-infinite sequence");
  spectrum->add_option("sequence", o.biseq, "Literal \"(LP)* LJ ; C^ ; RJ (RP)*\"")->required();
  spectrum->add_option("--window", o.window, "Window radius");
  spectrum->add_flag("--json", o.as_json, "Print a JSON object");

  auto* dimension = app.add_subcommand("dimension", "Dimension brackets for a Cantor set");
  dimension->add_option("spec", o.spec, "Spec document path, or builtin:K / builtin:X")->required();
  dimension->add_option("--n", o.n, "Levels (overrides the document)");
  dimension->add_option("--tol", o.tol, "Grid step such as 1e-6");
  dimension->add_flag("--heuristic", o.use_heuristic, "Pressure-root estimate instead of brackets");
  dimension->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Run the check ledger");
  verify->add_option("--only", o.only, "Whitespace- or comma-separated id globs");
  verify->add_option("--json", o.json_target, "Write the JSON report to a file ('-' for stdout)");

  auto* words = app.add_subcommand("words", "Count or list admissible words");
  words->add_option("spec", o.spec, "Spec document path, or builtin:K / builtin:X")->required();
  auto* count = words->add_flag("--count", o.count, "Print the number of words");
  words->add_flag("--list", o.list, "Print the words")->excludes(count);
  words->add_option("--n", o.n, "Word length (digits) or level (blocks)");

  auto* consts = app.add_subcommand("constants", "Certified values of the named constants");
  consts->add_flag("--json", o.as_json, "Print JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  set_thread_count(o.threads);

  try {
    if (*eval) return cmd_eval(o, out);
    if (*spectrum) return cmd_spectrum(o, out);
    if (*dimension) return cmd_dimension(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*words) return cmd_words(o, out);
    if (*consts) return cmd_constants(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const WindowInsufficient& e) {
    err << "incomplete: " << e.what() << "\n";
    return kExitIncomplete;
  } catch (const PrecisionError& e) {
    err << "incomplete: " << e.what() << "\n";
    return kExitIncomplete;
  } catch (const NoRootError& e) {
    err << "incomplete: " << e.what() << "\n";
    return kExitIncomplete;
  } catch (const DeadStateError& e) {
    err << "incomplete: " << e.what() << "\n";
    return kExitIncomplete;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spectra
