#include "spectra/spec_document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "spectra/constants.hpp"
#include "spectra/errors.hpp"

namespace spectra {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw ParseError("spec document: " + what, 0); }

DigitWord word_from(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return DigitWord::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      bad(where + ": " + e.what());
    }
  }
  if (j.is_array()) {
    std::vector<Digit> digits;
    for (const auto& d : j) {
      if (!d.is_number_integer() || d.get<long>() < 1) bad(where + ": digits must be positive integers");
      digits.push_back(d.get<long>());
    }
    return DigitWord(std::move(digits));
  }
  bad(where + ": expected a word string or an array of digits");
}

std::vector<DigitWord> words_from(const json& j, const std::string& key) {
  if (!j.is_array()) bad("'" + key + "' must be an array");
  std::vector<DigitWord> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(word_from(j[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

std::size_t positive_size(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long>() < 1) bad(where + " must be a positive integer");
  return static_cast<std::size_t>(j.get<long>());
}

std::vector<std::size_t> n_from(const json& j) {
  if (j.is_number_integer()) return {positive_size(j, "'n'")};
  std::vector<std::size_t> out;
  if (j.is_array()) {
    for (const auto& v : j) out.push_back(positive_size(v, "'n' entry"));
    if (out.empty()) bad("'n' is empty");
    return out;
  }
  if (j.is_object()) {
    for (const auto& [key, _] : j.items())
      if (key != "from" && key != "to" && key != "step") bad("unknown key 'n." + key + "'");
    if (!j.contains("from") || !j.contains("to")) bad("'n' range needs 'from' and 'to'");
    std::size_t from = positive_size(j["from"], "'n.from'");
    std::size_t to = positive_size(j["to"], "'n.to'");
    std::size_t step = j.contains("step") ? positive_size(j["step"], "'n.step'") : 1;
    if (to < from) bad("'n.to' is below 'n.from'");
    for (std::size_t n = from; n <= to; n += step) out.push_back(n);
    return out;
  }
  bad("'n' must be an integer, an array or a {from, to, step} range");
}

Rational tolerance_from(const json& j) {
  Rational t;
  try {
    if (j.is_string()) t = parse_rational(j.get<std::string>());
    else if (j.is_number()) t = parse_rational(j.dump());
    else bad("'tolerance' must be a string or a number");
  } catch (const ParseError& e) {
    bad(std::string("'tolerance': ") + e.what());
  }
  if (t <= 0) bad("'tolerance' must be positive");
  return t;
}

}  // namespace

SpecDocument parse_spec_document(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("spec document: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object()) bad("top level must be an object");
  static const std::set<std::string> known = {"mode",      "name", "blocks",   "forbidden",
                                              "alphabet_max", "precision_bits", "n", "tolerance"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) bad("unknown key '" + key + "'");
  if (!j.contains("mode") || !j["mode"].is_string()) bad("'mode' must be \"blocks\" or \"forbidden\"");

  SpecDocument doc;
  std::string mode = j["mode"].get<std::string>();
  if (j.contains("name") && !j["name"].is_string()) bad("'name' must be a string");
  std::string name = j.contains("name") ? j["name"].get<std::string>() : std::string();
  if (j.contains("alphabet_max")) {
    if (!j["alphabet_max"].is_number_integer() || j["alphabet_max"].get<long>() < 1)
      bad("'alphabet_max' must be a positive integer");
    doc.alphabet_max = j["alphabet_max"].get<long>();
  }
  try {
    if (mode == "blocks") {
      if (!j.contains("blocks") || j.contains("forbidden")) bad("blocks mode takes 'blocks' and no 'forbidden'");
      auto blocks = words_from(j["blocks"], "blocks");
      if (blocks.empty()) bad("'blocks' is empty");
      for (const auto& b : blocks) {
        if (b.empty()) bad("empty block");
        for (Digit d : b)
          if (d > doc.alphabet_max) bad("block " + b.to_string() + " leaves the alphabet");
      }
      doc.spec = CantorSpec::from_blocks(std::move(blocks), name);
    } else if (mode == "forbidden") {
      if (!j.contains("forbidden") || j.contains("blocks")) bad("forbidden mode takes 'forbidden' and no 'blocks'");
      doc.spec = CantorSpec::from_forbidden(ForbiddenSet(words_from(j["forbidden"], "forbidden"), doc.alphabet_max), name);
    } else {
      bad("unknown mode '" + mode + "'");
    }
  } catch (const ConstructionError& e) {
    bad(e.what());
  }
  if (j.contains("precision_bits")) {
    if (!j["precision_bits"].is_number_integer() || j["precision_bits"].get<long>() < 32)
      bad("'precision_bits' must be an integer >= 32");
    doc.precision_bits = j["precision_bits"].get<long>();
  }
  if (j.contains("n")) doc.n_values = n_from(j["n"]);
  if (j.contains("tolerance")) doc.tolerance = tolerance_from(j["tolerance"]);
  return doc;
}

SpecDocument load_spec_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec document " + path, 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_document(buffer.str());
}

std::string to_json(const SpecDocument& doc) {
  json j;
  const CantorSpec& s = doc.spec;
  j["mode"] = s.mode == CantorSpec::Mode::Blocks ? "blocks" : "forbidden";
  if (!s.name.empty()) j["name"] = s.name;
  json words = json::array();
  if (s.mode == CantorSpec::Mode::Blocks) {
    for (const auto& b : s.blocks) words.push_back(b.to_string());
    j["blocks"] = words;
  } else {
    for (const auto& w : s.forbidden->words()) words.push_back(w.to_string());
    j["forbidden"] = words;
  }
  j["alphabet_max"] = doc.alphabet_max;
  if (doc.precision_bits) j["precision_bits"] = *doc.precision_bits;
  if (!doc.n_values.empty()) j["n"] = doc.n_values;
  j["tolerance"] = to_string(doc.tolerance);
  return j.dump(2);
}

SpecDocument builtin_spec_document(const std::string& name) {
  SpecDocument doc;
  if (name == "K") {
    doc.spec = CantorSpec::from_blocks({DigitWord{1}, DigitWord{2, 2}}, "K({1, 2_2})");
    doc.n_values = {12};
  } else if (name == "X") {
    doc.spec = CantorSpec::from_forbidden(constants::forbidden_P(), "X");
    doc.n_values = {4, 8, 12, 16};
  } else {
    throw ParseError("unknown built-in spec '" + name + "'", 0);
  }
  return doc;
}

}  // namespace spectra
