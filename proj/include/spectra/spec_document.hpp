#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/dimension.hpp"
#include "spectra/numeric.hpp"

namespace spectra {

/// A Cantor set description read from a JSON document.  See docs/spec_document.md
/// for the schema; unknown keys are rejected with a ParseError.
struct SpecDocument {
  CantorSpec spec;
  Digit alphabet_max{2};
  std::optional<long> precision_bits;
  std::vector<std::size_t> n_values;
  Rational tolerance{1, 1000000};
};

SpecDocument parse_spec_document(std::string_view json_text);
SpecDocument load_spec_document(const std::string& path);

/// The document that parses back to `doc`.
std::string to_json(const SpecDocument& doc);

/// Built-in documents: "K" for K({1, 2_2}) and "X" for the forbidden set P.
SpecDocument builtin_spec_document(const std::string& name);

}  // namespace spectra
