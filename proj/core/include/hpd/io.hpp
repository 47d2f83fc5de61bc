#pragma once

// JSON and CSV interchange. Inputs are accepted as a file path, inline JSON
// text (anything starting with '{' or '['), or a named shorthand. Errors are
// reported as InputError with a "source:line:col:" prefix.

#include <nlohmann/json.hpp>
#include <string>
#include <utility>

#include "hpd/circle.hpp"
#include "hpd/criterion.hpp"
#include "hpd/errors.hpp"
#include "hpd/hankel.hpp"
#include "hpd/kernel.hpp"
#include "hpd/predict.hpp"
#include "hpd/process.hpp"
#include "hpd/tree.hpp"

namespace hpd::io {

using nlohmann::json;

/// A parsed JSON document that can map JSON pointers back to source positions.
class Document {
 public:
  /// Reads `input` as a path unless it starts with '{' or '['.
  static Document load(const std::string& input);
  static Document from_text(std::string text, std::string source);

  const json& value() const { return value_; }
  const std::string& source() const { return source_; }
  /// "source:line:col" of the value at `pointer`, or of the document start.
  std::string where(const std::string& pointer) const;

 private:
  std::string source_;
  std::string text_;
  json value_;
};

/// Runs `parse(doc.value())`, turning schema errors into positioned InputErrors.
template <class Fn>
auto with_document(const Document& doc, Fn&& parse) -> decltype(parse(doc.value()));

// Measures: {"atoms":[{"theta","mass"}], "density": term or [terms]} where a
// term is {"kind":"trig","coeffs":[[n,re,im]...]}, {"kind":"grid","values":[...]}
// or {"kind":"poisson","r":r,"atoms":[...]}. Shorthands: "lebesgue",
// "atom0", "poisson:r" (P_r * delta_0) and "cos:a:b" (density a + b cos).
SpectralMeasure measure_from_json(const json& j);
SpectralMeasure parse_measure(const std::string& input);
json to_json(const SpectralMeasure& mu);

// Trigonometric polynomials: {"coeffs":[[n,re,im]...]}; shorthand "monomial:k".
TrigPoly trig_from_json(const json& j);
TrigPoly parse_trig(const std::string& input);
json to_json(const TrigPoly& f);

struct ParsedSymbol {
  TrigPoly poly;
  bool truncated = false;
};

// Hankel symbols: a trig polynomial, or a truncated series
// {"kind":"geometric","ratio":x,"terms":n} (phi^(-m) = x^m) or
// {"kind":"harmonic","terms":n} (phi^(-m) = 1/m), m = 1..n. A trig
// polynomial may carry "truncated": true.
ParsedSymbol symbol_from_json(const json& j);
ParsedSymbol parse_symbol(const std::string& input);

// Sequences: {"q":q,"alpha":[a0, a1, [re, im], ...]}; shorthands "beta" and
// "white" need q and n_max from the caller.
HpdSequence alpha_from_json(const json& j, int q);
HpdSequence parse_alpha(const std::string& input, int q, int n_max);
json to_json(const HpdSequence& alpha);

// Trees: {"kind":"homogeneous","q","depth"}, {"kind":"parent_array","parents"}
// or {"kind":"tq1","q","n"}.
GeneralRootedTree tree_from_json(const json& j);
GeneralRootedTree parse_tree(const std::string& input);

// Matrices: {"entries":[[x or [re, im], ...], ...], "labels":[...]}, the
// same layout to_json writes.
HermitianMatrix matrix_from_json(const json& j);
HermitianMatrix parse_matrix(const std::string& input);
json to_json(const HermitianMatrix& a);
/// Row-major, one "re,im" pair per entry.
std::string to_csv(const HermitianMatrix& a);
/// Header of labels, one row per sample.
std::string to_csv(const SampleBatch& batch);

/// A JSON array of numbers, or {"values": [...]}.
std::vector<double> parse_real_sequence(const std::string& input);

json to_json(const PsdResult& r);
json to_json(const HpdReport& r);
json to_json(const SzegoMean& r);
json to_json(const PoissonLogBound& r);
json to_json(const CriterionReport& r);
json to_json(const CnOracleReport& r);
json to_json(const TwoLevelBounds& r);
json to_json(const TwoLevelCheck& r);
json to_json(const SupNormReport& r);
json to_json(const FourierBoundReport& r);
json to_json(const PredictionReport& r);
json to_json(const Tq1Prediction& r);
json to_json(const InequalityReport& r);
json to_json(const SeriesTest& r);
json to_json(const BoundednessReport& r);
json to_json(const HlpPairing& r);
json to_json(const CovEstimate& r);

/// Doubles that JSON cannot hold (inf, nan) become strings.
json number(double x);
json complex_pair(Complex z);

// Implementation detail of with_document.
struct SchemaError : InputError {
  SchemaError(std::string pointer_, const std::string& message) : InputError(message), pointer(std::move(pointer_)) {}
  std::string pointer;
};

template <class Fn>
auto with_document(const Document& doc, Fn&& parse) -> decltype(parse(doc.value())) {
  try {
    return parse(doc.value());
  } catch (const SchemaError& e) {
    throw InputError(doc.where(e.pointer) + ": " + e.what());
  } catch (const json::exception& e) {
    throw InputError(doc.where("") + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(doc.where("") + ": " + e.what());
  }
}

}  // namespace hpd::io
