#include "hpd/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "hpd/errors.hpp"

namespace hpd::io {

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t col = 1;
};

Position position_at(const std::string& text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.col = 1;
    } else {
      ++p.col;
    }
  }
  return p;
}

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

// Records the offset at which every value starts, keyed by JSON pointer.
// The text is known to be valid JSON.
class OffsetScanner {
 public:
  explicit OffsetScanner(const std::string& text) : text_(text) {}

  std::map<std::string, std::size_t> run() {
    skip_ws();
    value("");
    return std::move(offsets_);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string string_token() {
    std::string out;
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') {
        out += text_[pos_++];
      }
      if (pos_ < text_.size()) out += text_[pos_++];
    }
    ++pos_;
    return out;
  }

  void value(const std::string& pointer) {
    offsets_.emplace(pointer, pos_);
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] != '}') {
        const std::string key = string_token();
        skip_ws();
        ++pos_;  // ':'
        skip_ws();
        value(pointer + "/" + escape_token(key));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          skip_ws();
        }
      }
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      skip_ws();
      std::size_t index = 0;
      while (pos_ < text_.size() && text_[pos_] != ']') {
        value(pointer + "/" + std::to_string(index++));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          skip_ws();
        }
      }
      ++pos_;
    } else if (c == '"') {
      string_token();
    } else {
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '}' &&
             !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> offsets_;
};

std::string join(const std::string& pointer, const std::string& token) { return pointer + "/" + escape_token(token); }
std::string join(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const json& field(const json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) throw SchemaError(pointer, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(pointer, "missing field '" + key + "'");
  return *it;
}

double number_at(const json& v, const std::string& pointer) {
  if (!v.is_number()) throw SchemaError(pointer, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw SchemaError(pointer, "expected a finite number");
  return x;
}

long long integer_at(const json& v, const std::string& pointer) {
  if (!v.is_number_integer()) throw SchemaError(pointer, "expected an integer");
  return v.get<long long>();
}

int int_at(const json& v, const std::string& pointer) {
  const long long x = integer_at(v, pointer);
  if (x < -1'000'000'000LL || x > 1'000'000'000LL) throw SchemaError(pointer, "integer out of range");
  return static_cast<int>(x);
}

const json& array_at(const json& v, const std::string& pointer) {
  if (!v.is_array()) throw SchemaError(pointer, "expected an array");
  return v;
}

Complex complex_at(const json& v, const std::string& pointer) {
  if (v.is_number()) return number_at(v, pointer);
  if (v.is_array() && v.size() == 2) return {number_at(v[0], join(pointer, 0)), number_at(v[1], join(pointer, 1))};
  throw SchemaError(pointer, "expected a number or a [re, im] pair");
}

std::vector<Atom> atoms_at(const json& v, const std::string& pointer) {
  std::vector<Atom> atoms;
  const json& arr = array_at(v, pointer);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = join(pointer, i);
    Atom a;
    a.theta = number_at(field(arr[i], "theta", p), join(p, "theta"));
    a.mass = number_at(field(arr[i], "mass", p), join(p, "mass"));
    if (!(a.mass > 0.0)) throw SchemaError(join(p, "mass"), "atom masses must be positive");
    atoms.push_back(a);
  }
  return atoms;
}

TrigPoly coeffs_at(const json& v, const std::string& pointer) {
  const json& arr = array_at(v, pointer);
  std::vector<std::pair<int, Complex>> terms;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = join(pointer, i);
    const json& entry = arr[i];
    if (!entry.is_array() || entry.size() < 2 || entry.size() > 3) {
      throw SchemaError(p, "coefficient entries are [n, re] or [n, re, im]");
    }
    const int n = int_at(entry[0], join(p, 0));
    const double re = number_at(entry[1], join(p, 1));
    const double im = entry.size() == 3 ? number_at(entry[2], join(p, 2)) : 0.0;
    terms.emplace_back(n, Complex(re, im));
  }
  return TrigPoly::from_terms(terms);
}

DensityTerm density_term_at(const json& v, const std::string& pointer) {
  if (!v.is_object()) throw SchemaError(pointer, "expected a density object");
  const json& kind = field(v, "kind", pointer);
  if (!kind.is_string()) throw SchemaError(join(pointer, "kind"), "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "trig") return TrigDensity{coeffs_at(field(v, "coeffs", pointer), join(pointer, "coeffs"))};
  if (k == "grid") {
    const std::string p = join(pointer, "values");
    const json& arr = array_at(field(v, "values", pointer), p);
    if (arr.empty()) throw SchemaError(p, "grid density needs at least one value");
    std::vector<double> values;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const double x = number_at(arr[i], join(p, i));
      if (x < 0.0) throw SchemaError(join(p, i), "grid density values must be non-negative");
      values.push_back(x);
    }
    return GridDensity{std::move(values)};
  }
  if (k == "poisson") {
    const double r = number_at(field(v, "r", pointer), join(pointer, "r"));
    if (!(r >= 0.0 && r < 1.0)) throw SchemaError(join(pointer, "r"), "r must lie in [0, 1)");
    return PoissonAtomDensity{r, atoms_at(field(v, "atoms", pointer), join(pointer, "atoms"))};
  }
  throw SchemaError(join(pointer, "kind"), "unknown density kind '" + k + "'");
}

json atoms_json(const std::vector<Atom>& atoms) {
  json out = json::array();
  for (const auto& a : atoms) out.push_back({{"theta", a.theta}, {"mass", a.mass}});
  return out;
}

json coeffs_json(const TrigPoly& f) {
  json out = json::array();
  for (int n = f.min_degree(); !f.is_zero() && n <= f.max_degree(); ++n) {
    const Complex c = f.coeff(n);
    if (c != Complex(0.0)) out.push_back({n, c.real(), c.imag()});
  }
  return out;
}

bool looks_inline(const std::string& input) {
  const auto first = input.find_first_not_of(" \t\r\n");
  return first != std::string::npos && (input[first] == '{' || input[first] == '[');
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(x)) throw InputError("bad number '" + text + "' in " + what);
  return x;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int x = 0;
  try {
    x = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InputError("bad integer '" + text + "' in " + what);
  return x;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

json opt(const std::optional<double>& x) { return x ? number(*x) : json(nullptr); }
json opt(const std::optional<int>& x) { return x ? json(*x) : json(nullptr); }
json opt(const std::optional<bool>& x) { return x ? json(*x) : json(nullptr); }

}  // namespace

// ------------------------------------------------------------------ Document

Document Document::load(const std::string& input) {
  if (looks_inline(input)) return from_text(input, "<inline>");
  std::ifstream in(input, std::ios::binary);
  if (!in) throw InputError(input + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str(), input);
}

Document Document::from_text(std::string text, std::string source) {
  Document doc;
  doc.source_ = std::move(source);
  doc.text_ = std::move(text);
  try {
    doc.value_ = json::parse(doc.text_);
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const Position p = position_at(doc.text_, offset);
    std::string message = e.what();
    const auto cut = message.find("parse error");
    if (cut != std::string::npos) message = message.substr(cut);
    throw InputError(doc.source_ + ":" + std::to_string(p.line) + ":" + std::to_string(p.col) + ": " + message);
  }
  return doc;
}

std::string Document::where(const std::string& pointer) const {
  const auto offsets = OffsetScanner(text_).run();
  std::size_t offset = 0;
  std::string key = pointer;
  // Fall back to the closest enclosing value that exists in the text.
  while (true) {
    const auto it = offsets.find(key);
    if (it != offsets.end()) {
      offset = it->second;
      break;
    }
    const auto slash = key.rfind('/');
    if (slash == std::string::npos) break;
    key = key.substr(0, slash);
  }
  const Position p = position_at(text_, offset);
  return source_ + ":" + std::to_string(p.line) + ":" + std::to_string(p.col);
}

// ------------------------------------------------------------------ measures

SpectralMeasure measure_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("", "a measure is a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "atoms" && key != "density") throw SchemaError(join("", key), "unknown measure field '" + key + "'");
  }
  std::vector<Atom> atoms;
  if (j.contains("atoms")) atoms = atoms_at(j["atoms"], "/atoms");
  std::vector<DensityTerm> terms;
  if (j.contains("density")) {
    const json& d = j["density"];
    if (d.is_array()) {
      for (std::size_t i = 0; i < d.size(); ++i) terms.push_back(density_term_at(d[i], join("/density", i)));
    } else if (!d.is_null()) {
      terms.push_back(density_term_at(d, "/density"));
    }
  }
  try {
    return SpectralMeasure(std::move(atoms), std::move(terms));
  } catch (const SchemaError&) {
    throw;
  } catch (const InputError& e) {
    throw SchemaError(j.contains("density") ? "/density" : "", e.what());
  }
}

SpectralMeasure parse_measure(const std::string& input) {
  if (input == "lebesgue") return SpectralMeasure::lebesgue();
  if (input == "atom0") return SpectralMeasure::atom(0.0);
  if (input.rfind("poisson:", 0) == 0) {
    const double r = parse_double(input.substr(8), "poisson:r");
    return poisson_convolve(SpectralMeasure::atom(0.0), r);
  }
  if (input.rfind("cos:", 0) == 0) {
    const auto parts = split(input.substr(4), ':');
    if (parts.size() != 2) throw InputError("expected cos:a:b");
    const double a = parse_double(parts[0], "cos:a:b");
    const double b = parse_double(parts[1], "cos:a:b");
    const std::pair<int, Complex> terms[] = {{-1, b / 2}, {0, a}, {1, b / 2}};
    return SpectralMeasure::trig_density(TrigPoly::from_terms(terms));
  }
  const Document doc = Document::load(input);
  return with_document(doc, [](const json& j) { return measure_from_json(j); });
}

json to_json(const SpectralMeasure& mu) {
  json density = json::array();
  for (const auto& term : mu.density_terms()) {
    if (auto* t = std::get_if<TrigDensity>(&term)) {
      density.push_back({{"kind", "trig"}, {"coeffs", coeffs_json(t->poly)}});
    } else if (auto* g = std::get_if<GridDensity>(&term)) {
      density.push_back({{"kind", "grid"}, {"values", g->values}});
    } else {
      const auto& p = std::get<PoissonAtomDensity>(term);
      density.push_back({{"kind", "poisson"}, {"r", p.radius}, {"atoms", atoms_json(p.atoms)}});
    }
  }
  return {{"atoms", atoms_json(mu.atoms())}, {"density", density}};
}

// ------------------------------------------------------- trig and symbols

TrigPoly trig_from_json(const json& j) {
  if (j.is_array()) return coeffs_at(j, "");
  return coeffs_at(field(j, "coeffs", ""), "/coeffs");
}

TrigPoly parse_trig(const std::string& input) {
  if (input.rfind("monomial:", 0) == 0) return TrigPoly::monomial(parse_int(input.substr(9), "monomial:k"));
  if (input == "zero") return TrigPoly{};
  const Document doc = Document::load(input);
  return with_document(doc, [](const json& j) { return trig_from_json(j); });
}

json to_json(const TrigPoly& f) { return {{"coeffs", coeffs_json(f)}}; }

ParsedSymbol symbol_from_json(const json& j) {
  if (j.is_object() && j.contains("kind")) {
    const json& kind = j["kind"];
    if (!kind.is_string()) throw SchemaError("/kind", "expected a string");
    const std::string k = kind.get<std::string>();
    const long long terms = integer_at(field(j, "terms", ""), "/terms");
    if (terms < 1 || terms > 1'000'000) throw SchemaError("/terms", "terms must lie in [1, 1e6]");
    std::vector<Complex> c(static_cast<std::size_t>(terms) + 1, 0.0);
    if (k == "geometric") {
      const double x = number_at(field(j, "ratio", ""), "/ratio");
      for (long long m = 1; m <= terms; ++m) c[static_cast<std::size_t>(terms - m)] = std::pow(x, static_cast<double>(m));
    } else if (k == "harmonic") {
      for (long long m = 1; m <= terms; ++m) c[static_cast<std::size_t>(terms - m)] = 1.0 / static_cast<double>(m);
    } else {
      throw SchemaError("/kind", "unknown symbol kind '" + k + "'");
    }
    return {TrigPoly(static_cast<int>(-terms), std::move(c)), true};
  }
  ParsedSymbol out{trig_from_json(j), false};
  if (j.is_object() && j.contains("truncated")) {
    if (!j["truncated"].is_boolean()) throw SchemaError("/truncated", "expected a boolean");
    out.truncated = j["truncated"].get<bool>();
  }
  return out;
}

ParsedSymbol parse_symbol(const std::string& input) {
  if (input.rfind("monomial:", 0) == 0) return {parse_trig(input), false};
  const Document doc = Document::load(input);
  return with_document(doc, [](const json& j) { return symbol_from_json(j); });
}

// --------------------------------------------------------------- sequences

HpdSequence alpha_from_json(const json& j, int q) {
  const json* values = &j;
  std::string pointer;
  if (j.is_object()) {
    if (j.contains("q")) q = int_at(j["q"], "/q");
    values = &field(j, "alpha", "");
    pointer = "/alpha";
  }
  const json& arr = array_at(*values, pointer);
  if (arr.empty()) throw SchemaError(pointer, "alpha needs at least one value");
  std::vector<Complex> v;
  for (std::size_t i = 0; i < arr.size(); ++i) v.push_back(complex_at(arr[i], join(pointer, i)));
  if (v[0].imag() != 0.0) throw SchemaError(join(pointer, 0), "alpha(0) must be real");
  if (q < 2) throw SchemaError(j.is_object() && j.contains("q") ? "/q" : "", "arity q must be >= 2");
  return HpdSequence(q, std::move(v));
}

HpdSequence parse_alpha(const std::string& input, int q, int n_max) {
  if (input == "beta") return HpdSequence::beta(q, n_max);
  if (input == "white") return HpdSequence::white_noise(q, n_max);
  const Document doc = Document::load(input);
  return with_document(doc, [q](const json& j) { return alpha_from_json(j, q); });
}

json to_json(const HpdSequence& alpha) {
  json values = json::array();
  for (const auto& a : alpha.values()) values.push_back(complex_pair(a));
  return {{"q", alpha.arity()}, {"alpha", values}};
}

// -------------------------------------------------------------------- trees

GeneralRootedTree tree_from_json(const json& j) {
  const json& kind = field(j, "kind", "");
  if (!kind.is_string()) throw SchemaError("/kind", "expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "homogeneous") {
      return GeneralRootedTree::homogeneous(int_at(field(j, "q", ""), "/q"), int_at(field(j, "depth", ""), "/depth"));
    }
    if (k == "tq1") return GeneralRootedTree::tq1(int_at(field(j, "q", ""), "/q"), int_at(field(j, "n", ""), "/n"));
    if (k == "parent_array") {
      const json& arr = array_at(field(j, "parents", ""), "/parents");
      std::vector<std::int64_t> parents;
      for (std::size_t i = 0; i < arr.size(); ++i) parents.push_back(integer_at(arr[i], join("/parents", i)));
      return GeneralRootedTree::from_parents(parents);
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const InputError& e) {
    throw SchemaError("", e.what());
  }
  throw SchemaError("/kind", "unknown tree kind '" + k + "'");
}

GeneralRootedTree parse_tree(const std::string& input) {
  const Document doc = Document::load(input);
  return with_document(doc, [](const json& j) { return tree_from_json(j); });
}

// ---------------------------------------------------------------- matrices

HermitianMatrix matrix_from_json(const json& j) {
  const json& rows = array_at(field(j, "entries", ""), "/entries");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::string p = join("/entries", static_cast<std::size_t>(i));
    const json& row = array_at(rows[static_cast<std::size_t>(i)], p);
    if (static_cast<Eigen::Index>(row.size()) != n) throw SchemaError(p, "matrix rows must have length " + std::to_string(n));
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = complex_at(row[static_cast<std::size_t>(k)], join(p, static_cast<std::size_t>(k)));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& arr = array_at(j["labels"], "/labels");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_string()) throw SchemaError(join("/labels", i), "expected a string");
      labels.push_back(arr[i].get<std::string>());
    }
  }
  try {
    return HermitianMatrix(std::move(m), std::move(labels));
  } catch (const InputError& e) {
    throw SchemaError("/entries", e.what());
  }
}

HermitianMatrix parse_matrix(const std::string& input) {
  const Document doc = Document::load(input);
  return with_document(doc, [](const json& j) { return matrix_from_json(j); });
}

std::vector<double> parse_real_sequence(const std::string& input) {
  const Document doc = Document::load(input);
  return with_document(doc, [](const json& j) {
    const json* arr = &j;
    std::string pointer;
    if (j.is_object()) {
      arr = &field(j, "values", "");
      pointer = "/values";
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < array_at(*arr, pointer).size(); ++i) out.push_back(number_at((*arr)[i], join(pointer, i)));
    return out;
  });
}

json to_json(const HermitianMatrix& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.size(); ++j) row.push_back(complex_pair(a(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"size", a.size()}, {"labels", a.labels()}, {"entries", rows}};
}

namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

}  // namespace

std::string to_csv(const HermitianMatrix& a) {
  std::string out;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < a.size(); ++j) {
      if (j > 0) out += ',';
      out += fmt(a(i, j).real()) + ',' + fmt(a(i, j).imag());
    }
    out += '\n';
  }
  return out;
}

std::string to_csv(const SampleBatch& batch) {
  std::string out;
  for (std::size_t i = 0; i < batch.labels.size(); ++i) {
    if (i > 0) out += ',';
    out += batch.labels[i];
  }
  out += '\n';
  for (Eigen::Index s = 0; s < batch.samples.rows(); ++s) {
    for (Eigen::Index c = 0; c < batch.samples.cols(); ++c) {
      if (c > 0) out += ',';
      out += fmt(batch.samples(s, c));
    }
    out += '\n';
  }
  return out;
}

// ----------------------------------------------------------------- reports

json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

json complex_pair(Complex z) { return json::array({number(z.real()), number(z.imag())}); }

json to_json(const PsdResult& r) {
  return {{"psd", r.psd}, {"min_eigenvalue", number(r.min_eigenvalue)}, {"threshold", number(r.threshold)}};
}

json to_json(const HpdReport& r) {
  return {{"consistent", r.consistent},
          {"order", r.order},
          {"method", to_string(r.method)},
          {"summary", r.summary()},
          {"decay_violation", opt(r.decay_violation)},
          {"toeplitz_min_eigenvalue", opt(r.toeplitz_min_eigenvalue)},
          {"oracle_depth", opt(r.oracle_depth)},
          {"tree_min_eigenvalue", opt(r.tree_min_eigenvalue)},
          {"tree_agrees", opt(r.tree_agrees)}};
}

json to_json(const SzegoMean& r) {
  return {{"value", number(r.value)},
          {"log_integral", number(r.log_integral)},
          {"vanished", r.vanished},
          {"floored_points", r.floored_points},
          {"method", r.method}};
}

json to_json(const PoissonLogBound& r) {
  return {{"lhs", number(r.lhs)}, {"rhs", number(r.rhs)}, {"holds", r.holds}};
}

json to_json(const CriterionReport& r) {
  return {{"lhs", number(r.lhs)},
          {"rhs", number(r.rhs)},
          {"holds", r.holds},
          {"margin", number(r.margin)},
          {"tolerance", number(r.tolerance)}};
}

json to_json(const CnOracleReport& r) {
  json eigs = json::array();
  for (double x : r.min_eigenvalues) eigs.push_back(number(x));
  return {{"all_psd", r.all_psd}, {"first_failure", opt(r.first_failure)}, {"min_eigenvalues", eigs}};
}

json to_json(const TwoLevelBounds& r) {
  return {{"lower", r.lower},
          {"upper", r.upper},
          {"equality_lower", r.equality_lower},
          {"equality_upper", r.equality_upper}};
}

json to_json(const TwoLevelCheck& r) {
  return {{"ratio", r.ratio}, {"geometric_mean", r.geometric_mean}, {"mass", r.mass},
          {"rhs", r.rhs},     {"holds", r.holds},                   {"margin", r.margin}};
}

json to_json(const SupNormReport& r) {
  return {{"sup", r.sup}, {"bound", r.bound}, {"sufficient", r.sufficient}, {"criterion", to_json(r.criterion)}};
}

json to_json(const FourierBoundReport& r) {
  return {{"violations", r.violations}, {"squared_coefficients", r.squared_coefficients}, {"delta", r.delta}};
}

json to_json(const PredictionReport& r) {
  json oracle = json::array();
  for (const auto& o : r.oracle) {
    oracle.push_back(
        {{"depth", o.depth}, {"vertices", o.vertices}, {"distance", number(o.distance)}, {"method", o.method}});
  }
  return {{"szego_value", number(r.szego_value)},
          {"oracle", oracle},
          {"converged", r.converged},
          {"decreasing", r.decreasing},
          {"gap", number(r.gap)}};
}

json to_json(const Tq1Prediction& r) {
  return {{"valid", r.valid}, {"value", opt(r.value)}, {"clipped", r.clipped}, {"criterion", to_json(r.criterion)}};
}

json to_json(const InequalityReport& r) {
  return {{"which", to_string(r.which)},
          {"sup_ratio", number(r.sup_ratio)},
          {"bound", number(r.bound)},
          {"slack", number(r.slack)},
          {"holds", r.holds},
          {"argmax_theta", r.argmax_theta},
          {"truncation_error", number(r.truncation_error)},
          {"min_denominator", number(r.min_denominator)},
          {"grid", r.grid},
          {"certification", r.certification}};
}

json to_json(const SeriesTest& r) {
  json partial = json::array();
  for (double x : r.partial_sums) partial.push_back(number(x));
  return {{"value", number(r.value)}, {"trend", to_string(r.trend)}, {"partial_sums", partial}};
}

json to_json(const BoundednessReport& r) {
  return {{"truncated", r.truncated},
          {"h_half", to_json(r.h_half)},
          {"h_one", to_json(r.h_one)},
          {"positive_coefficients", r.positive_coefficients},
          {"positive_test", r.positive_test ? to_json(*r.positive_test) : json(nullptr)},
          {"verdict", to_string(r.verdict)},
          {"basis", r.basis}};
}

json to_json(const HlpPairing& r) {
  return {{"pairing", number(r.pairing)}, {"bound", number(r.bound)}, {"holds", r.holds}};
}

json to_json(const CovEstimate& r) {
  return {{"pair", {r.i, r.j}},
          {"mean_i", number(r.mean_i)},
          {"mean_j", number(r.mean_j)},
          {"estimate", number(r.covariance)},
          {"ci99", number(r.half_width)}};
}

}  // namespace hpd::io
