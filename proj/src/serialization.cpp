#include "trigalg/serialization.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "trigalg/errors.hpp"

namespace trigalg {

using nlohmann::json;

std::string_view entry_mode_name(EntryMode mode) {
  switch (mode) {
    case EntryMode::exact: return "exact";
    case EntryMode::real: return "float";
    case EntryMode::complex: return "complex";
  }
  return "float";
}

namespace {

EntryMode parse_mode(const std::string& name) {
  if (name == "exact") return EntryMode::exact;
  if (name == "float") return EntryMode::real;
  if (name == "complex") return EntryMode::complex;
  throw MalformedDocument("unknown entry_mode '" + name + "'");
}

template <typename T>
std::vector<T> flatten(const Matrix<T>& m) {
  return {m.data().begin(), m.data().end()};
}

std::size_t entry_count(const MatrixDocument& d) {
  switch (d.entry_mode) {
    case EntryMode::exact: return d.exact_entries.size();
    case EntryMode::real: return d.real_entries.size();
    case EntryMode::complex: return d.complex_entries.size();
  }
  return 0;
}

const json& field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw MalformedDocument(std::string("missing field '") + name + "'");
  return *it;
}

std::int64_t integer_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw MalformedDocument(std::string("field '") + name + "' must be an integer");
  return v.get<std::int64_t>();
}

double number_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number()) throw MalformedDocument(std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

std::string decimal(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

MatrixDocument MatrixDocument::from(int n, std::string kind, const ExactMatrix& m) {
  MatrixDocument d{n, std::move(kind), m.rows(), m.cols(), EntryMode::exact, flatten(m), {}, {}};
  return d;
}

MatrixDocument MatrixDocument::from(int n, std::string kind, const RealMatrix& m) {
  return {n, std::move(kind), m.rows(), m.cols(), EntryMode::real, {}, flatten(m), {}};
}

MatrixDocument MatrixDocument::from(int n, std::string kind, const ComplexMatrix& m) {
  return {n, std::move(kind), m.rows(), m.cols(), EntryMode::complex, {}, {}, flatten(m)};
}

MatrixDocument MatrixDocument::column(int n, std::string kind, std::span<const Complex> v) {
  return {n, std::move(kind), v.size(), 1, EntryMode::complex, {}, {}, {v.begin(), v.end()}};
}

void MatrixDocument::validate() const {
  if (rows * cols != entry_count(*this)) {
    throw MalformedDocument("document declares " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " but holds " + std::to_string(entry_count(*this)) + " entries");
  }
}

ComplexMatrix MatrixDocument::to_complex_matrix() const {
  validate();
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    Complex v;
    switch (entry_mode) {
      case EntryMode::exact: v = exact_entries[i].to_double(); break;
      case EntryMode::real: v = real_entries[i]; break;
      case EntryMode::complex: v = complex_entries[i]; break;
    }
    m(i / cols, i % cols) = v;
  }
  return m;
}

ComplexVector MatrixDocument::to_complex_vector() const {
  if (rows != 1 && cols != 1) {
    throw MalformedDocument("expected a vector document, got " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  }
  const ComplexMatrix m = to_complex_matrix();
  return {m.data().begin(), m.data().end()};
}

std::string to_json(const MatrixDocument& doc) {
  doc.validate();
  json entries = json::array();
  switch (doc.entry_mode) {
    case EntryMode::exact:
      for (const auto& e : doc.exact_entries) entries.push_back({{"a", e.rational_part()}, {"b", e.sqrt2_part()}});
      break;
    case EntryMode::real:
      for (double e : doc.real_entries) entries.push_back(e);
      break;
    case EntryMode::complex:
      for (const auto& e : doc.complex_entries) entries.push_back({{"re", e.real()}, {"im", e.imag()}});
      break;
  }
  json j{{"n", doc.n},
         {"kind", doc.kind},
         {"rows", doc.rows},
         {"cols", doc.cols},
         {"entry_mode", entry_mode_name(doc.entry_mode)},
         {"entries", std::move(entries)}};
  return j.dump(2) + "\n";
}

MatrixDocument parse_json_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedDocument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedDocument("document must be a JSON object");

  MatrixDocument d;
  d.n = static_cast<int>(integer_field(j, "n"));
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw MalformedDocument("field 'kind' must be a string");
  d.kind = kind.get<std::string>();
  const auto rows = integer_field(j, "rows");
  const auto cols = integer_field(j, "cols");
  if (rows < 0 || cols < 0) throw MalformedDocument("negative dimensions");
  d.rows = static_cast<std::size_t>(rows);
  d.cols = static_cast<std::size_t>(cols);
  const json& mode = field(j, "entry_mode");
  if (!mode.is_string()) throw MalformedDocument("field 'entry_mode' must be a string");
  d.entry_mode = parse_mode(mode.get<std::string>());

  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw MalformedDocument("field 'entries' must be an array");
  for (const json& e : entries) {
    switch (d.entry_mode) {
      case EntryMode::exact:
        if (!e.is_object()) throw MalformedDocument("exact entries must be {a, b} objects");
        d.exact_entries.emplace_back(integer_field(e, "a"), integer_field(e, "b"));
        break;
      case EntryMode::real:
        if (!e.is_number()) throw MalformedDocument("float entries must be numbers");
        d.real_entries.push_back(e.get<double>());
        break;
      case EntryMode::complex:
        if (!e.is_object()) throw MalformedDocument("complex entries must be {re, im} objects");
        d.complex_entries.emplace_back(number_field(e, "re"), number_field(e, "im"));
        break;
    }
  }
  d.validate();
  return d;
}

std::string to_csv(const MatrixDocument& doc) {
  doc.validate();
  std::string out;
  for (std::size_t r = 0; r < doc.rows; ++r) {
    for (std::size_t c = 0; c < doc.cols; ++c) {
      if (c > 0) out += ',';
      const std::size_t i = r * doc.cols + c;
      switch (doc.entry_mode) {
        case EntryMode::exact: out += decimal(doc.exact_entries[i].to_double()); break;
        case EntryMode::real: out += decimal(doc.real_entries[i]); break;
        case EntryMode::complex:
          out += decimal(doc.complex_entries[i].real()) + ',' + decimal(doc.complex_entries[i].imag());
          break;
      }
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const SuiteReport& report) {
  auto line = [](const CheckResult& c) {
    json j{{"name", c.name}, {"n", c.n}, {"tolerance", c.tolerance}, {"pass", c.passed}};
    // JSON has no infinity; a check that threw reports null.
    if (std::isfinite(c.max_residual)) j["max_residual"] = c.max_residual;
    else j["max_residual"] = nullptr;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
  };
  json checks = json::array();
  json failures = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(line(c));
    if (!c.passed) failures.push_back(line(c));
  }
  json j{{"n_range", {report.n_min, report.n_max}},
         {"seed", report.seed},
         {"checks", std::move(checks)},
         {"failures", std::move(failures)}};
  return j.dump(2) + "\n";
}

}  // namespace trigalg
