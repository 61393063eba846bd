#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trigalg/matrix.hpp"
#include "trigalg/verification.hpp"

namespace trigalg {

enum class EntryMode { exact, real, complex };

/// "exact", "float" or "complex".
std::string_view entry_mode_name(EntryMode mode);

/// A matrix with its modulus and a kind tag. Exactly one of the entry vectors
/// is populated, matching entry_mode, in row-major order.
struct MatrixDocument {
  int n = 0;
  std::string kind;
  std::size_t rows = 0;
  std::size_t cols = 0;
  EntryMode entry_mode = EntryMode::real;
  std::vector<ExactQuadratic> exact_entries;
  std::vector<double> real_entries;
  std::vector<Complex> complex_entries;

  static MatrixDocument from(int n, std::string kind, const ExactMatrix& m);
  static MatrixDocument from(int n, std::string kind, const RealMatrix& m);
  static MatrixDocument from(int n, std::string kind, const ComplexMatrix& m);
  /// A column document (rows = v.size(), cols = 1).
  static MatrixDocument column(int n, std::string kind, std::span<const Complex> v);

  /// Throws MalformedDocument when rows * cols disagrees with the entry count.
  void validate() const;

  ComplexMatrix to_complex_matrix() const;
  /// Entries in row-major order; the document must have one row or one column.
  ComplexVector to_complex_vector() const;

  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

std::string to_json(const MatrixDocument& doc);
/// Throws MalformedDocument on syntax or schema errors.
MatrixDocument parse_json_document(std::string_view text);

/// One line per row, comma separated, 17 significant digits. Exact entries are
/// rendered as decimals; complex entries occupy two columns (re, im).
std::string to_csv(const MatrixDocument& doc);

std::string to_json(const SuiteReport& report);

}  // namespace trigalg
