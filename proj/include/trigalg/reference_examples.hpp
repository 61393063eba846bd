#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "trigalg/matrix.hpp"

namespace trigalg {

/// constant + sum_v coeff[v] * p_v over exact scalars, where p_v is a named
/// parameter (t_v or s_v). Used to state displayed parametrized matrices.
struct LinearForm {
  ExactQuadratic constant;
  std::map<int, ExactQuadratic> coeffs;

  ExactQuadratic coefficient(int v) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Parses expressions such as "0", "-1", "r2", "r2*t1", "t0+t2",
/// "s1+s3+s5-s4-s2". "r2" denotes sqrt 2; any lowercase letter followed by a
/// number names a parameter. Throws std::invalid_argument on bad syntax.
LinearForm parse_linear_form(std::string_view text);

using SymbolicMatrix = Matrix<LinearForm>;

SymbolicMatrix parse_symbolic(const std::vector<std::vector<std::string_view>>& rows);

/// Matrix of constants; throws std::invalid_argument if a parameter appears.
ExactMatrix parse_exact(const std::vector<std::vector<std::string_view>>& rows);

/// The matrix of coefficients of parameter v.
ExactMatrix coefficient_matrix(const SymbolicMatrix& m, int v);

/// Worked examples, transcribed entry for entry from their displays.
namespace reference {

ExactMatrix cosine_basis_n7_i3();
ExactMatrix cosine_basis_n8_i3();
SymbolicMatrix cosine_general_n10();
std::vector<ExactMatrix> cosine_basis_n10();  // T_0..T_5
SymbolicMatrix cosine_general_n11();
std::vector<ExactMatrix> cosine_basis_n11();  // T_0..T_5

SymbolicMatrix sine_s_general_n11();
std::vector<ExactMatrix> sine_s_basis_n11();  // S_1..S_5
SymbolicMatrix sine_t_general_n11();
/// T_1..T_5 as displayed; these are the negatives of x_{i,j-k} - x_{i,j+k}.
std::vector<ExactMatrix> sine_t_basis_n11_displayed();

}  // namespace reference

}  // namespace trigalg
