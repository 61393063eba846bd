#include "trigalg/reference_examples.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace trigalg {

ExactQuadratic LinearForm::coefficient(int v) const {
  auto it = coeffs.find(v);
  return it == coeffs.end() ? ExactQuadratic{} : it->second;
}

namespace {

// Recursive-descent over: form := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := integer | "r2" | letter digits.
class FormParser {
 public:
  explicit FormParser(std::string_view text) : text_(text) {}

  LinearForm parse() {
    LinearForm out;
    skip_space();
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = take() == '-';
    term(out, negate);
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      const char op = take();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      term(out, op == '-');
    }
    return out;
  }

 private:
  void term(LinearForm& out, bool negate) {
    ExactQuadratic coeff = negate ? -1 : 1;
    int var = -1;
    while (true) {
      skip_space();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= ExactQuadratic(number());
      } else if (c == 'r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '2') {
        pos_ += 2;
        coeff *= ExactQuadratic::sqrt2();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        if (var >= 0) fail("product of two parameters");
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("parameter needs an index");
        var = static_cast<int>(number());
      } else {
        fail("expected a factor");
      }
      skip_space();
      if (peek() != '*') break;
      ++pos_;
    }
    if (var < 0) {
      out.constant += coeff;
    } else {
      out.coeffs[var] += coeff;
      if (out.coeffs[var].is_zero()) out.coeffs.erase(var);
    }
  }

  std::int64_t number() {
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (take() - '0');
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument("linear form \"" + std::string(text_) + "\" at " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

using Rows = std::vector<std::vector<std::string_view>>;

}  // namespace

LinearForm parse_linear_form(std::string_view text) { return FormParser(text).parse(); }

SymbolicMatrix parse_symbolic(const Rows& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  SymbolicMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged symbolic matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = parse_linear_form(rows[i][j]);
  }
  return m;
}

ExactMatrix parse_exact(const Rows& rows) {
  const SymbolicMatrix s = parse_symbolic(rows);
  ExactMatrix m(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (!s(i, j).coeffs.empty()) throw std::invalid_argument("parameter in constant matrix");
      m(i, j) = s(i, j).constant;
    }
  }
  return m;
}

ExactMatrix coefficient_matrix(const SymbolicMatrix& m, int v) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).coefficient(v);
  return out;
}

namespace reference {

ExactMatrix cosine_basis_n7_i3() {
  return parse_exact({
      {"0", "0", "0", "r2"},
      {"0", "0", "1", "1"},
      {"0", "1", "1", "0"},
      {"r2", "1", "0", "0"},
  });
}

ExactMatrix cosine_basis_n8_i3() {
  return parse_exact({
      {"0", "0", "0", "r2", "0"},
      {"0", "0", "1", "0", "r2"},
      {"0", "1", "0", "1", "0"},
      {"r2", "0", "1", "0", "0"},
      {"0", "r2", "0", "0", "0"},
  });
}

SymbolicMatrix cosine_general_n10() {
  return parse_symbolic({
      {"t0", "r2*t1", "r2*t2", "r2*t3", "r2*t4", "t5"},
      {"r2*t1", "t0+t2", "t1+t3", "t2+t4", "t3+t5", "r2*t4"},
      {"r2*t2", "t1+t3", "t0+t4", "t1+t5", "t2+t4", "r2*t3"},
      {"r2*t3", "t2+t4", "t1+t5", "t0+t4", "t1+t3", "r2*t2"},
      {"r2*t4", "t3+t5", "t2+t4", "t1+t3", "t0+t2", "r2*t1"},
      {"t5", "r2*t4", "r2*t3", "r2*t2", "r2*t1", "t0"},
  });
}

std::vector<ExactMatrix> cosine_basis_n10() {
  return {
      ExactMatrix::identity(6),
      parse_exact({
          {"0", "r2", "0", "0", "0", "0"},
          {"r2", "0", "1", "0", "0", "0"},
          {"0", "1", "0", "1", "0", "0"},
          {"0", "0", "1", "0", "1", "0"},
          {"0", "0", "0", "1", "0", "r2"},
          {"0", "0", "0", "0", "r2", "0"},
      }),
      parse_exact({
          {"0", "0", "r2", "0", "0", "0"},
          {"0", "1", "0", "1", "0", "0"},
          {"r2", "0", "0", "0", "1", "0"},
          {"0", "1", "0", "0", "0", "r2"},
          {"0", "0", "1", "0", "1", "0"},
          {"0", "0", "0", "r2", "0", "0"},
      }),
      parse_exact({
          {"0", "0", "0", "r2", "0", "0"},
          {"0", "0", "1", "0", "1", "0"},
          {"0", "1", "0", "0", "0", "r2"},
          {"r2", "0", "0", "0", "1", "0"},
          {"0", "1", "0", "1", "0", "0"},
          {"0", "0", "r2", "0", "0", "0"},
      }),
      parse_exact({
          {"0", "0", "0", "0", "r2", "0"},
          {"0", "0", "0", "1", "0", "r2"},
          {"0", "0", "1", "0", "1", "0"},
          {"0", "1", "0", "1", "0", "0"},
          {"r2", "0", "1", "0", "0", "0"},
          {"0", "r2", "0", "0", "0", "0"},
      }),
      parse_exact({
          {"0", "0", "0", "0", "0", "1"},
          {"0", "0", "0", "0", "1", "0"},
          {"0", "0", "0", "1", "0", "0"},
          {"0", "0", "1", "0", "0", "0"},
          {"0", "1", "0", "0", "0", "0"},
          {"1", "0", "0", "0", "0", "0"},
      }),
  };
}

SymbolicMatrix cosine_general_n11() {
  return parse_symbolic({
      {"t0", "r2*t1", "r2*t2", "r2*t3", "r2*t4", "r2*t5"},
      {"r2*t1", "t0+t2", "t1+t3", "t2+t4", "t3+t5", "t4+t5"},
      {"r2*t2", "t1+t3", "t0+t4", "t1+t5", "t2+t5", "t3+t4"},
      {"r2*t3", "t2+t4", "t1+t5", "t0+t5", "t1+t4", "t2+t3"},
      {"r2*t4", "t3+t5", "t2+t5", "t1+t4", "t0+t3", "t1+t2"},
      {"r2*t5", "t4+t5", "t3+t4", "t2+t3", "t1+t2", "t0+t1"},
  });
}

std::vector<ExactMatrix> cosine_basis_n11() {
  return {
      ExactMatrix::identity(6),
      parse_exact({
          {"0", "r2", "0", "0", "0", "0"},
          {"r2", "0", "1", "0", "0", "0"},
          {"0", "1", "0", "1", "0", "0"},
          {"0", "0", "1", "0", "1", "0"},
          {"0", "0", "0", "1", "0", "1"},
          {"0", "0", "0", "0", "1", "1"},
      }),
      parse_exact({
          {"0", "0", "r2", "0", "0", "0"},
          {"0", "1", "0", "1", "0", "0"},
          {"r2", "0", "0", "0", "1", "0"},
          {"0", "1", "0", "0", "0", "1"},
          {"0", "0", "1", "0", "0", "1"},
          {"0", "0", "0", "1", "1", "0"},
      }),
      parse_exact({
          {"0", "0", "0", "r2", "0", "0"},
          {"0", "0", "1", "0", "1", "0"},
          {"0", "1", "0", "0", "0", "1"},
          {"r2", "0", "0", "0", "0", "1"},
          {"0", "1", "0", "0", "1", "0"},
          {"0", "0", "1", "1", "0", "0"},
      }),
      parse_exact({
          {"0", "0", "0", "0", "r2", "0"},
          {"0", "0", "0", "1", "0", "1"},
          {"0", "0", "1", "0", "0", "1"},
          {"0", "1", "0", "0", "1", "0"},
          {"r2", "0", "0", "1", "0", "0"},
          {"0", "1", "1", "0", "0", "0"},
      }),
      parse_exact({
          {"0", "0", "0", "0", "0", "r2"},
          {"0", "0", "0", "0", "1", "1"},
          {"0", "0", "0", "1", "1", "0"},
          {"0", "0", "1", "1", "0", "0"},
          {"0", "1", "1", "0", "0", "0"},
          {"r2", "1", "0", "0", "0", "0"},
      }),
  };
}

SymbolicMatrix sine_s_general_n11() {
  return parse_symbolic({
      {"s1", "s2", "s3", "s4", "s5"},
      {"s2", "s1+s3", "s2+s4", "s3+s5", "s4-s5"},
      {"s3", "s2+s4", "s1+s3+s5", "s2+s4-s5", "s3+s5-s4"},
      {"s4", "s3+s5", "s2+s4-s5", "s1+s3+s5-s4", "s2+s4-s5-s3"},
      {"s5", "s4-s5", "s3+s5-s4", "s2+s4-s5-s3", "s1+s3+s5-s4-s2"},
  });
}

std::vector<ExactMatrix> sine_s_basis_n11() {
  return {
      ExactMatrix::identity(5),
      parse_exact({
          {"0", "1", "0", "0", "0"},
          {"1", "0", "1", "0", "0"},
          {"0", "1", "0", "1", "0"},
          {"0", "0", "1", "0", "1"},
          {"0", "0", "0", "1", "-1"},
      }),
      parse_exact({
          {"0", "0", "1", "0", "0"},
          {"0", "1", "0", "1", "0"},
          {"1", "0", "1", "0", "1"},
          {"0", "1", "0", "1", "-1"},
          {"0", "0", "1", "-1", "1"},
      }),
      parse_exact({
          {"0", "0", "0", "1", "0"},
          {"0", "0", "1", "0", "1"},
          {"0", "1", "0", "1", "-1"},
          {"1", "0", "1", "-1", "1"},
          {"0", "1", "-1", "1", "-1"},
      }),
      parse_exact({
          {"0", "0", "0", "0", "1"},
          {"0", "0", "0", "1", "-1"},
          {"0", "0", "1", "-1", "1"},
          {"0", "1", "-1", "1", "-1"},
          {"1", "-1", "1", "-1", "1"},
      }),
  };
}

SymbolicMatrix sine_t_general_n11() {
  return parse_symbolic({
      {"t2", "t3-t1", "t4-t2", "t5-t3", "t5-t4"},
      {"t3-t1", "t4", "t5-t1", "t5-t2", "t4-t3"},
      {"t4-t2", "t5-t1", "t5", "t4-t1", "t3-t2"},
      {"t5-t3", "t5-t2", "t4-t1", "t3", "t2-t1"},
      {"t5-t4", "t4-t3", "t3-t2", "t2-t1", "t1"},
  });
}

std::vector<ExactMatrix> sine_t_basis_n11_displayed() {
  return {
      parse_exact({
          {"0", "-1", "0", "0", "0"},
          {"-1", "0", "-1", "0", "0"},
          {"0", "-1", "0", "-1", "0"},
          {"0", "0", "-1", "0", "-1"},
          {"0", "0", "0", "-1", "1"},
      }),
      parse_exact({
          {"1", "0", "-1", "0", "0"},
          {"0", "0", "0", "-1", "0"},
          {"-1", "0", "0", "0", "-1"},
          {"0", "-1", "0", "0", "1"},
          {"0", "0", "-1", "1", "0"},
      }),
      parse_exact({
          {"0", "1", "0", "-1", "0"},
          {"1", "0", "0", "0", "-1"},
          {"0", "0", "0", "0", "1"},
          {"-1", "0", "0", "1", "0"},
          {"0", "-1", "1", "0", "0"},
      }),
      parse_exact({
          {"0", "0", "1", "0", "-1"},
          {"0", "1", "0", "0", "1"},
          {"1", "0", "0", "1", "0"},
          {"0", "0", "1", "0", "0"},
          {"-1", "1", "0", "0", "0"},
      }),
      parse_exact({
          {"0", "0", "0", "1", "1"},
          {"0", "0", "1", "1", "0"},
          {"0", "1", "1", "0", "0"},
          {"1", "1", "0", "0", "0"},
          {"1", "0", "0", "0", "0"},
      }),
  };
}

}  // namespace reference

}  // namespace trigalg
