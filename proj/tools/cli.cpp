#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "trigalg/circulant_algebra.hpp"
#include "trigalg/dct_algebra.hpp"
#include "trigalg/dst_algebra.hpp"
#include "trigalg/errors.hpp"
#include "trigalg/serialization.hpp"
#include "trigalg/transforms.hpp"
#include "trigalg/verification.hpp"

namespace trigalg::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kind;
  std::string algebra;
  int n = 0;
  std::optional<long long> index;
  std::string format = "json";
  bool exact = false;
  std::optional<double> tol;
  double singular_tol = 1e-12;
  std::string input = "-";
  std::string params_path;
  std::string rhs_path;
  int n_min = 2;
  int n_max = 32;
  std::uint64_t seed = kDefaultSuiteSeed;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

void emit(const MatrixDocument& doc, const std::string& format, std::ostream& out) {
  out << (format == "csv" ? to_csv(doc) : to_json(doc));
}

std::size_t required_index(const Options& o) {
  if (!o.index) throw UsageError("--index is required for kind '" + o.kind + "'");
  if (*o.index < 0) throw UsageError("--index must be nonnegative");
  return static_cast<std::size_t>(*o.index);
}

MatrixDocument generate(const Options& o) {
  const bool exact_kind = o.kind == "dct-basis" || o.kind == "dst-basis-s" ||
                          o.kind == "dst-basis-t" || o.kind == "circulant-basis";
  if (o.exact && !exact_kind) throw UsageError("--exact is not available for kind '" + o.kind + "'");
  if (o.kind == "dft") return MatrixDocument::from(o.n, o.kind, dft_matrix(o.n));
  if (o.kind == "dct") return MatrixDocument::from(o.n, o.kind, dct_matrix(o.n));
  if (o.kind == "dst") return MatrixDocument::from(o.n, o.kind, dst_matrix(o.n));

  const std::size_t i = required_index(o);
  ExactMatrix m;
  if (o.kind == "dct-basis") m = dct_basis(o.n, i);
  else if (o.kind == "dst-basis-s") m = dst_s_basis(o.n, i);
  else if (o.kind == "dst-basis-t") m = dst_t_basis(o.n, i);
  else m = circulant_shift_basis(o.n, i);
  return o.exact ? MatrixDocument::from(o.n, o.kind, m) : MatrixDocument::from(o.n, o.kind, to_real(m));
}

int cmd_gen(const Options& o, std::ostream& out) {
  emit(generate(o), o.format, out);
  return kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const MatrixDocument doc = parse_json_document(read_source(o.input, in));
  const ComplexMatrix m = doc.to_complex_matrix();
  ComplexVector params;
  try {
    if (o.algebra == "dct") params = dct_membership(m, o.n, o.tol).params();
    else if (o.algebra == "dst") params = dst_membership(m, o.n, o.tol).params();
    else params = circulant_membership(m, o.n, o.tol).params();
  } catch (const NotInAlgebra& e) {
    err << "not in the " << o.algebra << " algebra: residual=" << e.residual() << "\n";
    return kDomainFailure;
  }
  emit(MatrixDocument::column(o.n, o.algebra + "-params", params), o.format, out);
  return kOk;
}

ComplexVector read_vector(const std::string& path, std::istream& in) {
  return parse_json_document(read_source(path, in)).to_complex_vector();
}

int cmd_solve(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.params_path == "-" && o.rhs_path == "-") throw UsageError("only one of --params and --rhs may read stdin");
  const ComplexVector p = read_vector(o.params_path, in);
  const ComplexVector rhs = read_vector(o.rhs_path, in);
  ComplexVector x;
  ComplexMatrix m;
  try {
    if (o.algebra == "dct") {
      const DctElement e(o.n, p);
      x = dct_solve(e, rhs, o.singular_tol);
      m = dct_general(e);
    } else if (o.algebra == "dst") {
      const DstElementS e(o.n, p);
      x = dst_solve(e, rhs, o.singular_tol);
      m = dst_s_general(e);
    } else {
      const CirculantElement e(o.n, p);
      x = circulant_solve(e, rhs, o.singular_tol);
      m = circulant_general(e);
    }
  } catch (const SingularElement& e) {
    err << e.what() << "\n";
    return kDomainFailure;
  }
  err << "residual=" << max_abs_diff(m * x, rhs) << "\n";
  emit(MatrixDocument::column(o.n, "solution", x), o.format, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.n_min < 1 || o.n_min > o.n_max) {
    throw UsageError("need 1 <= --n-min <= --n-max, got " + std::to_string(o.n_min) + ".." +
                     std::to_string(o.n_max));
  }
  const SuiteReport report = run_suite(o.n_min, o.n_max, o.seed);
  out << (o.format == "json" ? to_json(report) : report.to_text());
  return report.all_passed() ? kOk : kDomainFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Trigonometric transform algebras: generate, check, solve, verify", "trigalg"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds{"dft", "dct", "dst", "dct-basis", "dst-basis-s", "dst-basis-t",
                                       "circulant-basis"};
  const std::vector<std::string> algebras{"dct", "dst", "circulant"};
  const auto positive = CLI::PositiveNumber;

  auto* gen = app.add_subcommand("gen", "Emit a transform or basis matrix");
  gen->add_option("kind", o.kind, "Matrix kind")->required()->check(CLI::IsMember(kinds));
  gen->add_option("--n", o.n, "Modulus")->required()->check(positive);
  gen->add_option("--index", o.index, "Basis index");
  gen->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  gen->add_flag("--exact", o.exact, "Exact a + b sqrt2 entries");

  auto* check = app.add_subcommand("check", "Test membership and recover parameters");
  check->add_option("--algebra", o.algebra)->required()->check(CLI::IsMember(algebras));
  check->add_option("--n", o.n, "Modulus")->required()->check(positive);
  check->add_option("--tol", o.tol, "Off-diagonal tolerance")->check(CLI::NonNegativeNumber);
  check->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  check->add_option("input", o.input, "Matrix document path, '-' for stdin");

  auto* solve = app.add_subcommand("solve", "Solve M x = b inside an algebra");
  solve->add_option("--algebra", o.algebra)->required()->check(CLI::IsMember(algebras));
  solve->add_option("--n", o.n, "Modulus")->required()->check(positive);
  solve->add_option("--params", o.params_path, "Parameter document")->required();
  solve->add_option("--rhs", o.rhs_path, "Right-hand side document")->required();
  solve->add_option("--singular-tol", o.singular_tol)->check(CLI::NonNegativeNumber);
  solve->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--n-min", o.n_min);
  verify->add_option("--n-max", o.n_max);
  verify->add_option("--seed", o.seed);
  verify->add_option("--format", o.format, "json for a structured report")->check(CLI::IsMember({"json", "text"}));
  verify->callback([&] {
    if (verify->count("--format") == 0) o.format = "text";
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (check->parsed()) return cmd_check(o, in, out, err);
    if (solve->parsed()) return cmd_solve(o, in, out, err);
    return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const MalformedDocument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    // Remaining library errors stem from arguments: bad index, modulus or sizes.
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace trigalg::cli
