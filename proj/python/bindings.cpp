#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "trigalg/circulant_algebra.hpp"
#include "trigalg/dct_algebra.hpp"
#include "trigalg/dst_algebra.hpp"
#include "trigalg/errors.hpp"
#include "trigalg/group_core.hpp"
#include "trigalg/serialization.hpp"
#include "trigalg/transforms.hpp"
#include "trigalg/verification.hpp"

namespace py = pybind11;
using namespace trigalg;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

template <typename T>
py::array_t<T> to_numpy(const Matrix<T>& m) {
  py::array_t<T> out({m.rows(), m.cols()});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

py::array_t<Complex> to_numpy(const ComplexVector& v) {
  py::array_t<Complex> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(v.size())});
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

ComplexMatrix from_numpy_matrix(const ComplexArray& a) {
  if (a.ndim() != 2) throw DimensionMismatch("expected a 2-d array");
  ComplexMatrix m(a.shape(0), a.shape(1));
  std::copy(a.data(), a.data() + a.size(), m.data().begin());
  return m;
}

ComplexVector from_numpy_vector(const ComplexArray& a) {
  if (a.ndim() != 1) throw DimensionMismatch("expected a 1-d array");
  return {a.data(), a.data() + a.size()};
}

// Basis matrices as floats, or as nested lists of (a, b) meaning a + b sqrt2.
py::object basis(const ExactMatrix& m, bool exact) {
  if (!exact) return to_numpy(to_real(m));
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (const auto& v : m.row(r)) row.append(py::make_tuple(v.rational_part(), v.sqrt2_part()));
    rows.append(row);
  }
  return rows;
}

UnitSubgroup subgroup(int n, const std::vector<long long>& generators) {
  return make_unit_subgroup(n, generators);
}

}  // namespace

PYBIND11_MODULE(trigalg, m) {
  m.doc() = "Unitary trigonometric transforms and the matrix algebras they diagonalize";

  static py::exception<Error> error(m, "Error");
  static py::exception<NotInAlgebra> not_in_algebra(m, "NotInAlgebra", error.ptr());
  static py::exception<SingularElement> singular(m, "SingularElement", error.ptr());
  static py::exception<IndexOutOfRange> index_error(m, "IndexOutOfRange", error.ptr());
  static py::exception<DimensionMismatch> dimension(m, "DimensionMismatch", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotInAlgebra& e) {
      // args = (message, residual)
      PyErr_SetObject(not_in_algebra.ptr(), py::make_tuple(e.what(), e.residual()).ptr());
    } catch (const SingularElement& e) {
      singular(e.what());
    } catch (const IndexOutOfRange& e) {
      index_error(e.what());
    } catch (const DimensionMismatch& e) {
      dimension(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  m.def("dct_size", &dct_size, py::arg("n"));
  m.def("dst_size", &dst_size, py::arg("n"));
  m.def("dft_matrix", [](int n) { return to_numpy(dft_matrix(n)); }, py::arg("n"));
  m.def("dct_matrix", [](int n) { return to_numpy(dct_matrix(n)); }, py::arg("n"));
  m.def("dst_matrix", [](int n) { return to_numpy(dst_matrix(n)); }, py::arg("n"),
        "Real carrier W; the unitary sine transform is -1j * W.");

  m.def("orbits", [](int n, const std::vector<long long>& generators) {
    return orbit_partition(subgroup(n, generators)).classes();
  }, py::arg("n"), py::arg("generators") = std::vector<long long>{});
  m.def("structure_constants", [](int n, const std::vector<long long>& generators) {
    const StructureConstants c = structure_constants(orbit_partition(subgroup(n, generators)));
    py::dict out;
    for (const auto& [key, count] : c.counts())
      out[py::make_tuple(key[0], key[1], key[2])] = count;
    return out;
  }, py::arg("n"), py::arg("generators") = std::vector<long long>{},
     "Nonzero c_ijk keyed by (i, j, k).");

  m.def("dct_basis", [](int n, std::size_t i, bool exact) { return basis(dct_basis(n, i), exact); },
        py::arg("n"), py::arg("i"), py::arg("exact") = false);
  m.def("dst_s_basis", [](int n, std::size_t i, bool exact) { return basis(dst_s_basis(n, i), exact); },
        py::arg("n"), py::arg("i"), py::arg("exact") = false);
  m.def("dst_t_basis", [](int n, std::size_t i, bool exact) { return basis(dst_t_basis(n, i), exact); },
        py::arg("n"), py::arg("i"), py::arg("exact") = false);
  m.def("circulant_basis", [](int n, std::size_t i, bool exact) {
    return basis(circulant_shift_basis(n, i), exact);
  }, py::arg("n"), py::arg("i"), py::arg("exact") = false);

  m.def("dct_general", [](int n, const ComplexArray& t) {
    return to_numpy(dct_general(DctElement(n, from_numpy_vector(t))));
  }, py::arg("n"), py::arg("params"));
  m.def("dct_eigenvalues", [](int n, const ComplexArray& t) {
    return to_numpy(dct_eigenvalues(DctElement(n, from_numpy_vector(t))));
  }, py::arg("n"), py::arg("params"));
  m.def("dct_membership", [](const ComplexArray& a, int n, std::optional<double> tol) {
    return to_numpy(dct_membership(from_numpy_matrix(a), n, tol).params());
  }, py::arg("matrix"), py::arg("n"), py::arg("tol") = py::none());
  m.def("dct_solve", [](int n, const ComplexArray& t, const ComplexArray& rhs, double singular_tol) {
    return to_numpy(dct_solve(DctElement(n, from_numpy_vector(t)), from_numpy_vector(rhs), singular_tol));
  }, py::arg("n"), py::arg("params"), py::arg("rhs"), py::arg("singular_tol") = 1e-12);

  m.def("dst_general", [](int n, const ComplexArray& s) {
    return to_numpy(dst_s_general(DstElementS(n, from_numpy_vector(s))));
  }, py::arg("n"), py::arg("params"), "S-form: params are the first row.");
  m.def("dst_t_general", [](int n, const ComplexArray& t) {
    return to_numpy(dst_t_general(DstElementT(n, from_numpy_vector(t))));
  }, py::arg("n"), py::arg("params"));
  m.def("dst_eigenvalues", [](int n, const ComplexArray& s) {
    return to_numpy(dst_eigenvalues(DstElementS(n, from_numpy_vector(s))));
  }, py::arg("n"), py::arg("params"));
  m.def("dst_membership", [](const ComplexArray& a, int n, std::optional<double> tol) {
    return to_numpy(dst_membership(from_numpy_matrix(a), n, tol).params());
  }, py::arg("matrix"), py::arg("n"), py::arg("tol") = py::none());
  m.def("dst_solve", [](int n, const ComplexArray& s, const ComplexArray& rhs, double singular_tol) {
    return to_numpy(dst_solve(DstElementS(n, from_numpy_vector(s)), from_numpy_vector(rhs), singular_tol));
  }, py::arg("n"), py::arg("params"), py::arg("rhs"), py::arg("singular_tol") = 1e-12);

  m.def("circulant_general", [](int n, const ComplexArray& c) {
    return to_numpy(circulant_general(CirculantElement(n, from_numpy_vector(c))));
  }, py::arg("n"), py::arg("params"));
  m.def("circulant_eigenvalues", [](int n, const ComplexArray& c) {
    return to_numpy(circulant_eigenvalues(CirculantElement(n, from_numpy_vector(c))));
  }, py::arg("n"), py::arg("params"));
  m.def("circulant_membership", [](const ComplexArray& a, int n, std::optional<double> tol) {
    return to_numpy(circulant_membership(from_numpy_matrix(a), n, tol).params());
  }, py::arg("matrix"), py::arg("n"), py::arg("tol") = py::none());
  m.def("circulant_solve", [](int n, const ComplexArray& c, const ComplexArray& rhs, double singular_tol) {
    return to_numpy(
        circulant_solve(CirculantElement(n, from_numpy_vector(c)), from_numpy_vector(rhs), singular_tol));
  }, py::arg("n"), py::arg("params"), py::arg("rhs"), py::arg("singular_tol") = 1e-12);

  m.def("verify", [](int n_min, int n_max, std::uint64_t seed) {
    const SuiteReport r = run_suite(n_min, n_max, seed);
    return py::make_tuple(r.all_passed(), r.to_text());
  }, py::arg("n_min") = 2, py::arg("n_max") = 32, py::arg("seed") = kDefaultSuiteSeed,
     "Returns (all_passed, text report).");
}
