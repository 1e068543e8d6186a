#include <complex>
#include <sstream>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mqdr/decomp.hpp"
#include "mqdr/errors.hpp"
#include "mqdr/geninv.hpp"
#include "mqdr/imaging.hpp"
#include "mqdr/symbolic/sym_io.hpp"
#include "mqdr/symbolic/sym_tensor.hpp"
#include "mqdr/tensor.hpp"

namespace py = pybind11;
using namespace mqdr;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;
using ByteArray = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

Tensor3 to_tensor(const ComplexArray& a) {
  if (a.ndim() != 3) throw DimensionMismatch("expected an (m, n, p) array");
  const auto r = a.unchecked<3>();
  Tensor3 t(r.shape(0), r.shape(1), r.shape(2));
  for (Index k = 0; k < t.depth(); ++k)
    for (Index i = 0; i < t.rows(); ++i)
      for (Index j = 0; j < t.cols(); ++j) t(i, j, k) = r(i, j, k);
  return t;
}

/// float64 when every imaginary part is zero, else complex128.
py::array to_array(const Tensor3& t) {
  const std::vector<py::ssize_t> shape{t.rows(), t.cols(), t.depth()};
  if (t.is_real()) {
    py::array_t<double> out(shape);
    auto w = out.mutable_unchecked<3>();
    for (Index k = 0; k < t.depth(); ++k)
      for (Index i = 0; i < t.rows(); ++i)
        for (Index j = 0; j < t.cols(); ++j) w(i, j, k) = t(i, j, k).real();
    return out;
  }
  py::array_t<Complex> out(shape);
  auto w = out.mutable_unchecked<3>();
  for (Index k = 0; k < t.depth(); ++k)
    for (Index i = 0; i < t.rows(); ++i)
      for (Index j = 0; j < t.cols(); ++j) w(i, j, k) = t(i, j, k);
  return out;
}

Matrix to_matrix(const ComplexArray& a) {
  if (a.ndim() != 2) throw DimensionMismatch("expected a (p, p) array");
  const auto r = a.unchecked<2>();
  Matrix m(r.shape(0), r.shape(1));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = r(i, j);
  return m;
}

ImageRGB to_image(const ByteArray& a) {
  if (a.ndim() != 3 || a.shape(2) != 3) throw DimensionMismatch("expected an (h, w, 3) uint8 array");
  ImageRGB img(a.shape(1), a.shape(0));
  std::copy(a.data(), a.data() + a.size(), img.pixels.begin());
  return img;
}

py::array_t<std::uint8_t> from_image(const ImageRGB& img) {
  py::array_t<std::uint8_t> out({img.height, img.width, Index{3}});
  std::copy(img.pixels.begin(), img.pixels.end(), out.mutable_data());
  return out;
}

Transform resolve(const std::optional<Transform>& t, Index p) {
  return t ? *t : Transform::identity(p);
}

py::tuple ginv_result(const GinvReport& r) {
  return py::make_tuple(to_array(r.X), r.residuals);
}

sym::SymTransform sym_transform(const std::optional<std::vector<std::vector<std::string>>>& rows,
                                sym::Size p) {
  if (!rows) return sym::SymTransform(sym::QMatrix::identity(p));
  sym::QMatrix m(static_cast<sym::Size>(rows->size()), static_cast<sym::Size>(rows->size()));
  for (sym::Size i = 0; i < m.rows(); ++i) {
    const auto& row = (*rows)[static_cast<std::size_t>(i)];
    if (static_cast<sym::Size>(row.size()) != m.cols()) throw DimensionMismatch("transform must be square");
    for (sym::Size j = 0; j < m.cols(); ++j) m(i, j) = sym::parse_rational(row[static_cast<std::size_t>(j)]);
  }
  return sym::SymTransform(std::move(m));
}

sym::SymTensor3 parse_st3(const std::string& text) {
  std::istringstream in(text);
  return sym::read_st3(in);
}

std::string dump_st3(const sym::SymTensor3& a) {
  std::ostringstream out;
  sym::write_st3(out, a);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_mqdr, m) {
  m.doc() = "M-product tensor decompositions, generalized inverses and image compression";

  static py::exception<Error> error(m, "Error");
  static py::exception<MathError> math_error(m, "MathError", error.ptr());
  static py::exception<FormatError> format_error(m, "FormatError", error.ptr());
  static py::exception<DimensionMismatch> dim_error(m, "DimensionMismatch", error.ptr());
  static py::exception<InvalidArgument> arg_error(m, "InvalidArgument", error.ptr());
  static py::exception<ExistenceViolated> existence(m, "ExistenceViolated", math_error.ptr());
  static py::exception<SingularSlice> singular(m, "SingularSlice", math_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ExistenceViolated& e) {
      existence(e.what());
    } catch (const SingularSlice& e) {
      singular(e.what());
    } catch (const MathError& e) {
      math_error((std::string(e.name()) + ": " + e.what()).c_str());
    } catch (const FormatError& e) {
      format_error((std::string(e.name()) + ": " + e.what()).c_str());
    } catch (const DimensionMismatch& e) {
      dim_error(e.what());
    } catch (const InvalidArgument& e) {
      arg_error(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<ToleranceConfig>(m, "ToleranceConfig")
      .def(py::init<>())
      .def_readwrite("rank_rel_tol", &ToleranceConfig::rank_rel_tol)
      .def_readwrite("residual_tol", &ToleranceConfig::residual_tol)
      .def_readwrite("zero_column_tol", &ToleranceConfig::zero_column_tol);

  py::class_<Transform>(m, "Transform")
      .def(py::init([](const ComplexArray& a) { return Transform(to_matrix(a)); }), py::arg("matrix"))
      .def_static("identity", &Transform::identity, py::arg("p"))
      .def_static("dct", &Transform::dct, py::arg("p"))
      .def_static("dft", &Transform::dft, py::arg("p"))
      .def_static("seeded_random", &Transform::seeded_random, py::arg("p"), py::arg("seed"))
      .def_property_readonly("size", &Transform::size)
      .def_property_readonly("matrix", [](const Transform& t) {
        return to_array(Tensor3::from_slices({t.matrix()}))[py::make_tuple(py::ellipsis(), 0)];
      });

  const auto tarr = py::arg("transform") = py::none();
  const auto tolarg = py::arg("tol") = ToleranceConfig{};

  m.def("m_product", [](const ComplexArray& a, const ComplexArray& b, std::optional<Transform> t) {
    const Tensor3 ta = to_tensor(a);
    return to_array(m_product(ta, to_tensor(b), resolve(t, ta.depth())));
  }, py::arg("a"), py::arg("b"), tarr);

  m.def("m_transpose", [](const ComplexArray& a, std::optional<Transform> t) {
    const Tensor3 ta = to_tensor(a);
    return to_array(m_transpose(ta, resolve(t, ta.depth())));
  }, py::arg("a"), tarr);

  m.def("multirank", [](const ComplexArray& a, std::optional<Transform> t, const ToleranceConfig& tol) {
    const Tensor3 ta = to_tensor(a);
    return multirank(ta, resolve(t, ta.depth()), tol).ranks;
  }, py::arg("a"), tarr, tolarg);

  m.def("frd", [](const ComplexArray& a, std::optional<Transform> t, const ToleranceConfig& tol) {
    const Tensor3 ta = to_tensor(a);
    const TensorFRD f = tensor_frd(ta, resolve(t, ta.depth()), tol);
    return py::make_tuple(to_array(f.S), to_array(f.T));
  }, py::arg("a"), tarr, tolarg, "Full-rank decomposition A = S * T.");

  m.def("qdr", [](const ComplexArray& a, std::optional<Transform> t, const ToleranceConfig& tol) {
    const Tensor3 ta = to_tensor(a);
    const TensorQDR f = tensor_qdr(ta, resolve(t, ta.depth()), tol);
    return py::make_tuple(to_array(f.Q), to_array(f.D), to_array(f.R));
  }, py::arg("a"), tarr, tolarg, "QDR decomposition A = Q * D * R.");

  m.def("pinv", [](const ComplexArray& a, std::optional<Transform> t, const std::string& method,
                   const ToleranceConfig& tol) {
    const Tensor3 ta = to_tensor(a);
    const Transform tt = resolve(t, ta.depth());
    if (method == "frd") return ginv_result(pinv_frd(ta, tt, tol));
    if (method == "qdr") return ginv_result(pinv_qdr(ta, tt, tol));
    throw InvalidArgument("method must be 'frd' or 'qdr'");
  }, py::arg("a"), tarr, py::arg("method") = "frd", tolarg,
        "Moore-Penrose inverse; returns (X, residuals).");

  m.def("drazin", [](const ComplexArray& a, std::optional<Transform> t, const std::string& method,
                     const ToleranceConfig& tol) {
    const Tensor3 ta = to_tensor(a);
    const Transform tt = resolve(t, ta.depth());
    if (method == "frd") return ginv_result(drazin_frd(ta, tt, tol));
    if (method == "qdr") return ginv_result(drazin_qdr(ta, tt, tol));
    throw InvalidArgument("method must be 'frd' or 'qdr'");
  }, py::arg("a"), tarr, py::arg("method") = "frd", tolarg,
        "Drazin inverse; returns (X, residuals).");

  m.def("outer", [](const ComplexArray& a, const ComplexArray& w, std::optional<Transform> t,
                    const ToleranceConfig& tol) {
    const Tensor3 ta = to_tensor(a);
    return ginv_result(outer_inverse_qdr(ta, to_tensor(w), resolve(t, ta.depth()), tol));
  }, py::arg("a"), py::arg("w"), tarr, tolarg,
        "Outer inverse with range R(W) and null space N(W); returns (X, residuals).");

  m.def("psnr", [](const ByteArray& a, const ByteArray& b) { return psnr(to_image(a), to_image(b)); });
  m.def("ssim", [](const ByteArray& a, const ByteArray& b) { return ssim(to_image(a), to_image(b)); });

  m.def("compress", [](const ByteArray& img, Index k, std::optional<Transform> t, const ToleranceConfig& tol) {
    const CompressionResult r = compress(to_image(img), k, resolve(t, 3), tol);
    py::dict out;
    out["k"] = r.k;
    out["image"] = from_image(r.reconstructed);
    out["psnr_db"] = r.psnr_db;
    out["ssim"] = r.ssim ? py::cast(*r.ssim) : py::none();
    out["storage_ratio"] = r.storage_ratio;
    return out;
  }, py::arg("image"), py::arg("k"), tarr, tolarg,
        "Truncated QDR at rank k of an (h, w, 3) uint8 image.");

  using RationalRows = std::optional<std::vector<std::vector<std::string>>>;
  m.def("sym_pinv", [](const std::string& st3, const RationalRows& rows) {
    const sym::SymTensor3 a = parse_st3(st3);
    return dump_st3(sym::sym_pinv(a, sym_transform(rows, a.depth())));
  }, py::arg("a_st3"), py::arg("transform") = py::none(),
        "Exact Moore-Penrose inverse over Q(x); tensors are .st3 JSON text and the\n"
        "transform is a list of rows of rational strings.");

  m.def("sym_outer", [](const std::string& a_st3, const std::string& w_st3, const RationalRows& rows) {
    const sym::SymTensor3 a = parse_st3(a_st3);
    return dump_st3(sym::sym_outer_inverse(a, parse_st3(w_st3), sym_transform(rows, a.depth())));
  }, py::arg("a_st3"), py::arg("w_st3"), py::arg("transform") = py::none());

  m.def("sym_evaluate", [](const std::string& st3, const std::string& x0) {
    return to_array(sym::evaluate(parse_st3(st3), sym::parse_rational(x0)));
  }, py::arg("a_st3"), py::arg("x0"), "Substitutes x = x0 (a rational string).");
}
