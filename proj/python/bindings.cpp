#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "ccheb/chebyshev.hpp"
#include "ccheb/faber.hpp"
#include "ccheb/zeros.hpp"

namespace py = pybind11;
using namespace ccheb;

namespace {

struct SetArgs {
  std::string family;
  int m;
  std::string alpha;
  std::string r;
  std::vector<std::string> coeffs;
};

CurveSpec make_spec(const SetArgs& a) {
  CurveSpec s;
  s.family = parse_family(a.family);
  s.m = a.m;
  s.alpha = Scalar(a.alpha);
  s.r = Scalar(a.r);
  for (const auto& c : a.coeffs) {
    const auto colon = c.find(':');
    if (colon == std::string::npos) {
      s.coeffs.emplace_back(Scalar(c));
    } else {
      s.coeffs.emplace_back(Scalar(c.substr(0, colon)), Scalar(c.substr(colon + 1)));
    }
  }
  return s;
}

std::string dec(const Scalar& x) { return x.to_string(30); }

py::list coeff_list(const MonicPolynomial& p) {
  py::list out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Complex a = p.coefficient(k);
    out.append(py::make_tuple(dec(a.re), dec(a.im)));
  }
  return out;
}

py::dict record_dict(const ChebyshevRecord& rec) {
  py::dict d;
  d["label"] = rec.label;
  d["degree"] = rec.degree;
  if (!rec.ok()) {
    d["error"] = rec.error;
    return d;
  }
  d["coefficients"] = coeff_list(rec.polynomial);
  d["sup_norm"] = dec(rec.sup_norm);
  d["capacity"] = dec(rec.capacity);
  d["widom"] = dec(rec.widom);
  d["rel_error"] = dec(rec.rel_error);
  d["iterations"] = rec.iterations;
  d["status"] = to_string(rec.status);
  d["digits"] = rec.digits;
  return d;
}

ChebyshevOptions options(const std::string& threshold, bool symmetry, std::size_t grid) {
  ChebyshevOptions o;
  o.threshold = Scalar(threshold);
  o.use_symmetry = symmetry;
  o.grid_size = grid;
  return o;
}

#define CCHEB_SET_ARGS                                                                  \
  py::arg("family"), py::arg("m") = 4, py::arg("alpha") = "1", py::arg("r") = "1", \
      py::arg("coeffs") = std::vector<std::string>{}

}  // namespace

PYBIND11_MODULE(_complexcheb, mod) {
  mod.doc() = "Complex Chebyshev polynomials via the generalized Remez algorithm";
  mod.attr("__version__") = CCHEB_VERSION;

  py::register_exception<Error>(mod, "CchebError", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(mod, "InvalidArgument", PyExc_ValueError);

  mod.def(
      "chebyshev",
      [](const std::string& family, int m, const std::string& alpha, const std::string& r,
         const std::vector<std::string>& coeffs, int degree, const std::string& threshold,
         int digits, bool symmetry, std::size_t grid) {
        NumericContext::Scope scope(set_precision(digits));
        const BoundaryCurve curve = make_spec({family, m, alpha, r, coeffs}).build();
        ChebyshevRecord rec;
        {
          py::gil_scoped_release release;
          rec = chebyshev(curve, degree, options(threshold, symmetry, grid));
        }
        return record_dict(rec);
      },
      CCHEB_SET_ARGS, py::arg("degree"), py::arg("threshold") = "1e-10", py::arg("digits") = 60,
      py::arg("symmetry") = true, py::arg("grid") = 0,
      "Chebyshev polynomial of the given degree; numbers are returned as decimal strings.");

  mod.def(
      "widom_table",
      [](const std::string& family, int m, const std::string& alpha, const std::string& r,
         const std::vector<std::string>& coeffs, const std::vector<int>& degrees,
         const std::string& threshold, int digits, int jobs) {
        NumericContext::Scope scope(set_precision(digits));
        const BoundaryCurve curve = make_spec({family, m, alpha, r, coeffs}).build();
        std::vector<ChebyshevRecord> recs;
        {
          py::gil_scoped_release release;
          recs = widom_table(curve, degrees, options(threshold, true, 0), jobs);
        }
        py::list out;
        for (const auto& rec : recs) out.append(record_dict(rec));
        return out;
      },
      CCHEB_SET_ARGS, py::arg("degrees"), py::arg("threshold") = "1e-10", py::arg("digits") = 60,
      py::arg("jobs") = 1);

  mod.def(
      "faber",
      [](const std::string& family, int m, const std::string& alpha, const std::string& r,
         const std::vector<std::string>& coeffs, int degree, int digits) {
        NumericContext::Scope scope(set_precision(digits));
        const auto polys = faber_polynomials(
            laurent_of(make_spec({family, m, alpha, r, coeffs}), degree), degree);
        return coeff_list(polys.back());
      },
      CCHEB_SET_ARGS, py::arg("degree"), py::arg("digits") = 60,
      "Monic Faber polynomial F_degree as (re, im) coefficient strings, low to high.");

  mod.def(
      "roots",
      [](const std::vector<std::complex<double>>& lower, int digits) {
        NumericContext::Scope scope(set_precision(digits));
        std::vector<Complex> a;
        for (const auto& c : lower) a.emplace_back(Scalar(c.real()), Scalar(c.imag()));
        const ZeroSet zs = polynomial_zeros(MonicPolynomial(std::move(a)));
        std::vector<std::complex<double>> out;
        for (const auto& z : zs.zeros) out.emplace_back(z.re.to_double(), z.im.to_double());
        return out;
      },
      py::arg("lower"), py::arg("digits") = 60,
      "Zeros of z^N + lower[N-1] z^{N-1} + ... + lower[0].");

  mod.def(
      "chebyshev_zeros",
      [](const std::string& family, int m, const std::string& alpha, const std::string& r,
         const std::vector<std::string>& coeffs, int degree, const std::string& threshold,
         int digits) {
        NumericContext::Scope scope(set_precision(digits));
        const BoundaryCurve curve = make_spec({family, m, alpha, r, coeffs}).build();
        const ChebyshevRecord rec = chebyshev(curve, degree, options(threshold, true, 0));
        std::vector<std::complex<double>> out;
        for (const auto& z : polynomial_zeros(rec.polynomial).zeros)
          out.emplace_back(z.re.to_double(), z.im.to_double());
        return out;
      },
      CCHEB_SET_ARGS, py::arg("degree"), py::arg("threshold") = "1e-10", py::arg("digits") = 60);

  mod.def(
      "curve_points",
      [](const std::string& family, int m, const std::string& alpha, const std::string& r,
         const std::vector<std::string>& coeffs, std::size_t samples, int digits) {
        NumericContext::Scope scope(set_precision(digits));
        std::vector<std::complex<double>> out;
        for (const auto& z : sample_curve(make_spec({family, m, alpha, r, coeffs}).build(), samples))
          out.emplace_back(z.re.to_double(), z.im.to_double());
        return out;
      },
      CCHEB_SET_ARGS, py::arg("samples") = 256, py::arg("digits") = 30);

  mod.def(
      "capacity",
      [](const std::string& family, int m, const std::string& alpha, const std::string& r,
         const std::vector<std::string>& coeffs, int digits) {
        NumericContext::Scope scope(set_precision(digits));
        return dec(make_spec({family, m, alpha, r, coeffs}).build().capacity());
      },
      CCHEB_SET_ARGS, py::arg("digits") = 60);
}
