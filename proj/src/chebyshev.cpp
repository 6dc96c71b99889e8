#include "ccheb/chebyshev.hpp"

#include "ccheb/basis.hpp"
#include "ccheb/parallel.hpp"
#include "ccheb/search.hpp"

namespace ccheb {

ChebyshevRecord chebyshev(const BoundaryCurve& curve, int degree,
                          const ChebyshevOptions& options) {
  const BasisSpec basis = build_basis(curve, degree, options.use_symmetry);
  RemezOptions ro;
  ro.threshold = options.threshold;
  ro.max_iter = options.max_iter;
  ro.search.grid_size = options.grid_size;
  const RemezResult result = solve(basis, ro);

  ChebyshevRecord rec;
  rec.label = curve.label();
  rec.degree = degree;
  rec.polynomial = assemble_polynomial(basis, result.lambda);
  rec.sup_norm = result.upper_bound;
  rec.lower_bound = result.lower_bound;
  rec.capacity = curve.capacity();
  rec.widom = rec.sup_norm / pow(rec.capacity, static_cast<long>(degree));
  rec.rel_error = result.rel_error;
  rec.iterations = result.iterations;
  rec.status = result.status;
  rec.digits = working_digits();
  rec.threshold = options.threshold;
  return rec;
}

std::vector<ChebyshevRecord> widom_table(const BoundaryCurve& curve, const std::vector<int>& degrees,
                                         const ChebyshevOptions& options, int jobs) {
  if (degrees.empty()) throw InvalidArgument("degree list is empty");
  std::vector<ChebyshevRecord> out(degrees.size());
  parallel_for(degrees.size(), jobs, [&](std::size_t i) {
    try {
      out[i] = chebyshev(curve, degrees[i], options);
    } catch (const std::exception& e) {
      ChebyshevRecord& rec = out[i];
      rec.label = curve.label();
      rec.degree = degrees[i];
      rec.capacity = curve.capacity();
      rec.digits = working_digits();
      rec.threshold = options.threshold;
      rec.error = e.what();
    }
  });
  return out;
}

Scalar sup_norm(const MonicPolynomial& p, const BoundaryCurve& curve) {
  auto err = [&](const Scalar& t) { return p(curve(t)); };
  return global_max_search(err, curve.singular_params()).value;
}

}  // namespace ccheb
