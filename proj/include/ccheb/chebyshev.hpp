#pragma once

#include <string>
#include <vector>

#include "ccheb/geometry.hpp"
#include "ccheb/polynomial.hpp"
#include "ccheb/remez.hpp"

namespace ccheb {

struct ChebyshevOptions {
  Scalar threshold{1e-10};
  bool use_symmetry = true;
  std::size_t grid_size = 0;  ///< 0: default for the basis size
  int max_iter = 500;
};

struct ChebyshevRecord {
  std::string label;
  int degree = 0;
  MonicPolynomial polynomial;
  Scalar sup_norm;
  Scalar lower_bound;
  Scalar capacity;
  Scalar widom;  ///< sup_norm / capacity^degree
  Scalar rel_error;
  int iterations = 0;
  RemezStatus status = RemezStatus::converged;
  int digits = 0;
  Scalar threshold;
  std::string error;  ///< nonempty when the solve failed (table entries only)

  bool ok() const { return error.empty(); }
};

/// Chebyshev polynomial T_N of the curve, computed at the current working precision.
ChebyshevRecord chebyshev(const BoundaryCurve& curve, int degree,
                          const ChebyshevOptions& options = {});

/// One record per degree in input order; failures are recorded, not thrown.
std::vector<ChebyshevRecord> widom_table(const BoundaryCurve& curve, const std::vector<int>& degrees,
                                         const ChebyshevOptions& options = {}, int jobs = 1);

/// max_t |p(gamma(t))|.
Scalar sup_norm(const MonicPolynomial& p, const BoundaryCurve& curve);

}  // namespace ccheb
