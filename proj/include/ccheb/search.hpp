#pragma once

// Global maximization of |err(t)| over a parameter interval: a uniform grid
// followed by golden-section refinement of the promising local maxima.

#include <functional>
#include <span>
#include <vector>

#include "ccheb/mpnum.hpp"

namespace ccheb {

using ErrorFunction = std::function<Complex(const Scalar&)>;

struct SearchOptions {
  /// Grid nodes across the domain; 0 means max(4096, 64 * n_basis).
  std::size_t grid_size = 0;
  /// Golden-section brackets are shrunk to width 10^-refine_digits (capped by
  /// half the working precision, where comparisons stop being meaningful).
  int refine_digits = 30;
  /// Local grid maxima with |err| >= (1 - window) * (grid max) get refined.
  double window = 0.1;
};

std::size_t default_grid_size(std::size_t n_basis);

/// Interval [lo, hi] of the curve parameter. A periodic domain wraps around
/// (the full closed curve); a mirrored domain is a fundamental domain of a
/// symmetry group, across whose endpoints |err| is reflected.
struct SearchDomain {
  Scalar lo{0};
  Scalar hi{1};
  bool periodic = true;

  static SearchDomain full() { return {}; }
  static SearchDomain mirrored(Scalar lo, Scalar hi) { return {std::move(lo), std::move(hi), false}; }
  Scalar length() const { return hi - lo; }
};

struct Extremum {
  Scalar x;      ///< maximizing parameter
  Scalar theta;  ///< arg err(x) in [0, 2*pi)
  Scalar value;  ///< |err(x)|
  Complex err;   ///< err(x)
};

class MaxSearch {
 public:
  MaxSearch(SearchDomain domain, std::size_t grid_size, std::span<const Scalar> singular_params,
            int refine_digits = 30, double window = 0.1);

  const std::vector<Scalar>& nodes() const { return nodes_; }
  const SearchDomain& domain() const { return domain_; }

  /// Finds the maximum given |err|^2 already evaluated at nodes().
  Extremum find(const ErrorFunction& err, std::span<const Scalar> grid_norms) const;
  /// Evaluates err on the grid and then finds the maximum.
  Extremum find(const ErrorFunction& err) const;

  /// Bracket width at which golden-section refinement stops.
  const Scalar& refine_width() const { return width_; }

 private:
  Scalar golden_section(const ErrorFunction& err, Scalar a, Scalar b, Scalar& best) const;

  SearchDomain domain_;
  Scalar step_;
  Scalar width_;
  double window_;
  std::vector<Scalar> nodes_;
  std::vector<Scalar> extra_points_;
};

/// One-shot search over `domain` with default grid.
Extremum global_max_search(const ErrorFunction& err, std::span<const Scalar> singular_params,
                           const SearchOptions& options = {},
                           const SearchDomain& domain = SearchDomain::full());

}  // namespace ccheb
