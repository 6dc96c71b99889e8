#pragma once

#include <span>
#include <vector>

#include "ccheb/geometry.hpp"
#include "ccheb/mpnum.hpp"
#include "ccheb/polynomial.hpp"

namespace ccheb {

class NoConvergence : public Error {
 public:
  using Error::Error;
};

struct ZeroSet {
  int degree = 0;
  std::vector<Complex> zeros;     ///< with multiplicity
  std::vector<Scalar> residuals;  ///< |p(z_j)|
  int sweeps = 0;                 ///< Aberth sweeps used
};

/// All zeros of a monic polynomial by Aberth-Ehrlich simultaneous iteration.
/// Exact zeros at the origin (vanishing low coefficients) are split off first;
/// near-coincident approximations are collapsed to their cluster mean.
ZeroSet polynomial_zeros(const MonicPolynomial& p, int max_sweeps = 500);

/// Roots of sum c_k z^k with nonzero leading coefficient.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, int max_sweeps = 500);

struct ZeroSummary {
  std::size_t count = 0;
  double diameter = 0;           ///< of the sampled curve
  double min_distance = 0;       ///< smallest distance of a zero to the curve
  std::vector<double> shrink;    ///< s values
  /// Fraction of zeros with dist(z, curve) > (1 - s) * diameter / 2, per s.
  std::vector<double> interior_fraction;
  double near_tolerance = 0.05;
  /// Fraction of zeros within near_tolerance of the curve.
  double near_fraction = 0;
};

ZeroSummary zero_measure_summary(const ZeroSet& zs, const BoundaryCurve& curve,
                                 double near_tolerance = 0.05,
                                 std::vector<double> shrink = {0.5, 0.75, 0.9},
                                 std::size_t curve_samples = 4096);

}  // namespace ccheb
