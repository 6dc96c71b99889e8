#pragma once

// Faber polynomials from the Laurent expansion at infinity of the inverse
// exterior map Psi(w) = c w + b_0 + b_1 / w + b_2 / w^2 + ...

#include <optional>
#include <string>
#include <vector>

#include "ccheb/chebyshev.hpp"
#include "ccheb/geometry.hpp"
#include "ccheb/polynomial.hpp"

namespace ccheb {

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

struct LaurentMap {
  Scalar capacity;
  std::vector<Complex> b;  ///< b_0 .. b_K

  int order() const { return static_cast<int>(b.size()) - 1; }
};

/// Explicit map for hypocycloids, power lemniscates and the lune with
/// alpha = 1/2 at the level spec.r, truncated after b_K.
LaurentMap laurent_of(const CurveSpec& spec, int order);

/// F_0 .. F_N via F_{n+1} = z F_n - sum_{j<=n} b~_j F_{n-j} - n b~_n, b~_j = c^j b_j.
std::vector<MonicPolynomial> faber_polynomials(const LaurentMap& map, int degree);

/// max_k |a_k(P) - a_k(Q)|, missing coefficients read as 0.
Scalar coeff_inf_distance(const MonicPolynomial& p, const MonicPolynomial& q);

struct SweepPoint {
  Scalar r;
  Scalar distance;
  bool censored = false;  ///< distance below threshold; reported as the threshold
  int iterations = 0;
  std::string error;

  bool ok() const { return error.empty(); }
};

struct SweepResult {
  std::vector<SweepPoint> points;
  /// Least-squares slope of log(distance) against log(r) over the
  /// uncensored successful points; empty with fewer than two.
  std::optional<double> slope;
};

/// Distances between F_N and T_N on the level curves at each r.
SweepResult faber_connection_sweep(const CurveSpec& spec, int degree,
                                   const std::vector<Scalar>& r_grid,
                                   const ChebyshevOptions& options, int jobs = 1);

/// count log-spaced points from lo to hi inclusive.
std::vector<Scalar> log_spaced(const Scalar& lo, const Scalar& hi, int count);

}  // namespace ccheb
