#pragma once

// Parametrized boundary curves gamma: [0,1] -> C of the compact sets studied,
// each carrying its logarithmic capacity and symmetry metadata.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ccheb/mpnum.hpp"

namespace ccheb {

class ContinuationFailure : public Error {
 public:
  using Error::Error;
};

enum class CurveFamily { polygon, hypocycloid, lune, power_lemniscate, polynomial_lemniscate };

const char* to_string(CurveFamily family);

class BoundaryCurve {
 public:
  using Parametrization = std::function<Complex(const Scalar&)>;

  struct Metadata {
    CurveFamily family = CurveFamily::polygon;
    std::string label;
    Scalar capacity;
    int rotation_order = 1;
    bool conjugation_symmetric = false;
    /// The rotation acts as t -> t + 1/m and conjugation as t -> 1 - t.
    bool canonical_symmetry = false;
    std::vector<Scalar> singular_params;
    // Family parameters (unused ones stay at defaults).
    int m = 0;
    Scalar r{1};
    Scalar alpha{0};
    std::vector<Complex> poly;  ///< polynomial lemniscate: coefficients, low to high
  };

  BoundaryCurve(Parametrization gamma, Metadata meta);

  /// gamma(t), with t reduced modulo 1.
  Complex operator()(const Scalar& t) const;

  const Metadata& metadata() const { return meta_; }
  CurveFamily family() const { return meta_.family; }
  const std::string& label() const { return meta_.label; }
  const Scalar& capacity() const { return meta_.capacity; }
  int rotation_order() const { return meta_.rotation_order; }
  bool conjugation_symmetric() const { return meta_.conjugation_symmetric; }
  bool canonical_symmetry() const { return meta_.canonical_symmetry; }
  const std::vector<Scalar>& singular_params() const { return meta_.singular_params; }

 private:
  Parametrization gamma_;
  Metadata meta_;
};

/// Regular m-gon with vertices at the m-th roots of unity, uniform per edge.
BoundaryCurve polygon_curve(int m);

/// Level curve |Phi| = r of the m-cusped hypocycloid: u + u^{-(m-1)}/(m-1), u = r e^{2 pi i t}.
BoundaryCurve hypocycloid_curve(int m, const Scalar& r = Scalar(1));

/// Circular lune with vertices +-alpha (r = 1) or its level curve at r > 1.
BoundaryCurve lune_curve(const Scalar& alpha, const Scalar& r = Scalar(1));

/// Lemniscate |z^m - 1| = r^m traced as m consecutive arcs.
BoundaryCurve power_lemniscate_curve(int m, const Scalar& r = Scalar(1));

/// Lemniscate |P(z)| = rho for a polynomial with coefficients `coeffs` (low
/// to high), traced by numerical continuation of the roots of P(z) = rho e^{i theta}.
/// `critical_max` overrides the largest critical-value modulus when positive.
BoundaryCurve polynomial_lemniscate_curve(const std::vector<Complex>& coeffs, const Scalar& rho,
                                          const Scalar& critical_max = Scalar(-1));

/// A curve family with its parameters; `r` is the level (rho for
/// polynomial lemniscates).
struct CurveSpec {
  CurveFamily family = CurveFamily::polygon;
  int m = 4;
  Scalar alpha{1};
  Scalar r{1};
  std::vector<Complex> coeffs;

  BoundaryCurve build() const;
  CurveSpec at_level(const Scalar& level) const;
};

/// Parses "polygon", "hypocycloid", "lune", "power-lemniscate", "poly-lemniscate".
CurveFamily parse_family(const std::string& name);

/// Largest modulus among critical values P(zeta), P'(zeta) = 0.
Scalar critical_value_max(const std::vector<Complex>& coeffs);

/// max_t |gamma(t)|.
Scalar max_modulus(const BoundaryCurve& curve);

/// Samples gamma at t = i / count, i = 0 .. count - 1.
std::vector<Complex> sample_curve(const BoundaryCurve& curve, std::size_t count);

}  // namespace ccheb
