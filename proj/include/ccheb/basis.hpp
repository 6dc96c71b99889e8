#pragma once

// Real-linear basis phi_k and target f = gamma^N for the Chebyshev problem on
// a boundary curve, optionally reduced by rotation and conjugation symmetry.

#include <span>
#include <vector>

#include "ccheb/geometry.hpp"
#include "ccheb/mpnum.hpp"
#include "ccheb/polynomial.hpp"
#include "ccheb/search.hpp"

namespace ccheb {

struct BasisOptions {
  bool rotation = true;     ///< use z^l Q(z^m) when the curve has rotation order m > 1
  bool conjugation = true;  ///< use real coefficients when the curve is conjugation symmetric
};

class BasisSpec {
 public:
  BasisSpec(BoundaryCurve curve, int degree, std::vector<int> exponents, bool complex_parts,
            int rotation_order, SearchDomain domain);

  int degree() const { return degree_; }
  const std::vector<int>& exponents() const { return exponents_; }
  bool complex_parts() const { return complex_parts_; }
  /// Rotation order used for the reduction (1 when not applied).
  int rotation_order() const { return rotation_order_; }
  int residue() const { return degree_ % rotation_order_; }
  std::size_t n_basis() const { return exponents_.size() * (complex_parts_ ? 2 : 1); }

  const BoundaryCurve& curve() const { return curve_; }
  /// Parameter interval over which |f - phi| attains its norm.
  const SearchDomain& domain() const { return domain_; }

  /// f(t) and the complex values of phi_1 .. phi_n at t; `phi` must hold n_basis() entries.
  void evaluate(const Scalar& t, Complex& f, std::span<Complex> phi) const;
  /// f(t) - sum_k lambda_k phi_k(t).
  Complex error(const Scalar& t, std::span<const Scalar> lambda) const;

 private:
  BoundaryCurve curve_;
  int degree_;
  std::vector<int> exponents_;
  bool complex_parts_;
  int rotation_order_;
  SearchDomain domain_;
};

/// Basis for degree N; `use_symmetry` toggles the rotation reduction (real
/// coefficients are still used whenever the curve is conjugation symmetric).
BasisSpec build_basis(const BoundaryCurve& curve, int degree, bool use_symmetry = true);
BasisSpec build_basis(const BoundaryCurve& curve, int degree, const BasisOptions& options);

/// z^N - sum_k (lambda_k + i lambda_{k+E}) z^{e_k}.
MonicPolynomial assemble_polynomial(const BasisSpec& spec, std::span<const Scalar> lambda);

}  // namespace ccheb
