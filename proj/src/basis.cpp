#include "ccheb/basis.hpp"

#include <algorithm>
#include <utility>

namespace ccheb {

BasisSpec::BasisSpec(BoundaryCurve curve, int degree, std::vector<int> exponents,
                     bool complex_parts, int rotation_order, SearchDomain domain)
    : curve_(std::move(curve)),
      degree_(degree),
      exponents_(std::move(exponents)),
      complex_parts_(complex_parts),
      rotation_order_(rotation_order),
      domain_(std::move(domain)) {}

void BasisSpec::evaluate(const Scalar& t, Complex& f, std::span<Complex> phi) const {
  if (phi.size() != n_basis()) throw InvalidArgument("basis value buffer has wrong length");
  const Complex z = curve_(t);
  // Exponents are residue, residue + m, ...; f continues the same progression.
  Complex power = pow(z, static_cast<long>(residue()));
  const Complex stride = pow(z, static_cast<long>(rotation_order_));
  const std::size_t count = exponents_.size();
  for (std::size_t k = 0; k < count; ++k) {
    phi[k] = power;
    if (complex_parts_) phi[k + count] = Complex(-power.im, power.re);
    power *= stride;
  }
  f = std::move(power);
}

Complex BasisSpec::error(const Scalar& t, std::span<const Scalar> lambda) const {
  std::vector<Complex> phi(n_basis());
  Complex f;
  evaluate(t, f, phi);
  for (std::size_t k = 0; k < phi.size(); ++k) {
    f.re.add_product(-lambda[k], phi[k].re);
    f.im.add_product(-lambda[k], phi[k].im);
  }
  return f;
}

BasisSpec build_basis(const BoundaryCurve& curve, int degree, bool use_symmetry) {
  return build_basis(curve, degree, BasisOptions{use_symmetry, true});
}

BasisSpec build_basis(const BoundaryCurve& curve, int degree, const BasisOptions& options) {
  if (degree < 1) throw InvalidArgument("degree must be >= 1");
  const int m = options.rotation ? std::max(1, curve.rotation_order()) : 1;
  const bool real = options.conjugation && curve.conjugation_symmetric();

  std::vector<int> exponents;
  for (int e = degree % m; e < degree; e += m) exponents.push_back(e);

  SearchDomain domain = SearchDomain::full();
  if (curve.canonical_symmetry()) {
    domain.hi = Scalar(1) / Scalar(m);
    if (real) domain = SearchDomain::mirrored(Scalar(0), domain.hi / Scalar(2));
  }
  return BasisSpec(curve, degree, std::move(exponents), !real, m, std::move(domain));
}

MonicPolynomial assemble_polynomial(const BasisSpec& spec, std::span<const Scalar> lambda) {
  if (lambda.size() != spec.n_basis()) {
    throw InvalidArgument("expected " + std::to_string(spec.n_basis()) + " coefficients, got " +
                          std::to_string(lambda.size()));
  }
  std::vector<Complex> lower(static_cast<std::size_t>(spec.degree()));
  const std::size_t count = spec.exponents().size();
  for (std::size_t k = 0; k < count; ++k) {
    Complex& a = lower[static_cast<std::size_t>(spec.exponents()[k])];
    a.re = -lambda[k];
    a.im = spec.complex_parts() ? -lambda[k + count] : Scalar(0);
  }
  return MonicPolynomial(std::move(lower));
}

}  // namespace ccheb
