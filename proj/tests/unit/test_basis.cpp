#include "ccheb/basis.hpp"
#include "ccheb/chebyshev.hpp"
#include "unit/helpers.hpp"

using namespace ccheb;
using namespace testing;

namespace {

BoundaryCurve cubic_lemniscate() {
  return polynomial_lemniscate_curve({Scalar(1), Scalar(1), Scalar(0), Scalar(1)}, Scalar(2));
}

BoundaryCurve skew_lemniscate() {
  return polynomial_lemniscate_curve({Scalar(1), Complex(Scalar(0), Scalar(1)), Scalar(0), Scalar(1)},
                                     Scalar(2));
}

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("square with rotation symmetry") {
  BasisSpec b = build_basis(polygon_curve(4), 17, true);
  CHECK(b.exponents() == std::vector<int>{1, 5, 9, 13});
  CHECK_FALSE(b.complex_parts());
  CHECK(b.n_basis() == 4);
  CHECK(b.rotation_order() == 4);
  CHECK(b.residue() == 1);
}

TEST_CASE("square without symmetry keeps real coefficients") {
  BasisSpec b = build_basis(polygon_curve(4), 5, false);
  CHECK(b.exponents() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_FALSE(b.complex_parts());
  BasisSpec full = build_basis(polygon_curve(4), 5, BasisOptions{false, false});
  CHECK(full.complex_parts());
  CHECK(full.n_basis() == 10);
}

TEST_CASE("conjugation symmetry only") {
  BasisSpec b = build_basis(cubic_lemniscate(), 5, true);
  CHECK(b.exponents() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_FALSE(b.complex_parts());
  CHECK(b.n_basis() == 5);
}

TEST_CASE("no symmetry") {
  BoundaryCurve c = skew_lemniscate();
  CHECK_FALSE(c.conjugation_symmetric());
  BasisSpec b = build_basis(c, 3, true);
  CHECK(b.exponents() == std::vector<int>{0, 1, 2});
  CHECK(b.complex_parts());
  CHECK(b.n_basis() == 6);

  Complex f;
  std::vector<Complex> phi(6);
  const Scalar t("0.3");
  b.evaluate(t, f, phi);
  const Complex z = c(t);
  CHECK_CLOSE(f, pow(z, 3L), prec_tol(6));
  for (int k = 0; k < 3; ++k) {
    CHECK_CLOSE(phi[k], pow(z, static_cast<long>(k)), prec_tol(6));
    CHECK_CLOSE(phi[k + 3], Complex::i() * pow(z, static_cast<long>(k)), prec_tol(6));
  }
}

TEST_CASE("rotation exponents follow the residue class") {
  std::vector<BoundaryCurve> curves{lune_curve(S("0.5")), hypocycloid_curve(3), hypocycloid_curve(4),
                                    hypocycloid_curve(5), polygon_curve(6)};
  for (const auto& c : curves) {
    const int m = c.rotation_order();
    for (int n = 1; n <= 20; ++n) {
      BasisSpec b = build_basis(c, n, true);
      CHECK(b.rotation_order() == m);
      std::vector<int> expected;
      for (int e = n % m; e < n; e += m) expected.push_back(e);
      CHECK(b.exponents() == expected);
    }
  }
}

TEST_CASE("assemble_polynomial") {
  SUBCASE("lemniscate cubic") {
    BasisSpec b = build_basis(power_lemniscate_curve(2), 3, true);
    REQUIRE(b.exponents() == std::vector<int>{1});
    // Coefficient of the closed-form T_3 on the lemniscate at r = 1.
    const Scalar r(1);
    const Scalar r4 = pow(r, 4L);
    const Scalar c = (Scalar(4) - r4 + sqrt(Scalar(1) + Scalar(7) * r4 + r4 * r4)) / Scalar(5);
    CHECK_CLOSE(c, S("1.2"), prec_tol(2));
    std::vector<Scalar> lambda{S("1.2")};
    MonicPolynomial p = assemble_polynomial(b, lambda);
    CHECK(p.degree() == 3);
    CHECK_CLOSE(p.coefficient(1), Complex(-c), prec_tol(2));
    CHECK(p.coefficient(0).re.is_zero());
    CHECK(p.coefficient(2).re.is_zero());
    CHECK(p.coefficient(3).re == Scalar(1));
  }
  SUBCASE("zero coefficients give the monomial") {
    BasisSpec b = build_basis(polygon_curve(5), 12, true);
    std::vector<Scalar> lambda(b.n_basis());
    MonicPolynomial p = assemble_polynomial(b, lambda);
    for (int k = 0; k < 12; ++k) CHECK(abs(p.coefficient(k)).is_zero());
    CHECK(p.coefficient(12).re == Scalar(1));
  }
  SUBCASE("complex parts") {
    BasisSpec b(skew_lemniscate(), 2, {0, 1}, true, 1, SearchDomain::full());
    std::vector<Scalar> lambda{Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
    MonicPolynomial p = assemble_polynomial(b, lambda);
    CHECK_CLOSE(p.coefficient(0), Complex(Scalar(-1)), Scalar(0));
    CHECK(p.coefficient(1).re.is_zero());
    CHECK(p.coefficient(1).im == Scalar(-1));
  }
  SUBCASE("length mismatch") {
    BasisSpec b = build_basis(polygon_curve(4), 9, true);
    std::vector<Scalar> lambda(b.n_basis() + 1);
    CHECK_THROWS_AS(assemble_polynomial(b, lambda), InvalidArgument);
  }
  CHECK_THROWS_AS(build_basis(polygon_curve(4), 0, true), InvalidArgument);
}

TEST_CASE("sparsity round trip") {
  for (int m : {3, 4, 6}) {
    BasisSpec b = build_basis(polygon_curve(m), 3 * m + 2, true);
    std::vector<Scalar> lambda;
    for (std::size_t k = 0; k < b.n_basis(); ++k) lambda.emplace_back(static_cast<long>(k + 1));
    MonicPolynomial p = assemble_polynomial(b, lambda);
    for (int k = 0; k < p.degree(); ++k) {
      const bool allowed = (k - 2) % m == 0 && k >= 2;
      CHECK((abs(p.coefficient(k)).is_zero() != allowed));
    }
  }
}

TEST_CASE("full and reduced bases give the same polynomial") {
  // Complex best approximations are only quadratically unique: a gap of
  // tau^2 pins the coefficients to about tau.
  const Scalar tau("1e-10");
  ChebyshevOptions reduced;
  reduced.threshold = tau * tau;
  ChebyshevOptions full = reduced;
  full.use_symmetry = false;
  struct Case {
    BoundaryCurve curve;
    int degree;
  };
  std::vector<Case> cases{{polygon_curve(4), 5},
                          {polygon_curve(3), 4},
                          {hypocycloid_curve(3), 5},
                          {lune_curve(S("1.5")), 5}};
  for (const auto& c : cases) {
    CAPTURE(c.curve.label());
    CAPTURE(c.degree);
    ChebyshevRecord a = chebyshev(c.curve, c.degree, reduced);
    ChebyshevRecord b = chebyshev(c.curve, c.degree, full);
    REQUIRE(a.status == RemezStatus::converged);
    REQUIRE(b.status == RemezStatus::converged);
    for (int k = 0; k <= c.degree; ++k)
      CHECK_CLOSE(a.polynomial.coefficient(k), b.polynomial.coefficient(k), Scalar(10) * tau);
  }
}

}  // TEST_SUITE
