#include "ccheb/chebyshev.hpp"
#include "unit/helpers.hpp"

using namespace ccheb;
using namespace testing;

namespace {

void check_record_invariants(const ChebyshevRecord& rec, const BoundaryCurve& curve, int m) {
  CAPTURE(rec.label);
  CAPTURE(rec.degree);
  const Scalar slack = Scalar(10) * rec.threshold;
  CHECK(rec.widom >= Scalar(1) - slack);
  CHECK_CLOSE(rec.widom, rec.sup_norm / pow(rec.capacity, static_cast<long>(rec.degree)),
              prec_tol(8) * rec.widom);
  const int l = rec.degree % m;
  for (int k = 0; k < rec.degree; ++k) {
    const Complex a = rec.polynomial.coefficient(k);
    if (k < l || (k - l) % m != 0) CHECK(abs(a) <= slack * rec.sup_norm);
    if (curve.conjugation_symmetric()) CHECK(abs(a.im) <= slack * rec.sup_norm);
  }
}

}  // namespace

TEST_SUITE("chebyshev") {

TEST_CASE("circle") {
  ChebyshevRecord rec = chebyshev(lune_curve(Scalar(1)), 7);
  CHECK(rec.ok());
  CHECK_CLOSE(rec.widom, Scalar(1), tol(-9));
  for (int k = 0; k < 7; ++k) CHECK(abs(rec.polynomial.coefficient(k)) <= tol(-9));
  CHECK(rec.digits == 60);
}

TEST_CASE("hexagon degree 5 is z^5") {
  ChebyshevRecord rec = chebyshev(polygon_curve(6), 5);
  CHECK(std::abs(rec.widom.to_double() - 1.51420435) < 1e-6);
  for (int k = 0; k < 5; ++k) CHECK(abs(rec.polynomial.coefficient(k)) <= tol(-9));
}

TEST_CASE("hypocycloid m = 6 degree 5") {
  ChebyshevRecord rec = chebyshev(hypocycloid_curve(6), 5);
  CHECK_CLOSE(rec.widom, pow(S("1.2"), 5L), tol(-9));
  CHECK(std::abs(rec.widom.to_double() - 2.48832) < 1e-8);
}

TEST_CASE("widom_table") {
  SUBCASE("square") {
    auto recs = widom_table(polygon_curve(4), {5, 10});
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].degree == 5);
    CHECK(std::abs(recs[0].widom.to_double() - 1.27841716) < 1e-6);
    CHECK(std::abs(recs[1].widom.to_double() - 1.12981144) < 1e-6);
  }
  SUBCASE("lune 3/2 degree 10") {
    auto recs = widom_table(lune_curve(S("1.5")), {10});
    CHECK(std::abs(recs[0].widom.to_double() - 1.06185388) < 1e-6);
  }
  SUBCASE("interval") {
    auto recs = widom_table(lune_curve(Scalar(2)), {2, 3, 5, 8});
    for (const auto& r : recs) CHECK(std::abs(r.widom.to_double() - 2.0) < 1e-8);
  }
  SUBCASE("parallel runs keep input order and match serial results") {
    std::vector<int> degrees{7, 3, 5, 4};
    auto serial = widom_table(hypocycloid_curve(3), degrees, {}, 1);
    auto parallel = widom_table(hypocycloid_curve(3), degrees, {}, 3);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      CHECK(parallel[i].degree == degrees[i]);
      CHECK(parallel[i].widom == serial[i].widom);
    }
  }
  SUBCASE("failures are recorded") {
    auto recs = widom_table(polygon_curve(4), {0, 3});
    CHECK_FALSE(recs[0].ok());
    CHECK(recs[1].ok());
  }
  CHECK_THROWS_AS(widom_table(polygon_curve(4), {}), InvalidArgument);
}

TEST_CASE("sup_norm") {
  MonicPolynomial zz1(std::vector<Complex>{Scalar(-1), Scalar(0)});
  CHECK_CLOSE(sup_norm(zz1, lune_curve(Scalar(1))), Scalar(2), prec_tol(8));
  for (int n = 1; n <= 3; ++n) {
    for (const char* rs : {"1", "1.5"}) {
      const Scalar r = S(rs);
      std::vector<Complex> roots;
      for (int k = 0; k < n; ++k) {
        roots.emplace_back(Scalar(1));
        roots.emplace_back(Scalar(-1));
      }
      MonicPolynomial p = MonicPolynomial::from_roots(roots);
      CHECK_CLOSE(sup_norm(p, power_lemniscate_curve(2, r)), pow(r, static_cast<long>(2 * n)),
                  prec_tol(8));
    }
  }
  CHECK_CLOSE(sup_norm(MonicPolynomial::monomial(5), polygon_curve(6)), Scalar(1), prec_tol(8));

  SUBCASE("solver upper bound agrees with a fresh search") {
    BoundaryCurve c = polygon_curve(5);
    ChebyshevRecord rec = chebyshev(c, 9);
    CHECK_CLOSE(sup_norm(rec.polynomial, c), rec.sup_norm, tol(-20) * rec.sup_norm);
  }
}

TEST_CASE("record invariants") {
  struct Case {
    BoundaryCurve curve;
    int m;
    std::vector<int> degrees;
    bool convex;
  };
  std::vector<Case> cases{{polygon_curve(3), 3, {4, 7, 11}, true},
                          {polygon_curve(4), 4, {6, 9, 13}, true},
                          {polygon_curve(6), 6, {7, 8}, true},
                          {lune_curve(S("1.5")), 2, {6, 9}, true},
                          {lune_curve(S("0.5")), 2, {4, 7}, false},
                          {hypocycloid_curve(4), 4, {6, 11}, false},
                          {power_lemniscate_curve(3), 3, {5, 7}, false}};
  for (const auto& c : cases) {
    for (const auto& rec : widom_table(c.curve, c.degrees)) {
      REQUIRE(rec.ok());
      check_record_invariants(rec, c.curve, c.m);
      if (c.convex) CHECK(rec.widom <= Scalar(2) + Scalar(10) * rec.threshold);
    }
  }
}

TEST_CASE("lemniscate powers are exact") {
  for (int m : {2, 3}) {
    for (const char* rs : {"1", "1.5"}) {
      BoundaryCurve c = power_lemniscate_curve(m, S(rs));
      for (int n = 1; n <= 3; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        ChebyshevRecord rec = chebyshev(c, n * m);
        // (z^m - 1)^n has a_{km} = C(n, k) (-1)^{n-k}.
        long binom = 1;
        for (int k = 0; k <= n; ++k) {
          const long sign = (n - k) % 2 == 0 ? 1 : -1;
          CHECK_CLOSE(rec.polynomial.coefficient(k * m), Complex(Scalar(sign * binom)),
                      Scalar(10) * rec.threshold);
          binom = binom * (n - k) / (k + 1);
        }
        CHECK_CLOSE(rec.widom, Scalar(1), Scalar(10) * rec.threshold);
      }
    }
  }
}

}  // TEST_SUITE
