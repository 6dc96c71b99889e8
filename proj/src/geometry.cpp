#include "ccheb/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ccheb/search.hpp"
#include "ccheb/zeros.hpp"

namespace ccheb {

const char* to_string(CurveFamily family) {
  switch (family) {
    case CurveFamily::polygon: return "polygon";
    case CurveFamily::hypocycloid: return "hypocycloid";
    case CurveFamily::lune: return "lune";
    case CurveFamily::power_lemniscate: return "power-lemniscate";
    case CurveFamily::polynomial_lemniscate: return "poly-lemniscate";
  }
  return "unknown";
}

BoundaryCurve::BoundaryCurve(Parametrization gamma, Metadata meta)
    : gamma_(std::move(gamma)), meta_(std::move(meta)) {}

Complex BoundaryCurve::operator()(const Scalar& t) const {
  if (t.sign() >= 0 && t < Scalar(1)) return gamma_(t);
  return gamma_(t - floor(t));
}

namespace {

Scalar ratio(long num, long den) { return Scalar(num) / Scalar(den); }

std::string short_decimal(const Scalar& x) {
  std::ostringstream os;
  os << x.to_double();
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

BoundaryCurve polygon_curve(int m) {
  if (m < 3) throw InvalidArgument("polygon needs m >= 3");
  std::vector<Complex> vertices;
  for (int k = 0; k <= m; ++k) {
    Scalar s, c;
    sincos_2pi(ratio(k % m, m), s, c);
    vertices.emplace_back(c, s);
  }

  BoundaryCurve::Metadata meta;
  meta.family = CurveFamily::polygon;
  meta.label = "polygon(m=" + std::to_string(m) + ")";
  meta.m = m;
  meta.rotation_order = m;
  meta.conjugation_symmetric = true;
  meta.canonical_symmetry = true;
  for (int k = 0; k < m; ++k) meta.singular_params.push_back(ratio(k, m));

  const Scalar inv_m = ratio(1, m);
  const Scalar pi = Scalar::pi();
  const Scalar side = Scalar(2) * sin(pi * inv_m);
  meta.capacity = gamma(inv_m) * side /
                  (pow(Scalar(2), Scalar(1) + Scalar(2) * inv_m) * sqrt(pi) *
                   gamma(Scalar(0.5) + inv_m));

  auto gamma_fn = [vertices = std::move(vertices), m](const Scalar& t) {
    Scalar s = t * Scalar(m);
    Scalar k = floor(s);
    long edge = std::clamp(k.to_long(), 0L, static_cast<long>(m) - 1);
    Scalar frac = s - Scalar(edge);
    const Complex& a = vertices[static_cast<std::size_t>(edge)];
    const Complex& b = vertices[static_cast<std::size_t>(edge) + 1];
    return a + frac * (b - a);
  };
  return BoundaryCurve(std::move(gamma_fn), std::move(meta));
}

BoundaryCurve hypocycloid_curve(int m, const Scalar& r) {
  if (m < 3) throw InvalidArgument("hypocycloid needs m >= 3");
  if (r < Scalar(1)) throw InvalidArgument("hypocycloid level r must be >= 1");

  BoundaryCurve::Metadata meta;
  meta.family = CurveFamily::hypocycloid;
  meta.label = "hypocycloid(m=" + std::to_string(m) + ",r=" + short_decimal(r) + ")";
  meta.m = m;
  meta.r = r;
  meta.capacity = r;
  meta.rotation_order = m;
  meta.conjugation_symmetric = true;
  meta.canonical_symmetry = true;
  if (r == Scalar(1))
    for (int k = 0; k < m; ++k) meta.singular_params.push_back(ratio(k, m));

  // r e^{i theta} + r^{-(m-1)} e^{-i (m-1) theta} / (m-1)
  const Scalar tail = pow(r, -static_cast<long>(m - 1)) / Scalar(m - 1);
  auto gamma_fn = [r, tail, m](const Scalar& t) {
    Scalar s1, c1, s2, c2;
    sincos_2pi(t, s1, c1);
    sincos_2pi(t * Scalar(m - 1), s2, c2);
    Complex z(r * c1, r * s1);
    z.re.add_product(tail, c2);
    z.im.add_product(-tail, s2);
    return z;
  };
  return BoundaryCurve(std::move(gamma_fn), std::move(meta));
}

BoundaryCurve lune_curve(const Scalar& alpha, const Scalar& r) {
  if (!(alpha > Scalar(0)) || alpha > Scalar(2))
    throw InvalidArgument("lune parameter alpha must lie in (0, 2]");
  if (r < Scalar(1)) throw InvalidArgument("lune level r must be >= 1");

  BoundaryCurve::Metadata meta;
  meta.family = CurveFamily::lune;
  meta.label = "lune(alpha=" + short_decimal(alpha) + ",r=" + short_decimal(r) + ")";
  meta.m = 2;
  meta.alpha = alpha;
  meta.r = r;
  meta.capacity = r;
  meta.rotation_order = 2;
  meta.conjugation_symmetric = true;
  meta.canonical_symmetry = true;
  if (r == Scalar(1)) meta.singular_params = {Scalar(0), Scalar(0.5)};

  // Evaluated on the half of the circle around w = 1; the other half follows
  // from gamma(t + 1/2) = -gamma(t), which keeps w = -1 (u = infinity) out.
  auto near_half = [alpha, r](const Scalar& s) {
    Scalar sn, cs;
    sincos_2pi(s, sn, cs);
    Complex w(r * cs, r * sn);
    Complex u = (w - Complex(1)) / (w + Complex(1));
    Complex ua = pow(u, alpha);
    return alpha * ((Complex(1) + ua) / (Complex(1) - ua));
  };
  auto gamma_fn = [near_half](const Scalar& t) {
    const Scalar quarter(0.25);
    if (t < quarter) return near_half(t);
    if (t >= Scalar(0.75)) return near_half(t - Scalar(1));
    return -near_half(t - Scalar(0.5));
  };
  return BoundaryCurve(std::move(gamma_fn), std::move(meta));
}

BoundaryCurve power_lemniscate_curve(int m, const Scalar& r) {
  if (m < 2) throw InvalidArgument("power lemniscate needs m >= 2");
  if (r < Scalar(1)) throw InvalidArgument("power lemniscate level r must be >= 1");

  BoundaryCurve::Metadata meta;
  meta.family = CurveFamily::power_lemniscate;
  meta.label = "power-lemniscate(m=" + std::to_string(m) + ",r=" + short_decimal(r) + ")";
  meta.m = m;
  meta.r = r;
  meta.capacity = r;
  meta.rotation_order = m;
  meta.conjugation_symmetric = true;
  meta.canonical_symmetry = true;
  if (r == Scalar(1))
    for (int k = 0; k < m; ++k) meta.singular_params.push_back(ratio(2 * k + 1, 2 * m));

  // Arc k: e^{2 pi i k/m} (1 + R e^{i theta})^{1/m}, theta in [0, 2 pi), with
  // the argument of 1 + R e^{i theta} continued from 0 so consecutive arcs join.
  const Scalar big_r = pow(r, static_cast<long>(m));
  const Scalar inv_big_r = Scalar(1) / big_r;
  auto gamma_fn = [m, big_r, inv_big_r](const Scalar& t) {
    Scalar s = t * Scalar(m);
    long k = std::clamp(floor(s).to_long(), 0L, static_cast<long>(m) - 1);
    Scalar frac = s - Scalar(k);
    Scalar sn, cs;
    sincos_2pi(frac, sn, cs);
    Scalar qre = Scalar(1);
    qre.add_product(big_r, cs);
    Scalar modulus = hypot(qre, big_r * sn);
    Scalar two_pi = Scalar(2) * Scalar::pi();
    Scalar theta = two_pi * frac;
    Scalar unwrap = atan2(-(sn * inv_big_r), Scalar(1) + cs * inv_big_r);
    Scalar angle = (theta + unwrap + two_pi * Scalar(k)) / Scalar(m);
    return polar(pow(modulus, Scalar(1) / Scalar(m)), angle);
  };
  return BoundaryCurve(std::move(gamma_fn), std::move(meta));
}

// ---------------------------------------------------------------------------
// Polynomial lemniscates

Scalar critical_value_max(const std::vector<Complex>& coeffs) {
  if (coeffs.size() < 3) return Scalar(0);
  std::vector<Complex> dp = derivative(coeffs);
  Scalar best(0);
  for (const auto& zeta : polynomial_roots(dp)) best = max(best, abs(evaluate(coeffs, zeta)));
  return best;
}

namespace {

constexpr int kNodesPerBranch = 720;
constexpr int kNewtonSteps = 50;

struct LemniscateTrace {
  std::vector<Complex> coeffs;
  std::vector<Complex> dcoeffs;
  Scalar rho;
  int degree = 0;
  Scalar tol;
  std::vector<Complex> nodes;  // degree * kNodesPerBranch + 1 points

  // Solves P(z) = rho e^{2 pi i turns} by Newton from `z`.
  bool newton(Complex& z, const Scalar& turns) const {
    Scalar sn, cs;
    sincos_2pi(turns, sn, cs);
    const Complex target(rho * cs, rho * sn);
    for (int it = 0; it < kNewtonSteps; ++it) {
      Complex step = (evaluate(coeffs, z) - target) / evaluate(dcoeffs, z);
      z -= step;
      if (abs(step) <= tol * (Scalar(1) + abs(z))) return true;
    }
    return false;
  }

  Complex at(const Scalar& t) const {
    // turns = degree * t; node spacing is 1 / kNodesPerBranch turns.
    Scalar pos = t * Scalar(static_cast<long>(degree) * kNodesPerBranch);
    long j = std::clamp(floor(pos).to_long(), 0L,
                        static_cast<long>(nodes.size()) - 2);
    Scalar frac = pos - Scalar(j);
    Complex z = nodes[static_cast<std::size_t>(j)];
    z.add_scaled(frac, nodes[static_cast<std::size_t>(j) + 1] - z);
    if (!newton(z, t * Scalar(degree))) {
      throw ContinuationFailure("Newton correction failed on the lemniscate at t = " +
                                t.to_string(12));
    }
    return z;
  }
};

int rotation_order_of(const std::vector<Complex>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  int g = 0;
  for (int k = 0; k < d; ++k)
    if (!(c[k].re.is_zero() && c[k].im.is_zero())) g = std::gcd(g, d - k);
  return g == 0 ? d : g;
}

}  // namespace

BoundaryCurve polynomial_lemniscate_curve(const std::vector<Complex>& coeffs, const Scalar& rho,
                                          const Scalar& critical_max) {
  if (coeffs.size() < 2) throw InvalidArgument("lemniscate polynomial must have degree >= 1");
  const Complex& lead = coeffs.back();
  if (lead.re.is_zero() && lead.im.is_zero())
    throw InvalidArgument("leading coefficient must be nonzero");
  const Scalar crit = critical_max.sign() >= 0 ? critical_max : critical_value_max(coeffs);
  if (!(rho > crit)) {
    throw InvalidArgument("lemniscate level " + rho.to_string(12) +
                          " must exceed the largest critical value modulus " + crit.to_string(12));
  }

  auto trace = std::make_shared<LemniscateTrace>();
  trace->coeffs = coeffs;
  trace->dcoeffs = derivative(coeffs);
  trace->rho = rho;
  trace->degree = static_cast<int>(coeffs.size()) - 1;
  trace->tol = Scalar::pow10(10 - working_digits());

  // Start from the root of P(z) = rho with the largest real part.
  std::vector<Complex> shifted = coeffs;
  shifted[0] -= Complex(rho);
  std::vector<Complex> roots = polynomial_roots(shifted);
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.re != b.re) return a.re > b.re;
    return a.im < b.im;
  });
  Scalar separation = abs(roots.front()) + Scalar(1);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      separation = min(separation, abs(roots[i] - roots[j]));

  const int total = trace->degree * kNodesPerBranch;
  const Scalar dturn = Scalar(1) / Scalar(kNodesPerBranch);
  trace->nodes.reserve(static_cast<std::size_t>(total) + 1);
  trace->nodes.push_back(roots.front());
  for (int j = 1; j <= total; ++j) {
    const Complex& prev = trace->nodes.back();
    Complex predicted;
    if (j == 1) {
      // Tangent: dz/dturn = 2 pi i rho e^{i theta} / P'(z).
      Complex slope = Complex(Scalar(0), Scalar(2) * Scalar::pi() * rho) /
                      evaluate(trace->dcoeffs, prev);
      predicted = prev + dturn * slope;
    } else {
      predicted = Scalar(2) * prev - trace->nodes[static_cast<std::size_t>(j) - 2];
    }
    Complex z = predicted;
    if (!trace->newton(z, dturn * Scalar(j)) ||
        abs(z - predicted) > separation / Scalar(4)) {
      throw ContinuationFailure("continuation failed at node " + std::to_string(j) +
                                "; is the level too close to a critical value?");
    }
    trace->nodes.push_back(std::move(z));
  }
  if (abs(trace->nodes.back() - trace->nodes.front()) > separation / Scalar(100))
    throw ContinuationFailure("continued roots do not close into a single curve");
  trace->nodes.back() = trace->nodes.front();

  BoundaryCurve::Metadata meta;
  meta.family = CurveFamily::polynomial_lemniscate;
  std::ostringstream label;
  label << "poly-lemniscate(deg=" << trace->degree << ",rho=" << rho.to_double() << ")";
  meta.label = label.str();
  meta.r = rho;
  meta.poly = coeffs;
  meta.capacity = pow(rho / abs(lead), Scalar(1) / Scalar(trace->degree));
  meta.rotation_order = rotation_order_of(coeffs);
  meta.conjugation_symmetric = std::all_of(coeffs.begin(), coeffs.end(),
                                           [](const Complex& c) { return c.im.is_zero(); });
  meta.canonical_symmetry = false;

  auto gamma_fn = [trace](const Scalar& t) { return trace->at(t); };
  return BoundaryCurve(std::move(gamma_fn), std::move(meta));
}

// ---------------------------------------------------------------------------

CurveFamily parse_family(const std::string& name) {
  for (auto f : {CurveFamily::polygon, CurveFamily::hypocycloid, CurveFamily::lune,
                 CurveFamily::power_lemniscate, CurveFamily::polynomial_lemniscate}) {
    if (name == to_string(f)) return f;
  }
  throw InvalidArgument("unknown curve family '" + name + "'");
}

BoundaryCurve CurveSpec::build() const {
  switch (family) {
    case CurveFamily::polygon: return polygon_curve(m);
    case CurveFamily::hypocycloid: return hypocycloid_curve(m, r);
    case CurveFamily::lune: return lune_curve(alpha, r);
    case CurveFamily::power_lemniscate: return power_lemniscate_curve(m, r);
    case CurveFamily::polynomial_lemniscate: return polynomial_lemniscate_curve(coeffs, r);
  }
  throw InvalidArgument("unknown curve family");
}

CurveSpec CurveSpec::at_level(const Scalar& level) const {
  CurveSpec out = *this;
  out.r = level;
  return out;
}

Scalar max_modulus(const BoundaryCurve& curve) {
  auto err = [&curve](const Scalar& t) { return curve(t); };
  return global_max_search(err, curve.singular_params()).value;
}

std::vector<Complex> sample_curve(const BoundaryCurve& curve, std::size_t count) {
  std::vector<Complex> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(curve(Scalar(static_cast<long>(i)) / Scalar(static_cast<long>(count))));
  return out;
}

}  // namespace ccheb
