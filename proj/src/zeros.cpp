#include "ccheb/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

namespace ccheb {

namespace {

// scale * sum |c_k| x^k: rounding-level bound on |p(x)|.
Scalar magnitude_bound(std::span<const Scalar> mags, const Scalar& x, const Scalar& scale) {
  Scalar acc(0);
  for (std::size_t k = mags.size(); k-- > 0;) {
    acc *= x;
    acc += mags[k];
  }
  return acc * scale;
}

// Aberth-Ehrlich on a monic polynomial given by its full coefficient vector.
std::vector<Complex> aberth(const std::vector<Complex>& c, int max_sweeps, int& sweeps_used) {
  const std::size_t n = c.size() - 1;
  if (n == 0) return {};
  if (n == 1) return {-c[0]};

  std::vector<Complex> dc = derivative(c);
  std::vector<Scalar> mags;
  Scalar radius(0);
  for (std::size_t k = 0; k < n; ++k) {
    mags.push_back(abs(c[k]));
    radius = max(radius, mags.back());
  }
  mags.push_back(Scalar(1));
  radius += Scalar(1);

  std::vector<Complex> z;
  z.reserve(n);
  const Scalar offset(0.4);
  for (std::size_t k = 0; k < n; ++k) {
    Scalar t = (Scalar(static_cast<long>(k)) + offset) / Scalar(static_cast<long>(n));
    Scalar s, co;
    sincos_2pi(t, s, co);
    z.emplace_back(radius * co, radius * s);
  }

  const Scalar eps = Scalar::epsilon();
  const Scalar tol = Scalar::pow10(10 - working_digits()) * radius;
  const Scalar backward = eps * Scalar(8L * static_cast<long>(n));
  std::vector<bool> done(n, false);

  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex pv = evaluate(c, z[i]);
      // Residual at rounding level: z[i] is as good as the arithmetic allows.
      Scalar az = abs(z[i]);
      Scalar bound = magnitude_bound(mags, az, backward);
      if (abs(pv) <= bound) {
        done[i] = true;
        continue;
      }
      Complex ratio = pv / evaluate(dc, z[i]);
      Complex sum;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        sum += Complex(Scalar(1)) / (z[i] - z[j]);
      }
      Complex w = ratio / (Complex(Scalar(1)) - ratio * sum);
      z[i] -= w;
      if (abs(w) <= tol) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) {
      sweeps_used = sweep;
      return z;
    }
  }
  throw NoConvergence("Aberth iteration did not converge in " + std::to_string(max_sweeps) +
                      " sweeps");
}

// Newton on p^(k-1), which has a simple zero at a k-fold root.
Complex polish_multiple(const std::vector<Complex>& c, std::size_t k, const Complex& start,
                        const Scalar& reach) {
  std::vector<Complex> d = c;
  for (std::size_t j = 1; j < k; ++j) d = derivative(d);
  const std::vector<Complex> dd = derivative(d);
  Complex z = start;
  for (int it = 0; it < 64; ++it) {
    const Complex slope = evaluate(dd, z);
    if (slope.re.is_zero() && slope.im.is_zero()) break;
    const Complex step = evaluate(d, z) / slope;
    z -= step;
    if (abs(z - start) > reach) return start;
    if (abs(step) <= Scalar::epsilon() * max(Scalar(1), abs(z))) break;
  }
  return z;
}

void collapse_clusters(const std::vector<Complex>& c, std::vector<Complex>& z) {
  const Scalar tau = Scalar::pow10(-(working_digits() / 4));
  const std::size_t n = z.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar scale = max(Scalar(1), max(abs(z[i]), abs(z[j])));
      if (abs(z[i] - z[j]) <= tau * scale) parent[find(i)] = find(j);
    }
  std::vector<Complex> sums(n);
  std::vector<std::size_t> counts(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    sums[find(i)] += z[i];
    ++counts[find(i)];
  }
  std::vector<Complex> centre(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (counts[i] < 2) continue;
    const Complex mean = sums[i] / Scalar(static_cast<long>(counts[i]));
    centre[i] = polish_multiple(c, counts[i], mean, tau * max(Scalar(1), abs(mean)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (counts[root] > 1) z[i] = centre[root];
  }
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, int max_sweeps) {
  if (coeffs.size() < 2) throw InvalidArgument("polynomial must have degree >= 1");
  const Complex& lead = coeffs.back();
  if (lead.re.is_zero() && lead.im.is_zero())
    throw InvalidArgument("leading coefficient must be nonzero");
  std::vector<Complex> lower;
  for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) lower.push_back(coeffs[k] / lead);
  return polynomial_zeros(MonicPolynomial(std::move(lower)), max_sweeps).zeros;
}

ZeroSet polynomial_zeros(const MonicPolynomial& p, int max_sweeps) {
  if (p.degree() < 1) throw InvalidArgument("polynomial must have degree >= 1");
  ZeroSet out;
  out.degree = p.degree();

  std::vector<Complex> c = p.coefficients();
  std::size_t at_origin = 0;
  while (at_origin + 1 < c.size() && c[at_origin].re.is_zero() && c[at_origin].im.is_zero())
    ++at_origin;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(at_origin));

  std::vector<Complex> z = aberth(c, max_sweeps, out.sweeps);
  collapse_clusters(c, z);
  z.insert(z.begin(), at_origin, Complex());

  for (const auto& root : z) out.residuals.push_back(abs(p(root)));
  out.zeros = std::move(z);
  return out;
}

ZeroSummary zero_measure_summary(const ZeroSet& zs, const BoundaryCurve& curve,
                                 double near_tolerance, std::vector<double> shrink,
                                 std::size_t curve_samples) {
  using cd = std::complex<double>;
  std::vector<cd> pts;
  pts.reserve(curve_samples);
  for (const auto& z : sample_curve(curve, curve_samples))
    pts.emplace_back(z.re.to_double(), z.im.to_double());

  double diameter = 0;
  const std::size_t stride = std::max<std::size_t>(1, pts.size() / 1024);
  for (std::size_t i = 0; i < pts.size(); i += stride)
    for (std::size_t j = i + stride; j < pts.size(); j += stride)
      diameter = std::max(diameter, std::abs(pts[i] - pts[j]));

  auto distance = [&](cd z) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const cd a = pts[i];
      const cd b = pts[(i + 1) % pts.size()];
      const cd ab = b - a;
      const double len2 = std::norm(ab);
      double s = len2 > 0 ? std::real((z - a) * std::conj(ab)) / len2 : 0.0;
      s = std::clamp(s, 0.0, 1.0);
      best = std::min(best, std::abs(z - (a + s * ab)));
    }
    return best;
  };

  ZeroSummary out;
  out.count = zs.zeros.size();
  out.diameter = diameter;
  out.shrink = std::move(shrink);
  out.near_tolerance = near_tolerance;
  out.interior_fraction.assign(out.shrink.size(), 0.0);
  out.min_distance = std::numeric_limits<double>::infinity();
  std::size_t near = 0;
  for (const auto& z : zs.zeros) {
    const double d = distance(cd(z.re.to_double(), z.im.to_double()));
    out.min_distance = std::min(out.min_distance, d);
    if (d <= near_tolerance) ++near;
    for (std::size_t k = 0; k < out.shrink.size(); ++k)
      if (d > (1.0 - out.shrink[k]) * diameter / 2) out.interior_fraction[k] += 1.0;
  }
  if (out.count > 0) {
    for (auto& f : out.interior_fraction) f /= static_cast<double>(out.count);
    out.near_fraction = static_cast<double>(near) / static_cast<double>(out.count);
  } else {
    out.min_distance = 0;
  }
  return out;
}

}  // namespace ccheb
