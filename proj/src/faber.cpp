#include "ccheb/faber.hpp"

#include <cmath>

#include "ccheb/parallel.hpp"

namespace ccheb {

namespace {

// Coefficients of sum_j binom(a, j) x^j for j = 0 .. count - 1.
std::vector<Scalar> binomial_series(const Scalar& a, int count) {
  std::vector<Scalar> out;
  Scalar c(1);
  for (int j = 0; j < count; ++j) {
    out.push_back(c);
    c = c * (a - Scalar(j)) / Scalar(j + 1);
  }
  return out;
}

}  // namespace

LaurentMap laurent_of(const CurveSpec& spec, int order) {
  if (order < 0) throw InvalidArgument("Laurent order must be nonnegative");
  LaurentMap map;
  map.capacity = Scalar(1);
  map.b.assign(static_cast<std::size_t>(order) + 1, Complex());
  auto set = [&](int k, const Scalar& v) {
    if (k >= 0 && k <= order) map.b[static_cast<std::size_t>(k)] = Complex(v);
  };

  switch (spec.family) {
    case CurveFamily::hypocycloid:
      if (spec.m < 3) throw InvalidArgument("hypocycloid needs m >= 3");
      set(spec.m - 1, Scalar(1) / Scalar(spec.m - 1));
      break;
    case CurveFamily::power_lemniscate: {
      if (spec.m < 2) throw InvalidArgument("power lemniscate needs m >= 2");
      // w (1 + w^{-m})^{1/m}
      const int terms = (order + 1) / spec.m + 2;
      const auto c = binomial_series(Scalar(1) / Scalar(spec.m), terms);
      for (int j = 1; j < terms; ++j) set(spec.m * j - 1, c[static_cast<std::size_t>(j)]);
      break;
    }
    case CurveFamily::lune: {
      if (spec.alpha != Scalar(0.5))
        throw UnsupportedFamily("explicit exterior map only for the lune with alpha = 1/2");
      // (w + w sqrt(1 - w^{-2})) / 2
      const int terms = (order + 1) / 2 + 2;
      const auto c = binomial_series(Scalar(0.5), terms);
      for (int j = 1; j < terms; ++j) {
        Scalar v = c[static_cast<std::size_t>(j)] / Scalar(2);
        if (j % 2 == 1) v = -v;
        set(2 * j - 1, v);
      }
      break;
    }
    default:
      throw UnsupportedFamily(std::string("no explicit exterior map for ") +
                              to_string(spec.family));
  }

  // Level curve at r: Psi_r(w) = Psi(r w).
  if (spec.r != Scalar(1)) {
    map.capacity = spec.r;
    Scalar scale(1);
    for (int k = 1; k <= order; ++k) {
      scale /= spec.r;
      map.b[static_cast<std::size_t>(k)] *= scale;
    }
  }
  return map;
}

std::vector<MonicPolynomial> faber_polynomials(const LaurentMap& map, int degree) {
  if (degree < 0) throw InvalidArgument("degree must be nonnegative");
  if (degree > map.order()) {
    throw InvalidArgument("Laurent expansion truncated at order " + std::to_string(map.order()) +
                          ", degree " + std::to_string(degree) + " requested");
  }
  std::vector<Complex> bt;
  Scalar ck(1);
  for (const auto& bk : map.b) {
    bt.push_back(bk * ck);
    ck *= map.capacity;
  }

  // Full coefficient vectors, low to high, leading 1 included.
  std::vector<std::vector<Complex>> f{{Complex(1)}};
  for (int n = 0; n < degree; ++n) {
    std::vector<Complex> next(static_cast<std::size_t>(n) + 2);
    const auto& fn = f[static_cast<std::size_t>(n)];
    for (std::size_t k = 0; k < fn.size(); ++k) next[k + 1] += fn[k];
    for (int j = 0; j <= n; ++j) {
      const Complex& b = bt[static_cast<std::size_t>(j)];
      if (b.re.is_zero() && b.im.is_zero()) continue;
      const auto& g = f[static_cast<std::size_t>(n - j)];
      for (std::size_t k = 0; k < g.size(); ++k) next[k] -= b * g[k];
    }
    next[0] -= bt[static_cast<std::size_t>(n)] * Scalar(n);
    f.push_back(std::move(next));
  }

  std::vector<MonicPolynomial> out;
  for (auto& c : f) {
    c.pop_back();
    out.emplace_back(std::move(c));
  }
  return out;
}

Scalar coeff_inf_distance(const MonicPolynomial& p, const MonicPolynomial& q) {
  const int top = std::max(p.degree(), q.degree());
  Scalar best(0);
  for (int k = 0; k <= top; ++k) best = max(best, abs(p.coefficient(k) - q.coefficient(k)));
  return best;
}

std::vector<Scalar> log_spaced(const Scalar& lo, const Scalar& hi, int count) {
  if (count < 1 || !(lo > Scalar(0)) || hi < lo)
    throw InvalidArgument("log-spaced grid needs count >= 1 and 0 < lo <= hi");
  if (count == 1) return {lo};
  std::vector<Scalar> out;
  const Scalar a = log(lo);
  const Scalar step = (log(hi) - a) / Scalar(count - 1);
  for (int i = 0; i < count; ++i) out.push_back(exp(a + step * Scalar(i)));
  out.back() = hi;
  return out;
}

SweepResult faber_connection_sweep(const CurveSpec& spec, int degree,
                                   const std::vector<Scalar>& r_grid,
                                   const ChebyshevOptions& options, int jobs) {
  for (const auto& r : r_grid)
    if (!(r > Scalar(1))) throw InvalidArgument("sweep levels must exceed 1");
  const MonicPolynomial faber =
      faber_polynomials(laurent_of(spec.at_level(Scalar(1)), degree), degree).back();

  SweepResult out;
  out.points.resize(r_grid.size());
  parallel_for(r_grid.size(), jobs, [&](std::size_t i) {
    SweepPoint& pt = out.points[i];
    pt.r = r_grid[i];
    try {
      const ChebyshevRecord rec = chebyshev(spec.at_level(r_grid[i]).build(), degree, options);
      pt.iterations = rec.iterations;
      pt.distance = coeff_inf_distance(faber, rec.polynomial);
      if (pt.distance < options.threshold) {
        pt.distance = options.threshold;
        pt.censored = true;
      }
    } catch (const std::exception& e) {
      pt.error = e.what();
    }
  });

  std::vector<double> xs, ys;
  for (const auto& pt : out.points) {
    if (!pt.ok() || pt.censored) continue;
    xs.push_back(std::log(pt.r.to_double()));
    ys.push_back(log(pt.distance).to_double());
  }
  if (xs.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return out;
}

}  // namespace ccheb
