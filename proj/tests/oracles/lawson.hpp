#pragma once

// Discrete minimax in double precision by Lawson's iteratively reweighted
// least squares. Shares nothing with the extended-precision solver: own
// sampling, own basis evaluation, own linear algebra.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

struct LawsonResult {
  std::vector<double> lambda;
  double discrete_norm = 0;  ///< max_i |e_i| of the final iterate
  double lower = 0;          ///< sqrt(sum w_i |e_i|^2), a lower bound of the discrete minimax
  int iterations = 0;
};

/// Solves the symmetric positive definite system a x = b (row-major n x n).
inline std::vector<double> cholesky_solve(std::vector<double> a, std::vector<double> b, int n) {
  for (int j = 0; j < n; ++j) {
    double d = a[j * n + j];
    for (int k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
    d = std::sqrt(std::max(d, 1e-300));
    a[j * n + j] = d;
    for (int i = j + 1; i < n; ++i) {
      double s = a[i * n + j];
      for (int k = 0; k < j; ++k) s -= a[i * n + k] * a[j * n + k];
      a[i * n + j] = s / d;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) b[i] -= a[i * n + k] * b[k];
    b[i] /= a[i * n + i];
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) b[i] -= a[k * n + i] * b[k];
    b[i] /= a[i * n + i];
  }
  return b;
}

/// min over real lambda of max_i |f_i - sum_k lambda_k phi_k(z_i)|, where
/// phi[k][i] holds basis function k at sample i.
inline LawsonResult lawson(const std::vector<cd>& f, const std::vector<std::vector<cd>>& phi,
                           int max_iter, double tol) {
  const std::size_t m = f.size();
  const int n = static_cast<int>(phi.size());
  std::vector<double> fr(m), fi(m), pr(n * m), pi(n * m);
  for (std::size_t i = 0; i < m; ++i) {
    fr[i] = f[i].real();
    fi[i] = f[i].imag();
    for (int k = 0; k < n; ++k) {
      pr[k * m + i] = phi[k][i].real();
      pi[k * m + i] = phi[k][i].imag();
    }
  }
  // Gram entries Re(conj(phi_j) phi_k) and Re(conj(phi_j) f) per sample.
  std::vector<double> g(n * n * m), h(n * m);
  for (int j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      h[j * m + i] = pr[j * m + i] * fr[i] + pi[j * m + i] * fi[i];
      for (int k = 0; k < n; ++k)
        g[(j * n + k) * m + i] = pr[j * m + i] * pr[k * m + i] + pi[j * m + i] * pi[k * m + i];
    }
  }

  LawsonResult res;
  res.lambda.assign(n, 0.0);
  std::vector<double> w(m, 1.0 / static_cast<double>(m)), e(m), a(n * n), b(n);
  for (int it = 1; it <= max_iter; ++it) {
    for (int p = 0; p < n * n; ++p) {
      double s = 0;
      for (std::size_t i = 0; i < m; ++i) s += w[i] * g[p * m + i];
      a[p] = s;
    }
    for (int j = 0; j < n; ++j) {
      double s = 0;
      for (std::size_t i = 0; i < m; ++i) s += w[i] * h[j * m + i];
      b[j] = s;
    }
    if (n > 0) res.lambda = cholesky_solve(a, b, n);
    double emax = 0, lower = 0, wsum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      double er = fr[i], ei = fi[i];
      for (int k = 0; k < n; ++k) {
        er -= res.lambda[k] * pr[k * m + i];
        ei -= res.lambda[k] * pi[k * m + i];
      }
      e[i] = std::sqrt(er * er + ei * ei);
      emax = std::max(emax, e[i]);
      lower += w[i] * e[i] * e[i];
    }
    res.iterations = it;
    res.discrete_norm = emax;
    res.lower = std::sqrt(lower);
    if (emax - res.lower <= tol * emax) break;
    for (std::size_t i = 0; i < m; ++i) {
      w[i] *= e[i];
      wsum += w[i];
    }
    for (auto& wi : w) {
      wi /= wsum;
      if (wi < 1e-250) wi = 0;  // keeps the sums out of denormal range
    }
  }
  return res;
}

/// z^N minus real combinations of z^e (and i z^e unless `real`), e in exponents.
inline LawsonResult lawson_monic(const std::vector<cd>& z, int degree,
                                 const std::vector<int>& exponents, bool real,
                                 int max_iter = 2000000, double tol = 1e-8) {
  std::vector<cd> f;
  std::vector<std::vector<cd>> phi(exponents.size() * (real ? 1 : 2));
  for (const cd& x : z) {
    f.push_back(std::pow(x, degree));
    for (std::size_t k = 0; k < exponents.size(); ++k) {
      const cd p = std::pow(x, exponents[k]);
      phi[k].push_back(p);
      if (!real) phi[k + exponents.size()].push_back(cd(0, 1) * p);
    }
  }
  return lawson(f, phi, max_iter, tol);
}

}  // namespace oracle
