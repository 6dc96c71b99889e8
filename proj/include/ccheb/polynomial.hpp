#pragma once

#include <span>
#include <vector>

#include "ccheb/mpnum.hpp"

namespace ccheb {

/// Monic polynomial z^N + a_{N-1} z^{N-1} + ... + a_0. The leading
/// coefficient is implicit and never stored.
class MonicPolynomial {
 public:
  MonicPolynomial() = default;
  /// `lower` holds a_0 .. a_{N-1}; N = lower.size().
  explicit MonicPolynomial(std::vector<Complex> lower);

  static MonicPolynomial monomial(int degree);
  /// Expands prod (z - root).
  static MonicPolynomial from_roots(std::span<const Complex> roots);

  int degree() const { return static_cast<int>(lower_.size()); }

  /// a_k for 0 <= k <= N (a_N = 1); zero beyond N.
  Complex coefficient(int k) const;
  std::span<const Complex> lower_coefficients() const { return lower_; }
  /// a_0 .. a_N including the leading 1.
  std::vector<Complex> coefficients() const;

  Complex operator()(const Complex& z) const;

  /// sum_k |a_k| including the leading 1.
  Scalar coefficient_l1() const;

 private:
  std::vector<Complex> lower_;
};

/// Horner evaluation of sum c_k z^k (low to high).
Complex evaluate(std::span<const Complex> coeffs, const Complex& z);
std::vector<Complex> derivative(std::span<const Complex> coeffs);

}  // namespace ccheb
