#include "ccheb/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace ccheb {

MonicPolynomial::MonicPolynomial(std::vector<Complex> lower) : lower_(std::move(lower)) {}

MonicPolynomial MonicPolynomial::monomial(int degree) {
  if (degree < 0) throw InvalidArgument("polynomial degree must be nonnegative");
  return MonicPolynomial(std::vector<Complex>(static_cast<std::size_t>(degree)));
}

MonicPolynomial MonicPolynomial::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{Complex(1)};
  for (const auto& root : roots) {
    std::vector<Complex> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= root * c[k];
    }
    c = std::move(next);
  }
  c.pop_back();
  return MonicPolynomial(std::move(c));
}

Complex MonicPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return {};
  if (k == degree()) return Complex(1);
  return lower_[static_cast<std::size_t>(k)];
}

std::vector<Complex> MonicPolynomial::coefficients() const {
  std::vector<Complex> c = lower_;
  c.emplace_back(1);
  return c;
}

Complex MonicPolynomial::operator()(const Complex& z) const {
  Complex acc(1);
  for (std::size_t k = lower_.size(); k-- > 0;) {
    acc *= z;
    acc += lower_[k];
  }
  return acc;
}

Scalar MonicPolynomial::coefficient_l1() const {
  Scalar s(1);
  for (const auto& a : lower_) s += abs(a);
  return s;
}

Complex evaluate(std::span<const Complex> coeffs, const Complex& z) {
  Complex acc;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc *= z;
    acc += coeffs[k];
  }
  return acc;
}

std::vector<Complex> derivative(std::span<const Complex> coeffs) {
  std::vector<Complex> d;
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    d.push_back(coeffs[k] * Scalar(static_cast<long>(k)));
  return d;
}

}  // namespace ccheb
