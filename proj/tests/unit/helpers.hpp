#pragma once

#include <doctest.h>

#include <complex>
#include <string>

#include "ccheb/mpnum.hpp"

namespace testing {

using ccheb::Complex;
using ccheb::Scalar;

inline Scalar S(const char* decimal) { return Scalar(std::string_view(decimal)); }

/// 10^e at the working precision.
inline Scalar tol(long e) { return Scalar::pow10(e); }

/// 10^(k - P) for the current working precision P.
inline Scalar prec_tol(long k) { return Scalar::pow10(k - ccheb::working_digits()); }

inline std::complex<double> to_cd(const Complex& z) { return {z.re.to_double(), z.im.to_double()}; }

inline bool close(const Scalar& a, const Scalar& b, const Scalar& eps) { return abs(a - b) <= eps; }
inline bool close(const Complex& a, const Complex& b, const Scalar& eps) { return abs(a - b) <= eps; }

}  // namespace testing

#define CHECK_CLOSE(a, b, eps) \
  do { \
    const auto& ccheb_a_ = (a); \
    const auto& ccheb_b_ = (b); \
    INFO("lhs = " << testing::to_cd(ccheb::Complex(ccheb_a_)) << ", rhs = " << testing::to_cd(ccheb::Complex(ccheb_b_))); \
    CHECK(testing::close(ccheb::Complex(ccheb_a_), ccheb::Complex(ccheb_b_), (eps))); \
  } while (0)
