#pragma once

// Extended-precision real/complex arithmetic on top of MPFR, plus the small
// dense LU solver used by the exchange algorithm.
//
// Precision is carried per thread. A NumericContext fixes the number of
// decimal digits; NumericContext::Scope installs it for the current thread
// and restores the previous setting on destruction. Every Scalar constructed
// while a scope is active is allocated at that precision.

#include <mpfr.h>

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccheb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

inline constexpr int kDefaultDigits = 60;
inline constexpr int kMinDigits = 15;

mpfr_prec_t digits_to_bits(int digits);

/// Current thread's working precision in bits.
mpfr_prec_t working_bits();
/// Current thread's working precision in decimal digits.
int working_digits();

class NumericContext {
 public:
  explicit NumericContext(int digits = kDefaultDigits);

  int digits() const { return digits_; }
  mpfr_prec_t bits() const { return digits_to_bits(digits_); }

  class Scope {
   public:
    explicit Scope(const NumericContext& ctx);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    mpfr_prec_t saved_bits_;
    int saved_digits_;
  };

 private:
  int digits_;
};

/// Validates `digits` and returns a context; digits below 15 are rejected.
NumericContext set_precision(int digits);

class Scalar {
 public:
  Scalar();
  Scalar(int v);     // NOLINT(google-explicit-constructor)
  Scalar(long v);    // NOLINT(google-explicit-constructor)
  Scalar(double v);  // NOLINT(google-explicit-constructor)
  explicit Scalar(std::string_view decimal);

  Scalar(const Scalar& o);
  Scalar(Scalar&& o) noexcept;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&& o) noexcept;
  ~Scalar();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  /// this += a * b with a single rounding.
  void add_product(const Scalar& a, const Scalar& b);

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }

  /// Scientific notation with `significant` digits, e.g. "1.25000e+00".
  std::string to_string(int significant = 30) const;

  static Scalar pi();
  static Scalar epsilon();  ///< 2^(1-bits) at the working precision.
  static Scalar pow10(long e);

 private:
  mpfr_t value_;
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);

bool operator==(const Scalar& a, const Scalar& b);
bool operator!=(const Scalar& a, const Scalar& b);
bool operator<(const Scalar& a, const Scalar& b);
bool operator<=(const Scalar& a, const Scalar& b);
bool operator>(const Scalar& a, const Scalar& b);
bool operator>=(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

Scalar abs(const Scalar& x);
Scalar sqrt(const Scalar& x);
Scalar exp(const Scalar& x);
Scalar log(const Scalar& x);
Scalar sin(const Scalar& x);
Scalar cos(const Scalar& x);
Scalar atan2(const Scalar& y, const Scalar& x);
Scalar pow(const Scalar& x, const Scalar& y);
Scalar pow(const Scalar& x, long n);
Scalar gamma(const Scalar& x);
Scalar floor(const Scalar& x);
Scalar hypot(const Scalar& x, const Scalar& y);
const Scalar& max(const Scalar& a, const Scalar& b);
const Scalar& min(const Scalar& a, const Scalar& b);

/// sin and cos of 2*pi*t, exact at multiples of 1/8.
void sincos_2pi(const Scalar& t, Scalar& s, Scalar& c);

struct Complex {
  Scalar re;
  Scalar im;

  Complex() = default;
  Complex(Scalar r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Complex(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r) {}     // NOLINT(google-explicit-constructor)
  Complex(double r) : re(r) {}  // NOLINT(google-explicit-constructor)

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Scalar& s);
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return {-re, -im}; }

  /// this += s * z
  void add_scaled(const Scalar& s, const Complex& z);

  static Complex i() { return {Scalar(0), Scalar(1)}; }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Scalar& s, const Complex& z);
Complex operator*(const Complex& z, const Scalar& s);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& z, const Scalar& s);

Complex conj(const Complex& z);
Scalar norm(const Complex& z);  ///< |z|^2
Scalar abs(const Complex& z);
Scalar arg(const Complex& z);   ///< in (-pi, pi]
Complex polar(const Scalar& rho, const Scalar& theta);
Complex exp(const Complex& z);
Complex log(const Complex& z);  ///< principal branch
Complex sqrt(const Complex& z);
/// Principal power exp(a * Log z); 0^a = 0 for a > 0.
Complex pow(const Complex& z, const Scalar& a);
Complex pow(const Complex& z, long n);

/// Phase of z in [0, 2*pi).
Scalar phase_0_2pi(const Complex& z);
/// Reduces an angle into [0, 2*pi).
Scalar wrap_angle(const Scalar& a);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::vector<Scalar> multiply(std::span<const Scalar> x) const;
  std::vector<Scalar> multiply_transposed(std::span<const Scalar> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// LU factorization with partial (row) pivoting, reusable for A and A^T solves.
class LuFactorization {
 public:
  /// Throws SingularMatrix when a pivot falls below 10^(10-P) times the
  /// largest entry of A.
  explicit LuFactorization(const Matrix& a);

  std::size_t size() const { return n_; }

  std::vector<Scalar> solve(std::span<const Scalar> b) const;
  std::vector<Scalar> solve_transposed(std::span<const Scalar> b) const;

  /// max |U_ii| / min |U_ii|, a cheap conditioning indicator.
  Scalar pivot_ratio() const;

 private:
  std::size_t n_;
  Matrix lu_;
  std::vector<std::size_t> perm_;
};

std::vector<Scalar> lu_solve(const Matrix& a, std::span<const Scalar> b);
std::vector<Scalar> lu_solve_transposed(const Matrix& a, std::span<const Scalar> b);

Scalar max_abs(std::span<const Scalar> v);

}  // namespace ccheb
