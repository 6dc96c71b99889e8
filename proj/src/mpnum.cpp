#include "ccheb/mpnum.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>

namespace ccheb {

namespace {

thread_local mpfr_prec_t t_bits = 0;
thread_local int t_digits = kDefaultDigits;

mpfr_prec_t current_bits() {
  if (t_bits == 0) t_bits = digits_to_bits(kDefaultDigits);
  return t_bits;
}

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  // log2(10) = 3.3219...; a few guard bits on top.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 8;
}

mpfr_prec_t working_bits() { return current_bits(); }
int working_digits() { return t_digits; }

NumericContext::NumericContext(int digits) : digits_(digits) {
  if (digits < kMinDigits) {
    throw InvalidArgument("precision must be at least " + std::to_string(kMinDigits) +
                          " digits, got " + std::to_string(digits));
  }
}

NumericContext::Scope::Scope(const NumericContext& ctx)
    : saved_bits_(current_bits()), saved_digits_(t_digits) {
  t_bits = ctx.bits();
  t_digits = ctx.digits();
}

NumericContext::Scope::~Scope() {
  t_bits = saved_bits_;
  t_digits = saved_digits_;
}

NumericContext set_precision(int digits) { return NumericContext(digits); }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() {
  mpfr_init2(value_, current_bits());
  mpfr_set_zero(value_, 1);
}

Scalar::Scalar(int v) {
  mpfr_init2(value_, current_bits());
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Scalar::Scalar(long v) {
  mpfr_init2(value_, current_bits());
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Scalar::Scalar(double v) {
  mpfr_init2(value_, current_bits());
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Scalar::Scalar(std::string_view decimal) {
  mpfr_init2(value_, current_bits());
  std::string s(decimal);
  if (mpfr_set_str(value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw InvalidArgument("not a decimal number: '" + s + "'");
  }
}

Scalar::Scalar(const Scalar& o) {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

Scalar::Scalar(Scalar&& o) noexcept {
  value_[0] = o.value_[0];
  o.value_[0]._mpfr_d = nullptr;
}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this == &o) return *this;
  if (value_[0]._mpfr_d == nullptr) {
    mpfr_init2(value_, mpfr_get_prec(o.value_));
  } else if (mpfr_get_prec(value_) != mpfr_get_prec(o.value_)) {
    mpfr_set_prec(value_, mpfr_get_prec(o.value_));
  }
  mpfr_set(value_, o.value_, MPFR_RNDN);
  return *this;
}

Scalar& Scalar::operator=(Scalar&& o) noexcept {
  std::swap(value_[0], o.value_[0]);
  return *this;
}

Scalar::~Scalar() {
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r;
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  mpfr_fma(value_, a.value_, b.value_, value_, MPFR_RNDN);
}

std::string Scalar::to_string(int significant) const {
  char* buf = nullptr;
  if (mpfr_zero_p(value_)) {
    mpfr_t zero;
    mpfr_init2(zero, 2);
    mpfr_set_zero(zero, 1);
    mpfr_asprintf(&buf, "%.*Re", std::max(significant - 1, 0), zero);
    mpfr_clear(zero);
  } else {
    mpfr_asprintf(&buf, "%.*Re", std::max(significant - 1, 0), value_);
  }
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Scalar Scalar::pi() {
  Scalar r;
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Scalar Scalar::epsilon() {
  Scalar r(1);
  mpfr_mul_2si(r.value_, r.value_, 1 - static_cast<long>(current_bits()), MPFR_RNDN);
  return r;
}

Scalar Scalar::pow10(long e) {
  Scalar r;
  mpfr_ui_pow_ui(r.value_, 10, static_cast<unsigned long>(std::labs(e)), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.value_, 1, r.value_, MPFR_RNDN);
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r;
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r;
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar r;
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
bool operator<(const Scalar& a, const Scalar& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator<=(const Scalar& a, const Scalar& b) {
  return mpfr_lessequal_p(a.get(), b.get()) != 0;
}
bool operator>(const Scalar& a, const Scalar& b) {
  return mpfr_greater_p(a.get(), b.get()) != 0;
}
bool operator>=(const Scalar& a, const Scalar& b) {
  return mpfr_greaterequal_p(a.get(), b.get()) != 0;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  return os << x.to_string(static_cast<int>(std::min<std::streamsize>(os.precision(), 60)));
}

#define CCHEB_UNARY(name, fn)              \
  Scalar name(const Scalar& x) {           \
    Scalar r;                              \
    fn(r.get(), x.get(), MPFR_RNDN);       \
    return r;                              \
  }

CCHEB_UNARY(abs, mpfr_abs)
CCHEB_UNARY(sqrt, mpfr_sqrt)
CCHEB_UNARY(exp, mpfr_exp)
CCHEB_UNARY(log, mpfr_log)
CCHEB_UNARY(sin, mpfr_sin)
CCHEB_UNARY(cos, mpfr_cos)
CCHEB_UNARY(gamma, mpfr_gamma)

#undef CCHEB_UNARY

Scalar floor(const Scalar& x) {
  Scalar r;
  mpfr_floor(r.get(), x.get());
  return r;
}

Scalar atan2(const Scalar& y, const Scalar& x) {
  Scalar r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Scalar hypot(const Scalar& x, const Scalar& y) {
  Scalar r;
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Scalar pow(const Scalar& x, const Scalar& y) {
  Scalar r;
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Scalar pow(const Scalar& x, long n) {
  Scalar r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

void sincos_2pi(const Scalar& t, Scalar& s, Scalar& c) {
  Scalar frac = t - floor(t);  // [0, 1)
  Scalar eighths = frac * Scalar(8);
  if (mpfr_integer_p(eighths.get())) {
    static constexpr int kSin[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    static constexpr int kCos[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    const long k = eighths.to_long() % 8;
    if (k % 2 == 0) {
      s = Scalar(kSin[k]);
      c = Scalar(kCos[k]);
    } else {
      Scalar h = sqrt(Scalar(2)) / Scalar(2);
      s = kSin[k] > 0 ? h : -h;
      c = kCos[k] > 0 ? h : -h;
    }
    return;
  }
  if (frac > Scalar(0.5)) frac -= Scalar(1);
  Scalar angle = Scalar(2) * Scalar::pi() * frac;
  Scalar ss, cc;
  mpfr_sin_cos(ss.get(), cc.get(), angle.get(), MPFR_RNDN);
  s = std::move(ss);
  c = std::move(cc);
}

// ---------------------------------------------------------------------------
// Complex

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Scalar r = re * o.re;
  mpfr_fms(r.get(), im.get(), o.im.get(), r.get(), MPFR_RNDN);  // im*o.im - re*o.re
  mpfr_neg(r.get(), r.get(), MPFR_RNDN);
  Scalar i = re * o.im;
  i.add_product(im, o.re);
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator*=(const Scalar& s) {
  re *= s;
  im *= s;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

void Complex::add_scaled(const Scalar& s, const Complex& z) {
  re.add_product(s, z.re);
  im.add_product(s, z.im);
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  Complex r = a;
  r *= b;
  return r;
}

Complex operator*(const Scalar& s, const Complex& z) { return {s * z.re, s * z.im}; }
Complex operator*(const Complex& z, const Scalar& s) { return {s * z.re, s * z.im}; }

Complex operator/(const Complex& a, const Complex& b) {
  Scalar d = norm(b);
  Scalar r = a.re * b.re;
  r.add_product(a.im, b.im);
  Scalar i = a.im * b.re;
  i -= a.re * b.im;
  return {r / d, i / d};
}

Complex operator/(const Complex& z, const Scalar& s) { return {z.re / s, z.im / s}; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Scalar norm(const Complex& z) {
  Scalar r = z.re * z.re;
  r.add_product(z.im, z.im);
  return r;
}

Scalar abs(const Complex& z) { return hypot(z.re, z.im); }
Scalar arg(const Complex& z) { return atan2(z.im, z.re); }

Complex polar(const Scalar& rho, const Scalar& theta) {
  Scalar s, c;
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return {rho * c, rho * s};
}

Complex exp(const Complex& z) { return polar(exp(z.re), z.im); }
Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
  if (z.re.is_zero() && z.im.is_zero()) return {};
  Scalar m = abs(z);
  Scalar two(2);
  Scalar a = sqrt((m + z.re) / two);
  Scalar b = sqrt((m - z.re) / two);
  if (z.im.sign() < 0) b = -b;
  return {a, b};
}

Complex pow(const Complex& z, const Scalar& a) {
  if (z.re.is_zero() && z.im.is_zero()) return {};
  return exp(Complex(a * log(abs(z)), a * arg(z)));
}

Complex pow(const Complex& z, long n) {
  Complex result(Scalar(1));
  Complex base = z;
  unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  if (n < 0) return Complex(Scalar(1)) / result;
  return result;
}

Scalar wrap_angle(const Scalar& a) {
  Scalar two_pi = Scalar(2) * Scalar::pi();
  Scalar r = a - two_pi * floor(a / two_pi);
  if (r >= two_pi) r -= two_pi;
  if (r.sign() < 0) r = Scalar(0);
  return r;
}

Scalar phase_0_2pi(const Complex& z) { return wrap_angle(arg(z)); }

// ---------------------------------------------------------------------------
// Matrix / LU

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) throw InvalidArgument("matrix needs at least one row");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Scalar> Matrix::multiply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw InvalidArgument("matrix-vector size mismatch");
  std::vector<Scalar> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i].add_product((*this)(i, j), x[j]);
  return y;
}

std::vector<Scalar> Matrix::multiply_transposed(std::span<const Scalar> x) const {
  if (x.size() != rows_) throw InvalidArgument("matrix-vector size mismatch");
  std::vector<Scalar> y(cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[j].add_product((*this)(i, j), x[i]);
  return y;
}

Scalar max_abs(std::span<const Scalar> v) {
  Scalar m(0);
  for (const auto& x : v) {
    if (mpfr_cmpabs(x.get(), m.get()) > 0) m = abs(x);
  }
  return m;
}

LuFactorization::LuFactorization(const Matrix& a) : n_(a.rows()), lu_(a), perm_(a.rows()) {
  if (a.rows() != a.cols()) throw InvalidArgument("LU factorization needs a square matrix");
  for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;

  Scalar scale(0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (mpfr_cmpabs(lu_(i, j).get(), scale.get()) > 0) scale = abs(lu_(i, j));
  const Scalar tiny = scale * Scalar::pow10(10 - working_digits());

  Scalar factor;
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n_; ++i)
      if (mpfr_cmpabs(lu_(i, k).get(), lu_(p, k).get()) > 0) p = i;
    if (abs(lu_(p, k)) <= tiny) {
      throw SingularMatrix("matrix is singular to working precision (column " +
                           std::to_string(k) + ")");
    }
    if (p != k) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(lu_(p, j), lu_(k, j));
      std::swap(perm_[p], perm_[k]);
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      lu_(i, k) /= lu_(k, k);
      factor = -lu_(i, k);
      for (std::size_t j = k + 1; j < n_; ++j) lu_(i, j).add_product(factor, lu_(k, j));
    }
  }
}

std::vector<Scalar> LuFactorization::solve(std::span<const Scalar> b) const {
  if (b.size() != n_) throw InvalidArgument("right-hand side length mismatch");
  std::vector<Scalar> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[i] = b[perm_[i]];
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i].add_product(-lu_(i, j), x[j]);
  for (std::size_t i = n_; i-- > 0;) {
    for (std::size_t j = i + 1; j < n_; ++j) x[i].add_product(-lu_(i, j), x[j]);
    x[i] /= lu_(i, i);
  }
  return x;
}

std::vector<Scalar> LuFactorization::solve_transposed(std::span<const Scalar> b) const {
  if (b.size() != n_) throw InvalidArgument("right-hand side length mismatch");
  // A = P^T L U, so A^T x = b becomes U^T y = b, L^T z = y, x = P^T z.
  std::vector<Scalar> z(b.begin(), b.end());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < i; ++j) z[i].add_product(-lu_(j, i), z[j]);
    z[i] /= lu_(i, i);
  }
  for (std::size_t i = n_; i-- > 0;)
    for (std::size_t j = i + 1; j < n_; ++j) z[i].add_product(-lu_(j, i), z[j]);
  std::vector<Scalar> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[perm_[i]] = std::move(z[i]);
  return x;
}

Scalar LuFactorization::pivot_ratio() const {
  Scalar hi = abs(lu_(0, 0));
  Scalar lo = hi;
  for (std::size_t i = 1; i < n_; ++i) {
    Scalar v = abs(lu_(i, i));
    if (v > hi) hi = v;
    if (v < lo) lo = v;
  }
  return hi / lo;
}

std::vector<Scalar> lu_solve(const Matrix& a, std::span<const Scalar> b) {
  return LuFactorization(a).solve(b);
}

std::vector<Scalar> lu_solve_transposed(const Matrix& a, std::span<const Scalar> b) {
  return LuFactorization(a).solve_transposed(b);
}

}  // namespace ccheb
