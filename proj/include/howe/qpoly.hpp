#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>
#include <vector>

namespace howe {

inline constexpr int kNegInfinity = INT_MIN;

// Polynomial in the formal variable q with arbitrary-precision coefficients.
//
// Stored as an integer numerator (dense, coefficient i belongs to q^i) over a
// positive integer denominator.  The denominator is kept coprime to the
// content of the numerator, so it is 1 for every integer-coefficient
// polynomial.  Dimensions such as (q^N + 1)/2 need it.
class QPolynomial {
public:
  QPolynomial() = default;
  QPolynomial(long c);  // NOLINT(google-explicit-constructor)
  explicit QPolynomial(const mpz_class& c);
  explicit QPolynomial(std::vector<mpz_class> coeffs, mpz_class den = 1);

  static QPolynomial monomial(const mpz_class& coeff, int exponent);
  static QPolynomial q_power(int exponent) { return monomial(1, exponent); }

  bool is_zero() const { return num_.empty(); }
  bool is_integral() const { return den_ == 1; }
  int degree() const;  // kNegInfinity for zero
  int low_degree() const;  // lowest exponent with nonzero coeff; kNegInfinity for zero

  const std::vector<mpz_class>& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }
  mpq_class coefficient(int exponent) const;

  QPolynomial operator-() const;
  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

  QPolynomial pow(unsigned e) const;
  // Multiply by q^k (k may be negative; division by q^|k| must then be exact).
  QPolynomial shift(int k) const;
  // Substitute q -> sign * q^d.
  QPolynomial substitute_power(int d, int sign = 1) const;
  // Divide every coefficient by an integer; the result may gain a denominator.
  QPolynomial divide_scalar(const mpz_class& d) const;

  std::string to_string() const;

private:
  void normalize();

  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

QPolynomial add(const QPolynomial& a, const QPolynomial& b);
QPolynomial mul(const QPolynomial& a, const QPolynomial& b);
// Checked division; throws NonExactDivision on a nonzero remainder and
// DomainError when b is zero.
QPolynomial exact_div(const QPolynomial& a, const QPolynomial& b);
// Exact integer value at q0; throws NonExactDivision if not an integer.
mpz_class eval_at(const QPolynomial& p, const mpz_class& q0);
mpq_class eval_rational(const QPolynomial& p, const mpq_class& q0);
int q_degree(const QPolynomial& p);

// Gaussian binomial [n choose k] in q^base.  DomainError if k > n or base < 1.
QPolynomial q_binomial(int n, int k, int base = 1);

// prod_{i=lo}^{hi} (q^{mult*i + shift} + sign)
struct ProductSpec {
  int lo = 1;
  int hi = 0;
  int mult = 1;
  int shift = 0;
  int sign = -1;
};
QPolynomial structured_product(const ProductSpec& spec);

// q^a + sign * q^b
QPolynomial binomial_factor(int a, int sign, int b);

}  // namespace howe
