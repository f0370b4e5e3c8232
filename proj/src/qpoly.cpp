#include "howe/qpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

#include "howe/errors.hpp"
#include "howe/kernels.hpp"

namespace howe {
namespace {

void trim(std::vector<mpz_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Schoolbook product of integer coefficient vectors.  Uses the int64 kernel
// when the inputs are small enough that no partial sum can overflow.
std::vector<mpz_class> multiply(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size() + b.size() - 1;

  auto max_bits = [](const std::vector<mpz_class>& v) {
    std::size_t bits = 0;
    for (const auto& x : v) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    return bits;
  };
  const std::size_t ba = max_bits(a), bb = max_bits(b);
  const std::size_t shorter = std::min(a.size(), b.size());
  std::size_t len_bits = 0;
  while ((std::size_t{1} << len_bits) < shorter) ++len_bits;
  if (ba <= 30 && bb <= 30 && ba + bb + len_bits <= 62) {
    std::vector<std::int64_t> ia(a.size()), ib(b.size()), ic(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) ia[i] = a[i].get_si();
    for (std::size_t i = 0; i < b.size(); ++i) ib[i] = b[i].get_si();
    kernels::convolve_i64(ia.data(), ia.size(), ib.data(), ib.size(), ic.data());
    std::vector<mpz_class> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<long>(ic[i]);
    return out;
  }

  std::vector<mpz_class> out(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

}  // namespace

QPolynomial::QPolynomial(long c) {
  if (c != 0) num_.emplace_back(c);
}

QPolynomial::QPolynomial(const mpz_class& c) {
  if (c != 0) num_.push_back(c);
}

QPolynomial::QPolynomial(std::vector<mpz_class> coeffs, mpz_class den)
    : num_(std::move(coeffs)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("QPolynomial: zero denominator");
  normalize();
}

QPolynomial QPolynomial::monomial(const mpz_class& coeff, int exponent) {
  if (exponent < 0) throw DomainError("QPolynomial: negative exponent");
  QPolynomial p;
  if (coeff == 0) return p;
  p.num_.assign(static_cast<std::size_t>(exponent) + 1, 0);
  p.num_.back() = coeff;
  return p;
}

void QPolynomial::normalize() {
  trim(num_);
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

int QPolynomial::degree() const {
  return num_.empty() ? kNegInfinity : static_cast<int>(num_.size()) - 1;
}

int QPolynomial::low_degree() const {
  for (std::size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) return static_cast<int>(i);
  return kNegInfinity;
}

mpq_class QPolynomial::coefficient(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(num_.size())) return 0;
  mpq_class r(num_[exponent], den_);
  r.canonicalize();
  return r;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    if (num_.size() < o.num_.size()) num_.resize(o.num_.size());
    for (std::size_t i = 0; i < o.num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    std::vector<mpz_class> r(std::max(num_.size(), o.num_.size()));
    for (std::size_t i = 0; i < num_.size(); ++i) r[i] = num_[i] * o.den_;
    for (std::size_t i = 0; i < o.num_.size(); ++i) r[i] += o.num_[i] * den_;
    num_ = std::move(r);
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) { return *this += -o; }

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  num_ = multiply(num_, o.num_);
  den_ *= o.den_;
  normalize();
  return *this;
}

QPolynomial QPolynomial::pow(unsigned e) const {
  QPolynomial result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

QPolynomial QPolynomial::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  QPolynomial r = *this;
  if (k > 0) {
    r.num_.insert(r.num_.begin(), static_cast<std::size_t>(k), mpz_class(0));
    return r;
  }
  const auto drop = static_cast<std::size_t>(-k);
  for (std::size_t i = 0; i < drop && i < r.num_.size(); ++i)
    if (r.num_[i] != 0) throw NonExactDivision("division by q^" + std::to_string(-k) + " leaves a remainder");
  if (drop >= r.num_.size()) return QPolynomial();
  r.num_.erase(r.num_.begin(), r.num_.begin() + static_cast<std::ptrdiff_t>(drop));
  return r;
}

QPolynomial QPolynomial::substitute_power(int d, int sign) const {
  if (d < 1) throw DomainError("substitute_power: exponent multiplier must be positive");
  if (is_zero()) return *this;
  std::vector<mpz_class> r(static_cast<std::size_t>(degree()) * d + 1);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    r[i * d] = (sign < 0 && (i & 1)) ? mpz_class(-num_[i]) : num_[i];
  }
  return QPolynomial(std::move(r), den_);
}

QPolynomial QPolynomial::divide_scalar(const mpz_class& d) const {
  if (d == 0) throw DomainError("division of a polynomial by zero");
  return QPolynomial(num_, den_ * d);
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    const mpz_class& c = num_[e];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (e > 1) os << "^" << e;
    }
  }
  if (den_ == 1) return os.str();
  return "(" + os.str() + ")/" + den_.get_str();
}

QPolynomial add(const QPolynomial& a, const QPolynomial& b) { return a + b; }
QPolynomial mul(const QPolynomial& a, const QPolynomial& b) { return a * b; }

QPolynomial exact_div(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw DomainError("exact_div: division by the zero polynomial");
  if (a.is_zero()) return QPolynomial();
  // a/b = (na * db) / (nb * da)
  std::vector<mpz_class> rem = a.numerator();
  for (auto& c : rem) c *= b.denominator();
  const auto& d = b.numerator();
  const int dd = b.degree();
  const int dr = a.degree();
  if (dr < dd) throw NonExactDivision("exact_div: divisor has larger degree than dividend");
  const mpz_class& lead = d.back();
  std::vector<mpq_class> qfrac;
  std::vector<mpz_class> quot(static_cast<std::size_t>(dr - dd) + 1);
  if (lead == 1 || lead == -1) {
    for (int i = dr - dd; i >= 0; --i) {
      mpz_class c = rem[i + dd];
      if (lead == -1) c = -c;
      quot[i] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j)
        mpz_submul(rem[i + j].get_mpz_t(), c.get_mpz_t(), d[j].get_mpz_t());
    }
    for (int i = 0; i < dd; ++i)
      if (rem[i] != 0)
        throw NonExactDivision("exact_div: nonzero remainder dividing " + a.to_string() + " by " + b.to_string());
    return QPolynomial(std::move(quot), a.denominator());
  }
  // General leading coefficient: divide over the rationals.
  std::vector<mpq_class> r(rem.begin(), rem.end());
  std::vector<mpq_class> q(static_cast<std::size_t>(dr - dd) + 1);
  for (int i = dr - dd; i >= 0; --i) {
    mpq_class c = r[i + dd] / mpq_class(lead);
    q[i] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) r[i + j] -= c * mpq_class(d[j]);
  }
  for (int i = 0; i < dd; ++i)
    if (r[i] != 0)
      throw NonExactDivision("exact_div: nonzero remainder dividing " + a.to_string() + " by " + b.to_string());
  mpz_class l = 1;
  for (auto& c : q) {
    c.canonicalize();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  for (std::size_t i = 0; i < q.size(); ++i) quot[i] = q[i].get_num() * (l / q[i].get_den());
  return QPolynomial(std::move(quot), l * a.denominator());
}

mpz_class eval_at(const QPolynomial& p, const mpz_class& q0) {
  mpz_class acc = 0;
  const auto& c = p.numerator();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q0 + *it;
  if (p.denominator() == 1) return acc;
  if (!mpz_divisible_p(acc.get_mpz_t(), p.denominator().get_mpz_t()))
    throw NonExactDivision("eval_at: " + p.to_string() + " is not integral at q=" + q0.get_str());
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), acc.get_mpz_t(), p.denominator().get_mpz_t());
  return r;
}

mpq_class eval_rational(const QPolynomial& p, const mpq_class& q0) {
  mpq_class acc = 0;
  const auto& c = p.numerator();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q0 + mpq_class(*it);
  acc /= mpq_class(p.denominator());
  acc.canonicalize();
  return acc;
}

int q_degree(const QPolynomial& p) { return p.degree(); }

QPolynomial q_binomial(int n, int k, int base) {
  if (base < 1) throw DomainError("q_binomial: base must be positive");
  if (n < 0 || k < 0 || k > n)
    throw DomainError("q_binomial: need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  k = std::min(k, n - k);
  // Row-by-row Pascal recurrence keeps everything integral.
  std::vector<QPolynomial> row(static_cast<std::size_t>(k) + 1);
  row[0] = QPolynomial(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = row[j - 1] + row[j].shift(j);  // [i,j] = [i-1,j-1] + q^j [i-1,j]
    }
  }
  return base == 1 ? row[k] : row[k].substitute_power(base);
}

QPolynomial binomial_factor(int a, int sign, int b) {
  return QPolynomial::q_power(a) + QPolynomial::monomial(sign, b);
}

QPolynomial structured_product(const ProductSpec& s) {
  QPolynomial r(1);
  for (int i = s.lo; i <= s.hi; ++i) {
    const int e = s.mult * i + s.shift;
    if (e < 0) throw DomainError("structured_product: negative exponent");
    r *= binomial_factor(e, s.sign, 0);
  }
  return r;
}

}  // namespace howe
