#include "howe/identities.hpp"

#include "howe/errors.hpp"

namespace howe {
namespace {

int choose2(int n) { return n * (n - 1) / 2; }

QPolynomial signed_q_power(int sign_exp, int e) {
  return QPolynomial::monomial(sign_exp % 2 ? -1 : 1, e);
}

// prod_{j=lo}^{hi} (q^{2j} - 1)
QPolynomial even_block(int lo, int hi) { return structured_product({lo, hi, 2, 0, -1}); }
// prod_{j=lo}^{hi} (q^j + 1)
QPolynomial plus_block(int lo, int hi) { return structured_product({lo, hi, 1, 0, +1}); }

QPolynomial sp_q(int r) { return order(GroupSpec::sp(r)).prime_to_q; }
QPolynomial so_q(int r, int sign) { return order(GroupSpec::so_even(r, sign)).prime_to_q; }

void require_w(const GroupSpec& W) {
  if (W.kind != GroupKind::Oodd && W.kind != GroupKind::Oeven)
    throw DomainError("W must be O(2m+1) or O±(2m), got " + to_string(W));
}

GroupSpec with_rank(const GroupSpec& W, int r) {
  return W.kind == GroupKind::Oodd ? GroupSpec::o_odd(r, W.sign) : GroupSpec::o_even(r, W.sign);
}

QPolynomial sum(const std::vector<QPolynomial>& terms) {
  QPolynomial s;
  for (const auto& t : terms) s += t;
  return s;
}

bool check_one(const QPolynomial& lhs, const QPolynomial& rhs, bool perturb) {
  return lhs == (perturb ? rhs.shift(1) : rhs);
}

}  // namespace

QPolynomial c_coefficient(int i, int j) {
  return -(q_binomial(i, j) * plus_block(j + 1, i));
}

QPolynomial x_ell(int ell, int N, int m) {
  if (ell < 0 || ell > N || m < N) throw DomainError("x_ell: need 0 <= ell <= N <= m");
  return signed_q_power(ell, (N - ell) * (N - ell) + ell * (ell - 1)) * q_binomial(N, ell, 2) *
         even_block(m - N + ell + 1, m);
}

QPolynomial y_ell(int ell, int N, int m) {
  if (ell < 0 || ell > N || m < N) throw DomainError("y_ell: need 0 <= ell <= N <= m");
  return signed_q_power(ell, ell * ell + (N - ell) * (N - ell - 1)) * q_binomial(N, ell, 2) *
         even_block(m - N + ell + 1, m);
}

TopDimReport top_dim_symplectic(int N, const GroupSpec& W) {
  require_w(W);
  const int m = W.rank;
  if (N < m) throw RangeViolation("top_dim_symplectic: need N >= m, got N=" + std::to_string(N) + ", m=" + std::to_string(m));
  TopDimReport r;
  std::vector<QPolynomial> rec(m + 1);

  if (W.kind == GroupKind::Oodd) {
    for (int i = 0; i <= m; ++i)
      r.closed_form += signed_q_power(m - i, choose2(m - i) + (2 * i + 1) * N) * q_binomial(m, i) * plus_block(i + 1, m);
    for (int l = 0; l <= m; ++l)
      r.per_level_terms.push_back(signed_q_power(l, N + (m - l) * (m - l - 1) + l * l) * q_binomial(m, l, 2) *
                                  even_block(N - m + l + 1, N));
    for (int i = 0; i <= m; ++i) {
      rec[i] = QPolynomial::q_power((2 * i + 1) * N);
      for (int k = 1; k <= i; ++k)
        rec[i] -= isotropic_parabolic_quotient_order(GroupSpec::o_odd(i, 1), k) * rec[i - k];
    }
  } else if (W.sign > 0) {
    for (int i = 0; i <= m; ++i)
      r.closed_form += signed_q_power(m - i, choose2(m - i) + 2 * i * N) * q_binomial(m, i) * plus_block(i, m - 1);
    for (int l = 0; l <= m; ++l) {
      const QPolynomial num = signed_q_power(l, l * (l - 1) + (m - l) * (m - l - 1)) * q_binomial(m, l, 2) *
                              binomial_factor(m - l, 1, l) * even_block(N - m + l + 1, N);
      r.per_level_terms.push_back(exact_div(num, binomial_factor(m, 1, 0)));
    }
    for (int i = 0; i <= m; ++i) {
      rec[i] = QPolynomial::q_power(2 * i * N);
      for (int k = 1; k <= i; ++k)
        rec[i] -= isotropic_parabolic_quotient_order(GroupSpec::o_even(i, 1), k) * rec[i - k];
    }
  } else {
    for (int i = 1; i <= m; ++i)
      r.closed_form += signed_q_power(m - i, choose2(m - i) + 2 * i * N) * q_binomial(m - 1, m - i) * plus_block(i + 1, m);
    for (int l = 0; l <= m; ++l) {
      const QPolynomial num = signed_q_power(l, l * (l - 1) + (m - l) * (m - l - 1)) * q_binomial(m, l, 2) *
                              binomial_factor(m - l, -1, l) * even_block(N - m + l + 1, N);
      r.per_level_terms.push_back(exact_div(num, binomial_factor(m, -1, 0)));
    }
    for (int i = 1; i <= m; ++i) {
      rec[i] = QPolynomial::q_power(2 * i * N);
      for (int k = 1; k <= i - 1; ++k)
        rec[i] -= isotropic_parabolic_quotient_order(GroupSpec::o_even(i, -1), k) * rec[i - k];
    }
  }
  r.leveled_form = sum(r.per_level_terms);
  r.recursive_form = rec[m];
  return r;
}

TopDimReport top_dim_orthogonal(int N, const GroupSpec& W) {
  require_w(W);
  const int m = W.rank;
  const int n = W.natural_dimension();
  if (N < 0 || m < N) throw RangeViolation("top_dim_orthogonal: need m >= N, got N=" + std::to_string(N) + ", m=" + std::to_string(m));
  TopDimReport r;
  for (int i = 0; i <= N; ++i)
    r.closed_form += signed_q_power(N - i, choose2(N - i) + i * n) * q_binomial(N, i) * plus_block(i + 1, N);
  for (int l = 0; l <= N; ++l)
    r.per_level_terms.push_back(W.kind == GroupKind::Oodd ? x_ell(l, N, m) : y_ell(l, N, m));
  r.leveled_form = sum(r.per_level_terms);
  std::vector<QPolynomial> rec(N + 1);
  for (int j = 0; j <= N; ++j) {
    rec[j] = QPolynomial::q_power(j * n);
    for (int k = 1; k <= j; ++k) rec[j] -= isotropic_parabolic_quotient_order(GroupSpec::sp(j), k) * rec[j - k];
  }
  r.recursive_form = rec[N];
  return r;
}

bool check_q_multinomial(int m, bool perturb) {
  if (m < 0) throw DomainError("check_q_multinomial: m must be nonnegative");
  bool ok = true;

  // Chains i = l_0 < l_1 < ... < l_k = m weighted by prod C_{l_{t+1}, l_t}.
  for (int i = 0; i < m; ++i) {
    std::vector<QPolynomial> chain(m + 1);
    chain[i] = QPolynomial(1);
    for (int j = i + 1; j <= m; ++j)
      for (int t = i; t < j; ++t) chain[j] += chain[t] * c_coefficient(j, t);
    const QPolynomial rhs = signed_q_power(m - i - 1, choose2(m - i)) * c_coefficient(m, i);
    ok = ok && check_one(chain[m], rhs, perturb);
  }

  // Signed sum of q-multinomials over the compositions of n.
  std::vector<QPolynomial> g(m + 1);
  g[0] = QPolynomial(1);
  for (int n = 1; n <= m; ++n) {
    for (int k = 1; k <= n; ++k) g[n] -= q_binomial(n, k) * g[n - k];
    ok = ok && check_one(-g[n], signed_q_power(n - 1, choose2(n)), perturb);
  }

  for (int l = 0; l <= m; ++l) {
    QPolynomial lhs;
    for (int k = 0; k <= l; ++k)
      lhs += signed_q_power(l, k * k + (l - k) * (l - k - 1)) * q_binomial(m, m - k, 2) * q_binomial(m - k, m - l, 2);
    const QPolynomial rhs = signed_q_power(l, choose2(l)) * q_binomial(m, m - l, 2) * plus_block(1, l);
    ok = ok && check_one(lhs, rhs, perturb);
  }
  return ok;
}

bool check_step2_order_ratio(int N, int m) {
  if (N < m) throw DomainError("check_step2_order_ratio: need N >= m");
  for (int l = 0; l <= m; ++l) {
    const QPolynomial lhs = q_binomial(m, l, 2) * even_block(N - m + l + 1, N);
    const QPolynomial rhs = exact_div(sp_q(m) * sp_q(N), sp_q(m - l) * sp_q(l) * sp_q(N - m + l));
    if (lhs != rhs) return false;
  }
  return true;
}

bool check_even_order_ratio(int N, int m, int sign) {
  if (N < m) throw DomainError("check_even_order_ratio: need N >= m");
  for (int l = 1; l <= m - 1; ++l) {
    const QPolynomial lhs = exact_div(q_binomial(m, l, 2) * binomial_factor(m - l, sign, l) * even_block(N - m + l + 1, N),
                                      binomial_factor(m, sign, 0));
    const QPolynomial top = so_q(m, sign) * sp_q(N);
    const QPolynomial rest = sp_q(N - m + l);
    QPolynomial a;
    QPolynomial b;
    if (sign > 0) {
      a = exact_div(top, so_q(l, 1) * so_q(m - l, 1) * rest);
      b = exact_div(top, so_q(l, -1) * so_q(m - l, -1) * rest);
    } else {
      a = exact_div(top, so_q(m - l, -1) * so_q(l, 1) * rest);
      b = exact_div(top, so_q(m - l, 1) * so_q(l, -1) * rest);
    }
    if (lhs != (a - b).divide_scalar(2)) return false;
  }
  return true;
}

bool check_x_ell_factorization(int N, int m) {
  if (m < N) throw DomainError("check_x_ell_factorization: need m >= N");
  for (int l = 0; l <= N; ++l) {
    if (x_ell(l, l, m) != signed_q_power(l, l * (l - 1))) return false;
    const QPolynomial ratio = exact_div(sp_q(N) * sp_q(m), sp_q(N - l) * sp_q(l) * sp_q(m - N + l) * sp_q(N - l));
    const QPolynomial rhs = x_ell(l, l, m - N + l) * order(GroupSpec::sp(N - l)).full() * ratio;
    if (x_ell(l, N, m) != rhs) return false;
  }
  return true;
}

bool check_parity_average(int N, int m, int ell) {
  if (N - ell < 0 || m - N + ell < 0) throw DomainError("check_parity_average: exponents must be nonnegative");
  const QPolynomial plus = binomial_factor(N - ell, 1, 0) * binomial_factor(m - N + ell, 1, 0);
  const QPolynomial minus = binomial_factor(N - ell, -1, 0) * binomial_factor(m - N + ell, -1, 0);
  return (plus + minus).divide_scalar(2) == binomial_factor(m, 1, 0);
}

CorrespondenceReport verify_correspondence_identity(const DualPairSpec& pair, int q0, const EnumerationBounds& bounds) {
  pair.validate();
  const bool eta = pair.range == StableRange::Symplectic;
  const TopDimReport top = eta ? top_dim_symplectic(pair.N, pair.W) : top_dim_orthogonal(pair.N, pair.W);
  CorrespondenceReport rep;
  rep.lhs = eval_at(top.closed_form, q0);
  const GroupSpec source = eta ? pair.W : pair.symplectic();
  for (const auto& d : enumerate_irreps(source, q0, bounds)) {
    const ClassificationData img = eta ? phi(pair, d, q0) : psi(pair, d, q0);
    WitnessRow w;
    w.source = to_string(d);
    w.source_dim = eval_at(irrep_dimension(d), q0);
    w.image_dim = eval_at(irrep_dimension(img), q0);
    w.product = w.source_dim * w.image_dim;
    rep.rhs += w.product;
    rep.witness_table.push_back(std::move(w));
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

DecompositionReport verify_full_decomposition(const DualPairSpec& pair, int q0, const EnumerationBounds& bounds) {
  pair.validate();
  DecompositionReport rep;
  if (pair.range == StableRange::Symplectic) {
    for (int k = 0; k <= pair.W.witt_index(); ++k) {
      const DualPairSpec sub{pair.N, with_rank(pair.W, pair.m() - k), StableRange::Symplectic};
      const mpz_class h = eval_at(isotropic_parabolic_quotient_order(pair.W, k), q0);
      rep.total += h * verify_correspondence_identity(sub, q0, bounds).rhs;
    }
  } else {
    const GroupSpec sp = pair.symplectic();
    for (int k = 0; k <= pair.N; ++k) {
      const DualPairSpec sub{pair.N - k, pair.W, StableRange::Orthogonal};
      const mpz_class h = eval_at(isotropic_parabolic_quotient_order(sp, k), q0);
      rep.total += h * verify_correspondence_identity(sub, q0, bounds).rhs;
    }
  }
  mpz_ui_pow_ui(rep.expected.get_mpz_t(), static_cast<unsigned long>(q0),
                static_cast<unsigned long>(pair.N * pair.n()));
  rep.equal = rep.total == rep.expected;
  return rep;
}

}  // namespace howe
