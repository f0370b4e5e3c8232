#include <doctest.h>

#include "howe/errors.hpp"
#include "howe/identities.hpp"

#include "poly_literal.hpp"

using namespace howe;
using howe::testing::poly;

namespace {

QPolynomial q(int e) { return QPolynomial::q_power(e); }

mpz_class lhs_of(const std::string& pair, int q0) {
  return verify_correspondence_identity(parse_pair(pair), q0).lhs;
}

}  // namespace

TEST_CASE("top-dimension closed forms in small cases") {
  for (int N = 0; N <= 5; ++N) {
    const auto o1 = top_dim_symplectic(N, GroupSpec::o_odd(0, 1));
    CHECK(o1.closed_form == q(N));
    CHECK(o1.consistent());
    if (N >= 1) {
      const auto o3 = top_dim_symplectic(N, GroupSpec::o_odd(1, 1));
      CHECK(o3.closed_form == q(3 * N) - (q(1) + 1) * q(N));
      CHECK(o3.consistent());
      const auto o2 = top_dim_symplectic(N, GroupSpec::o_even(1, 1));
      CHECK(o2.closed_form == q(2 * N) - 2);
      CHECK(o2.consistent());
    }
  }
  const auto z = top_dim_orthogonal(1, GroupSpec::o_odd(2, 1));
  CHECK(z.closed_form == q(5) - q(1) - 1);
  CHECK(z.consistent());
  CHECK(z.per_level_terms.size() == 2);
  CHECK_THROWS_AS(top_dim_symplectic(1, GroupSpec::o_odd(2, 1)), RangeViolation);
  CHECK_THROWS_AS(top_dim_orthogonal(3, GroupSpec::o_odd(2, 1)), RangeViolation);
  CHECK_THROWS(top_dim_symplectic(3, GroupSpec::sp(1)));
}

TEST_CASE("all three forms agree across a grid") {
  for (int N = 0; N <= 6; ++N)
    for (int m = 0; m <= N; ++m) {
      CAPTURE(N);
      CAPTURE(m);
      CHECK(top_dim_symplectic(N, GroupSpec::o_odd(m, 1)).consistent());
      if (m >= 1) {
        CHECK(top_dim_symplectic(N, GroupSpec::o_even(m, 1)).consistent());
        CHECK(top_dim_symplectic(N, GroupSpec::o_even(m, -1)).consistent());
      }
      CHECK(top_dim_orthogonal(m, GroupSpec::o_odd(N, -1)).consistent());
      if (N >= 1) CHECK(top_dim_orthogonal(m, GroupSpec::o_even(N, 1)).consistent());
    }
}

TEST_CASE("coefficients C and level terms") {
  CHECK(c_coefficient(1, 0) == -(q(1) + 1));
  CHECK(c_coefficient(2, 0) == -((q(1) + 1) * (q(2) + 1)));
  CHECK(c_coefficient(2, 1) == -((q(1) + 1) * (q(2) + 1)));
  CHECK(c_coefficient(3, 1) == -(poly({1, 1, 1}) * (q(2) + 1) * (q(3) + 1)));
  for (int i = 0; i <= 5; ++i) CHECK(c_coefficient(i, i) == QPolynomial(-1));
  CHECK(x_ell(0, 0, 3) == QPolynomial(1));
  CHECK(y_ell(0, 0, 3) == QPolynomial(1));
  CHECK(x_ell(1, 1, 1) == QPolynomial(-1));
  CHECK(x_ell(2, 2, 2) == q(2));
  CHECK(x_ell(1, 1, 2) == QPolynomial(-1));
  CHECK(x_ell(1, 2, 2) == -(q(1) * (q(2) + 1) * (q(4) - 1)));
  CHECK(y_ell(0, 2, 3) == q(2) * (q(4) - 1) * (q(6) - 1));
  CHECK(y_ell(1, 2, 2) == -(q(1) * (q(2) + 1) * (q(4) - 1)));
  CHECK_THROWS_AS(x_ell(2, 1, 3), DomainError);
  CHECK_THROWS_AS(y_ell(1, 3, 2), DomainError);
}

TEST_CASE("q-multinomial families hold and a perturbation breaks them") {
  for (int m = 0; m <= 7; ++m) CHECK(check_q_multinomial(m));
  for (int m = 1; m <= 7; ++m) CHECK_FALSE(check_q_multinomial(m, true));
  CHECK_THROWS_AS(check_q_multinomial(-1), DomainError);
}

TEST_CASE("order-ratio identities") {
  for (int N = 1; N <= 6; ++N)
    for (int m = 0; m <= N; ++m) {
      CAPTURE(N);
      CAPTURE(m);
      CHECK(check_step2_order_ratio(N, m));
      if (m >= 1) {
        CHECK(check_even_order_ratio(N, m, 1));
        CHECK(check_even_order_ratio(N, m, -1));
      }
      CHECK(check_x_ell_factorization(m, N));
      for (int ell = 0; ell <= m; ++ell) CHECK(check_parity_average(m, N, ell));
    }
  CHECK_THROWS_AS(check_step2_order_ratio(1, 2), DomainError);
  CHECK_THROWS_AS(check_parity_average(1, 0, 3), DomainError);
}

TEST_CASE("correspondence identity values at q = 3") {
  CHECK(lhs_of("Sp(6):O(3,disc=+1)", 3) == 19575);
  CHECK(lhs_of("Sp(10):O(5,disc=+1)", 3) == mpz_class("846714682323"));
  CHECK(lhs_of("Sp(4):O+(2)", 3) == 79);
  CHECK(lhs_of("Sp(4):O-(2)", 3) == 81);
  CHECK(lhs_of("Sp(8):O+(4)", 3) == 42941769);
  CHECK(lhs_of("Sp(8):O-(4)", 3) == 42981111);
  CHECK(lhs_of("Sp(2):O(5,disc=+1)", 3) == 239);
  CHECK(lhs_of("Sp(2):O+(4)", 3) == 77);
  CHECK(lhs_of("Sp(2):O(7,disc=-1)", 3) == 2183);
  CHECK(lhs_of("Sp(2):O+(6)", 3) == 725);
  CHECK(lhs_of("Sp(2):O-(6)", 3) == 725);
  for (const auto& pair : {"Sp(6):O(3,disc=+1)", "Sp(4):O-(2)", "Sp(2):O(5,disc=-1)", "Sp(2):O+(4)", "Sp(8):O+(4)"})
    for (int q0 : {3, 5}) {
      CAPTURE(pair);
      CAPTURE(q0);
      const auto rep = verify_correspondence_identity(parse_pair(pair), q0);
      CHECK(rep.equal);
      CHECK(rep.lhs == rep.rhs);
      mpz_class sum = 0;
      for (const auto& row : rep.witness_table) {
        CHECK(row.product == row.source_dim * row.image_dim);
        sum += row.product;
      }
      CHECK(sum == rep.rhs);
    }
}

TEST_CASE("full decomposition of the oscillator") {
  for (const auto& pair : {"Sp(2):O(1,disc=+1)", "Sp(6):O(3,disc=+1)", "Sp(4):O+(2)", "Sp(2):O(5,disc=+1)",
                           "Sp(2):O-(6)"}) {
    CAPTURE(pair);
    const auto p = parse_pair(pair);
    const auto rep = verify_full_decomposition(p, 3);
    CHECK(rep.equal);
    mpz_class expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), 3, static_cast<unsigned long>(p.N * p.n()));
    CHECK(rep.expected == expect);
    CHECK(rep.total == expect);
  }
}
