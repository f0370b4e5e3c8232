#include <doctest.h>

#include <set>

#include "howe/correspond.hpp"
#include "howe/errors.hpp"

#include "poly_literal.hpp"

using namespace howe;
using howe::testing::poly;

namespace {

const ClassificationData& find_irrep(const std::vector<ClassificationData>& irreps, int p, const Symbol& one,
                                     std::vector<int> ext) {
  for (const auto& d : irreps)
    if (d.semisimple.p == p && d.semisimple.blocks.empty() && d.unipotent.one_symbol == one &&
        d.extension_signs == ext)
      return d;
  FAIL("no such irrep");
  return irreps.front();
}

}  // namespace

TEST_CASE("trivial representations of O(3) at N = 3") {
  const auto pair = parse_pair("Sp(6):O(3,disc=+1)");
  CHECK(pair.range == StableRange::Symplectic);
  const auto irreps = enumerate_irreps(pair.W, 5);
  const auto& triv = find_irrep(irreps, 1, Symbol({1}, {}), {1});
  const auto& sgn = find_irrep(irreps, 1, Symbol({1}, {}), {-1});

  const auto a = phi(pair, triv, 5);
  CHECK(a.group == GroupSpec::sp(3));
  CHECK(a.unipotent.minus_one_symbol == canonicalize(Symbol({0}, {2})));
  CHECK(a.central_sign == 1);
  const QPolynomial q6m1 = QPolynomial::q_power(6) - 1;
  CHECK(irrep_dimension(a) ==
        exact_div(q6m1 * (QPolynomial::q_power(2) + 1), QPolynomial::q_power(2) - 1).divide_scalar(2));
  CHECK(irrep_dimension(phi(pair, sgn, 5)) == q6m1.divide_scalar(2));
}

TEST_CASE("psi on Sp(2) at m = 2") {
  const auto pair = parse_pair("Sp(2):O(5,disc=+1)");
  CHECK(pair.range == StableRange::Orthogonal);
  const auto irreps = enumerate_irreps(GroupSpec::sp(1), 5);
  CHECK(irrep_dimension(psi(pair, find_irrep(irreps, 1, Symbol({1}, {}), {}), 5)) == poly({1, 0, 1}));
  CHECK(irrep_dimension(psi(pair, find_irrep(irreps, 1, Symbol({0, 1}, {1}), {}), 5)) == poly({0, 1, 0, 1}));
  for (const auto& d : irreps) CHECK(psi(pair, d, 5).group == pair.W);
}

TEST_CASE("phi and psi are injective with images of the right group") {
  const std::vector<std::string> phi_pairs = {"Sp(2):O(1,disc=+1)", "Sp(6):O(3,disc=-1)",  "Sp(8):O+(4)",
                                              "Sp(8):O-(4)",         "Sp(10):O(5,disc=+1)", "Sp(4):O+(2)"};
  for (const auto& text : phi_pairs)
    for (int q : {3, 5}) {
      const auto pair = parse_pair(text);
      CAPTURE(text);
      std::set<ClassificationData> seen;
      const auto irreps = enumerate_irreps(pair.W, q);
      for (const auto& d : irreps) {
        const auto img = phi(pair, d, q);
        CHECK(img.group == pair.symplectic());
        CHECK_NOTHROW(img.validate());
        seen.insert(img);
      }
      CHECK(seen.size() == irreps.size());
    }
  const std::vector<std::string> psi_pairs = {"Sp(2):O(5,disc=-1)", "Sp(2):O+(4)", "Sp(2):O-(6)", "Sp(4):O+(8)"};
  for (const auto& text : psi_pairs) {
    const auto pair = parse_pair(text);
    CAPTURE(text);
    std::set<ClassificationData> seen;
    const auto irreps = enumerate_irreps(pair.symplectic(), 3);
    for (const auto& d : irreps) seen.insert(psi(pair, d, 3));
    CHECK(seen.size() == irreps.size());
  }
}

TEST_CASE("closed-form dimension of phi for odd W") {
  for (const auto& text : {"Sp(2):O(1,disc=+1)", "Sp(6):O(3,disc=+1)", "Sp(8):O(3,disc=-1)", "Sp(10):O(5,disc=+1)"}) {
    const auto pair = parse_pair(text);
    for (const auto& d : enumerate_irreps(pair.W, 5))
      CHECK(phi_dimension_closed_form(pair, d) == irrep_dimension(phi(pair, d, 5)));
  }
  const auto even = parse_pair("Sp(4):O+(2)");
  CHECK_THROWS_AS(phi_dimension_closed_form(even, enumerate_irreps(even.W, 3).front()), DomainError);
}

TEST_CASE("stable range gates") {
  // n = N and 2N = Witt index are the edges
  CHECK(parse_pair("Sp(6):O(3,disc=+1)").range == StableRange::Symplectic);
  CHECK(parse_pair("Sp(4):O(9,disc=+1)").range == StableRange::Orthogonal);
  CHECK(parse_pair("O(3,disc=+1):Sp(6)").N == 3);
  CHECK_THROWS_AS(parse_pair("Sp(4):O(5,disc=+1)"), RangeViolation);
  CHECK_THROWS_AS((DualPairSpec{2, GroupSpec::o_odd(1, 1), StableRange::Orthogonal}.validate()), RangeViolation);
  // O-(4) has Witt index 1
  CHECK_THROWS_AS(parse_pair("Sp(2):O-(4)"), RangeViolation);
  CHECK_THROWS_AS(parse_pair("Sp(4):O-(4)"), RangeViolation);
  CHECK_THROWS_AS(parse_pair("Sp(2)"), ParseError);
  CHECK_THROWS_AS(parse_pair("O(3,disc=+1):O(3,disc=+1)"), ParseError);

  const auto sym = parse_pair("Sp(6):O(3,disc=+1)");
  const auto sp_irrep = enumerate_irreps(GroupSpec::sp(3), 3).front();
  CHECK_THROWS_AS(psi(sym, sp_irrep, 3), RangeViolation);
  const auto orth = parse_pair("Sp(2):O(5,disc=+1)");
  CHECK_THROWS_AS(phi(orth, enumerate_irreps(orth.W, 3).front(), 3), RangeViolation);
  CHECK_THROWS_AS(phi(sym, enumerate_irreps(GroupSpec::o_odd(1, -1), 3).front(), 3), TypeMismatch);
  CHECK(to_string(sym) == "Sp(6):O(3,disc=+1)");
}
