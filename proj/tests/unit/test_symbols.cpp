#include <doctest.h>

#include <algorithm>

#include "howe/errors.hpp"
#include "howe/groups.hpp"
#include "howe/symbols.hpp"

#include "poly_literal.hpp"

using namespace howe;
using howe::testing::poly;

namespace {

GroupSpec ambient_of(SymbolType t, int rank) {
  switch (t) {
    case SymbolType::BC: return GroupSpec::sp(rank);
    case SymbolType::D: return GroupSpec::so_even(rank, 1);
    case SymbolType::TwoD: return GroupSpec::so_even(rank, -1);
  }
  return {};
}

std::vector<mpz_class> sorted_degrees(SymbolType t, int rank, long q0) {
  std::vector<mpz_class> out;
  for (const auto& s : enumerate_symbols(rank, t)) {
    const mpz_class d = eval_at(symbol_generic_degree(s, ambient_of(t, rank)), q0);
    out.push_back(d);
    if (s.degenerate()) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("unipotent character counts") {
  // degenerate symbols label two characters
  const int bc[] = {2, 6, 12, 25};
  const int d[] = {1, 4, 5, 14};
  const int d2[] = {1, 2, 5, 10};
  for (int r = 1; r <= 4; ++r) {
    CHECK(static_cast<int>(enumerate_symbols(r, SymbolType::BC).size()) == bc[r - 1]);
    CHECK(static_cast<int>(sorted_degrees(SymbolType::D, r, 3).size()) == d[r - 1]);
    CHECK(static_cast<int>(enumerate_symbols(r, SymbolType::TwoD).size()) == d2[r - 1]);
  }
}

TEST_CASE("enumerated symbols are canonical with the requested invariants") {
  for (auto t : {SymbolType::BC, SymbolType::D, SymbolType::TwoD}) {
    for (int r = 0; r <= 5; ++r) {
      const auto symbols = enumerate_symbols(r, t);
      CHECK(std::is_sorted(symbols.begin(), symbols.end()));
      CHECK(std::adjacent_find(symbols.begin(), symbols.end()) == symbols.end());
      for (const auto& s : symbols) {
        CHECK(canonicalize(s) == s);
        CHECK(canonicalize(Symbol(s.bottom, s.top)) == s);
        const auto inv = symbol_invariants(s);
        CHECK(inv.rank == r);
        CHECK(inv.type == t);
        CHECK(inv.degenerate == s.degenerate());
        CHECK(parse_symbol(to_string(s)) == s);
      }
    }
  }
}

TEST_CASE("small degrees") {
  const GroupSpec sp2 = GroupSpec::sp(1);
  CHECK(symbol_generic_degree(Symbol({1}, {}), sp2) == QPolynomial(1));
  CHECK(symbol_generic_degree(Symbol({0, 1}, {1}), sp2) == QPolynomial::q_power(1));
  CHECK_THROWS_AS(symbol_generic_degree(Symbol({2}, {0}), sp2), TypeMismatch);

  // Sp(4): 1, q(q+1)^2/2, q(q^2+1)/2 twice, q(q-1)^2/2, q^4
  const std::vector<mpz_class> sp4 = {1, 6, 15, 15, 24, 81};
  CHECK(sorted_degrees(SymbolType::BC, 2, 3) == sp4);
}

TEST_CASE("unipotent degrees divide the group order") {
  for (auto t : {SymbolType::BC, SymbolType::D, SymbolType::TwoD}) {
    for (int r = 1; r <= 4; ++r) {
      const QPolynomial full = order(ambient_of(t, r)).full();
      for (long q0 : {3L, 5L, 7L}) {
        const mpz_class g = eval_at(full, q0);
        mpz_class sum_sq = 0;
        for (const auto& d : sorted_degrees(t, r, q0)) {
          CHECK(d > 0);
          CHECK(g % d == 0);
          sum_sq += d * d;
        }
        CHECK(sum_sq < g);
      }
    }
  }
}

TEST_CASE("partition degrees of GL and U") {
  auto degrees = [](int n, bool twisted) {
    std::vector<QPolynomial> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(partition_generic_degree(p, twisted, 1));
    return out;
  };
  auto contains = [](const std::vector<QPolynomial>& v, const QPolynomial& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  const auto gl3 = degrees(3, false);
  const auto u3 = degrees(3, true);
  CHECK(gl3.size() == 3);
  CHECK(contains(gl3, QPolynomial(1)));
  CHECK(contains(gl3, poly({0, 1, 1})));
  CHECK(contains(gl3, QPolynomial::q_power(3)));
  CHECK(contains(u3, poly({0, -1, 1})));
  CHECK(contains(u3, QPolynomial::q_power(3)));
  // the field degree substitutes q -> q^d
  const Partition p({2, 1});
  CHECK(partition_generic_degree(p, false, 2) == partition_generic_degree(p, false, 1).substitute_power(2));
  CHECK(enumerate_partitions(5).size() == 7);
  CHECK(parse_partition(to_string(p)) == p);
}

TEST_CASE("construction and row surgery") {
  CHECK_THROWS_AS(Symbol({1, 1}, {}), InvalidSymbol);
  CHECK_THROWS_AS(Symbol({-1}, {}), InvalidSymbol);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  const Symbol s({0, 2}, {1});
  CHECK(concat_coordinate(s, Row::Top, 3) == Symbol({0, 2, 3}, {1}));
  CHECK(concat_coordinate(s, Row::Bottom, 2) == Symbol({0, 2}, {1, 2}));
  CHECK_THROWS_AS(concat_coordinate(s, Row::Top, 2), OrderViolation);
  CHECK(orient_bc(Symbol({1}, {0, 2})) == Symbol({0, 2}, {1}));
  CHECK(orient_bc(Symbol({0, 1, 2}, {})) == Symbol({}, {0, 1, 2}));
  CHECK_THROWS_AS(orient_bc(Symbol({1}, {1})), TypeMismatch);
  CHECK(parse_symbol_type(to_string(SymbolType::TwoD)) == SymbolType::TwoD);
}
