#pragma once

#include <string>
#include <vector>

#include "howe/qpoly.hpp"

namespace howe {

enum class GroupKind { Sp, SOodd, SOeven, Oodd, Oeven, GLU, Product };

// A finite classical group, a (twisted) general linear group over F_{q^d},
// or a product of these.
//
//   Sp      rank N: Sp(2N)
//   SOodd   rank m: SO(2m+1)
//   SOeven  rank m, sign ±: SO^±(2m)
//   Oodd    rank m, sign = disc(B): O(2m+1)
//   Oeven   rank m, sign = total sign of the form: O^±(2m)
//   GLU     rank n, sign = twist (+1 for GL, -1 for U), field_degree d
struct GroupSpec {
  GroupKind kind = GroupKind::Product;
  int rank = 0;
  int sign = 1;
  int field_degree = 1;
  std::vector<GroupSpec> factors;  // Product only

  static GroupSpec sp(int N);
  static GroupSpec so_odd(int m);
  static GroupSpec so_even(int m, int sign);
  static GroupSpec o_odd(int m, int disc);
  static GroupSpec o_even(int m, int sign);
  static GroupSpec glu(int n, int twist, int d);
  // Flattens nested products.
  static GroupSpec product(std::vector<GroupSpec> factors);

  // dimension of the natural module (2N, 2m+1, 2m, n)
  int natural_dimension() const;
  int witt_index() const;
  bool is_orthogonal() const {
    return kind == GroupKind::SOodd || kind == GroupKind::SOeven ||
           kind == GroupKind::Oodd || kind == GroupKind::Oeven;
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b);
  friend bool operator!=(const GroupSpec& a, const GroupSpec& b) { return !(a == b); }
  friend bool operator<(const GroupSpec& a, const GroupSpec& b);
};

struct GroupOrder {
  int q_exponent = 0;
  QPolynomial prime_to_q{1};

  QPolynomial full() const { return prime_to_q.shift(q_exponent); }
};

GroupOrder order(const GroupSpec& g);
// The prime-to-q part as its displayed factors, e.g. (q^2 - 1), (q^4 - 1);
// their product is order(g).prime_to_q.
std::vector<QPolynomial> prime_to_q_factors(const GroupSpec& g);
GroupSpec dual(const GroupSpec& g);

// |G / P_k| for the stabiliser P_k of a k-dimensional isotropic subspace.
QPolynomial isotropic_parabolic_quotient_order(const GroupSpec& g, int k);

// Names: Sp(6) SO(7) SO+(4) SO-(6) O(5,disc=-1) O+(4) O-(4) GL(2;d=1) U(2;d=1);
// products are joined with " x ".
std::string to_string(const GroupSpec& g);
GroupSpec parse_group(const std::string& text);

}  // namespace howe
