#pragma once

#include <string>

#include "howe/classify.hpp"

namespace howe {

enum class StableRange { Symplectic, Orthogonal };

// The pair (Sp(2N), O(W)).  W is an Oodd (sign = disc) or Oeven (sign = total
// sign) spec of rank m.
struct DualPairSpec {
  int N = 0;
  GroupSpec W;
  StableRange range = StableRange::Symplectic;

  int n() const { return W.natural_dimension(); }
  int m() const { return W.rank; }
  bool odd() const { return W.kind == GroupKind::Oodd; }
  GroupSpec symplectic() const { return GroupSpec::sp(N); }

  // RangeViolation unless the declared range holds:
  //   symplectic-stable:  n <= N
  //   orthogonal-stable:  2N <= witt index of W
  void validate() const;

  // Picks whichever stable range holds; RangeViolation if neither does.
  static DualPairSpec make(int N, const GroupSpec& W);
};

// "Sp(6):O(3,disc=+1)"
DualPairSpec parse_pair(const std::string& text);
std::string to_string(const DualPairSpec& pair);

// q0 fixes the sign eps(s), which depends on the eigenvalue coordinates.
ClassificationData phi(const DualPairSpec& pair, const ClassificationData& d, int q0);
ClassificationData psi(const DualPairSpec& pair, const ClassificationData& d, int q0);

// Closed-form dimension of phi(d) for odd W, computed without building phi(d).
QPolynomial phi_dimension_closed_form(const DualPairSpec& pair, const ClassificationData& d);

}  // namespace howe
