#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "howe/correspond.hpp"
#include "howe/qpoly.hpp"

namespace howe {

struct TopDimReport {
  QPolynomial closed_form;
  QPolynomial leveled_form;
  QPolynomial recursive_form;
  std::vector<QPolynomial> per_level_terms;  // summands of leveled_form, by level

  bool consistent() const { return closed_form == leveled_form && leveled_form == recursive_form; }
};

// Dimension of the top part of the oscillator representation of Sp(2N) x O(W).
// These are formal identities in q; they only need N >= m (symplectic side)
// or m >= N (orthogonal side) for every product to make sense.  The stable
// range itself is enforced by phi/psi and the harnesses.
TopDimReport top_dim_symplectic(int N, const GroupSpec& W);
TopDimReport top_dim_orthogonal(int N, const GroupSpec& W);

// C_{i,j} = -[i choose j]_q prod_{k=j+1}^{i} (q^k + 1)
QPolynomial c_coefficient(int i, int j);
// Level terms of the orthogonal-stable leveled forms (odd W, even W).
QPolynomial x_ell(int ell, int N, int m);
QPolynomial y_ell(int ell, int N, int m);

// Both q-multinomial families for every sub-index at this m.  With perturb the
// right-hand sides get an extra factor q, which must make the check fail.
bool check_q_multinomial(int m, bool perturb = false);

// Order-ratio identities behind the leveled terms.
bool check_step2_order_ratio(int N, int m);         // odd W, every level
bool check_even_order_ratio(int N, int m, int sign);  // even W, levels 1..m-1
bool check_x_ell_factorization(int N, int m);        // every level
bool check_parity_average(int N, int m, int ell);

struct WitnessRow {
  std::string source;
  mpz_class source_dim;
  mpz_class image_dim;
  mpz_class product;
};

struct CorrespondenceReport {
  mpz_class lhs;
  mpz_class rhs;
  bool equal = false;
  std::vector<WitnessRow> witness_table;
};

struct DecompositionReport {
  mpz_class total;
  mpz_class expected;
  bool equal = false;
};

CorrespondenceReport verify_correspondence_identity(const DualPairSpec& pair, int q0,
                                                    const EnumerationBounds& bounds = EnumerationBounds::from_env());
DecompositionReport verify_full_decomposition(const DualPairSpec& pair, int q0,
                                              const EnumerationBounds& bounds = EnumerationBounds::from_env());

}  // namespace howe
