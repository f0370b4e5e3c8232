#pragma once

#include <initializer_list>

#include "howe/qpoly.hpp"

namespace howe::testing {

// Coefficients from the constant term up.
inline QPolynomial poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPolynomial(std::move(v));
}

}  // namespace howe::testing
