#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "howe/groups.hpp"

namespace howe {

// Eigenvalue orbit g^exponent in the cyclic group mu_{q^r - torus_sign},
// identified under exponent -> -exponent and exponent -> q*exponent.
// r is minimal, so the orbit is a genuine degree-r (resp. 2r) block.
struct Eigenvalue {
  int r = 1;
  int torus_sign = 1;
  std::int64_t exponent = 1;

  friend bool operator==(const Eigenvalue& a, const Eigenvalue& b) {
    return a.r == b.r && a.torus_sign == b.torus_sign && a.exponent == b.exponent;
  }
  friend bool operator<(const Eigenvalue& a, const Eigenvalue& b);
};

struct Block {
  Eigenvalue ev;
  int mult = 1;
  friend bool operator==(const Block& a, const Block& b) { return a.ev == b.ev && a.mult == b.mult; }
  friend bool operator<(const Block& a, const Block& b);
};

// Semisimple class in one of the ambient groups Sp(2m), SO(2N+1), SO±(2m).
//
// minus_one_sign: type of the -1 eigenspace; set (±1) when ell > 0 and the
//   ambient is orthogonal, 0 otherwise.
// one_sign: type of the 1 eigenspace; set (±1) only for SO±(2m) with p > 0.
// For SO±(2m) the classes are taken up to O(2m)-conjugacy.
struct SemisimpleClass {
  GroupSpec ambient;
  int p = 0;
  int ell = 0;
  int minus_one_sign = 0;
  int one_sign = 0;
  std::vector<Block> blocks;  // sorted, distinct eigenvalues

  int generic_rank() const;
  // product of the torus signs of the generic blocks, with multiplicity
  int generic_sign() const;
  void validate() const;  // throws RankMismatch / DomainError

  friend bool operator==(const SemisimpleClass& a, const SemisimpleClass& b);
  friend bool operator<(const SemisimpleClass& a, const SemisimpleClass& b);
};

struct Centralizer {
  GroupSpec shape;  // identity component, trivial factors dropped
  int component_order = 1;
};

Centralizer centralizer(const SemisimpleClass& s);
int epsilon_sign(const SemisimpleClass& s, int q0);

struct EnumerationBounds {
  int max_rank = 3;
  int max_q = 13;
  static EnumerationBounds from_env();  // honours HOWE_MAX_RANK
};

bool is_odd_prime_power(int q0);
void check_bounds(int rank, int q0, const EnumerationBounds& bounds);

// Canonical representatives of the generic eigenvalue orbits of degree r.
std::vector<Eigenvalue> eigenvalue_orbits(int r, int torus_sign, int q0);

std::vector<SemisimpleClass> enumerate_semisimple_classes(
    const GroupSpec& ambient, int q0, const EnumerationBounds& bounds = EnumerationBounds::from_env());

struct Surgery {
  enum class Kind {
    MinusOnes,     // Sp(2m) -> SO(2(m+c)+1) with placement sign, or SO(2N+1) -> Sp(2(N+c)) (sign 0)
    IdentityOdd,   // SO±(2m) -> SO(2(m+c)+1)
    IdentityEven,  // SO(2N+1) -> SO^sign(2(N+c)), or SO±(2m) -> SO±(2(m+c))
  };
  Kind kind;
  int count = 0;
  int sign = 0;
};

SemisimpleClass add_blocks(const SemisimpleClass& s, const Surgery& surgery);

std::string to_string(const SemisimpleClass& s);

}  // namespace howe
