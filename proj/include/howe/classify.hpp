#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "howe/groups.hpp"
#include "howe/qpoly.hpp"
#include "howe/semisimple.hpp"
#include "howe/symbols.hpp"

namespace howe {

// Unipotent part, one entry per factor of centralizer(s).shape:
// a partition per generic block (same order as s.blocks), then the symbols of
// the -1 and 1 eigenspace factors.  Rank-0 factors carry the rank-0 symbol.
//
//   group Sp(2N):     -1 factor SO±(2ell) -> D/2D symbol, 1 factor SO(2p+1) -> BC
//   group SO/O(2m+1): both factors symplectic -> BC symbols
//   group O±(2m):     both factors SO±       -> D/2D symbols
struct UnipotentDatum {
  std::vector<Partition> partitions;
  Symbol minus_one_symbol;
  Symbol one_symbol;

  friend bool operator==(const UnipotentDatum& a, const UnipotentDatum& b) {
    return a.partitions == b.partitions && a.minus_one_symbol == b.minus_one_symbol &&
           a.one_symbol == b.one_symbol;
  }
  friend bool operator<(const UnipotentDatum& a, const UnipotentDatum& b);
};

struct ClassificationData {
  GroupSpec group;  // Sp, SOodd, Oodd or Oeven
  SemisimpleClass semisimple;
  UnipotentDatum unipotent;
  std::optional<int> central_sign;  // Sp only
  // Oodd: one sign.  Oeven: a(s)+b(s) signs, the 1-eigenvalue sign first.
  std::vector<int> extension_signs;

  void validate() const;  // throws DomainError / TypeMismatch / RankMismatch

  friend bool operator==(const ClassificationData& a, const ClassificationData& b);
  friend bool operator<(const ClassificationData& a, const ClassificationData& b);
};

// Ambient group of the semisimple part: SO(2N+1) for Sp(2N), Sp(2m) for
// SO/O(2m+1), SO±(2m) for O±(2m).
GroupSpec semisimple_ambient(const GroupSpec& g);

// Groups labelled by the -1 and 1 symbols of a class in this ambient.
GroupSpec minus_one_factor(const SemisimpleClass& s);
GroupSpec one_factor(const SemisimpleClass& s);

// Number of Oeven extension signs, split as (a(s), b(s)).
std::pair<int, int> extension_sign_count(const ClassificationData& d);

QPolynomial irrep_dimension(const ClassificationData& d);

std::vector<ClassificationData> enumerate_irreps(
    const GroupSpec& g, int q0, const EnumerationBounds& bounds = EnumerationBounds::from_env());

int n_rank(const QPolynomial& dim, int n);

nlohmann::json to_json(const ClassificationData& d);
ClassificationData classification_from_json(const nlohmann::json& j);
std::string to_string(const ClassificationData& d);  // one line, for tables

}  // namespace howe
