#pragma once

#include <string>
#include <vector>

#include "howe/groups.hpp"
#include "howe/qpoly.hpp"

namespace howe {

enum class SymbolType { BC, D, TwoD };

// Lusztig symbol: two strictly increasing rows of nonnegative integers, taken
// up to swapping the rows.  Construction does not canonicalize.
struct Symbol {
  std::vector<int> top;
  std::vector<int> bottom;

  Symbol() = default;
  Symbol(std::vector<int> t, std::vector<int> b);  // throws InvalidSymbol

  bool degenerate() const { return top == bottom; }
  bool empty() const { return top.empty() && bottom.empty(); }
  int entries() const { return static_cast<int>(top.size() + bottom.size()); }

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.top == b.top && a.bottom == b.bottom;
  }
  friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
  friend bool operator<(const Symbol& a, const Symbol& b) {
    if (a.top != b.top) return a.top < b.top;
    return a.bottom < b.bottom;
  }
};

struct SymbolInvariants {
  int rank = 0;
  int defect = 0;  // |a - b|
  SymbolType type = SymbolType::BC;
  bool degenerate = false;
};

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);  // throws DomainError
  int size() const;
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

SymbolInvariants symbol_invariants(const Symbol& s);
Symbol canonicalize(const Symbol& s);

// All canonical symbols of the given rank and type.  max_entry < 0 means no
// cap beyond what the rank equation allows.
std::vector<Symbol> enumerate_symbols(int rank, SymbolType type, int max_entry = -1);

// Dimension of the unipotent representation attached to s, for ambient Sp(2r)
// or SO(2r+1) (type BC), SO+(2r) (type D) or SO-(2r) (type 2D).  For a
// degenerate symbol this is the dimension of one of the two halves.
QPolynomial symbol_generic_degree(const Symbol& s, const GroupSpec& ambient);

// Unipotent degree of GL_n(q^d) (twisted = false) or U_n(q^d) (twisted = true).
QPolynomial partition_generic_degree(const Partition& p, bool twisted, int field_degree);

enum class Row { Top, Bottom };
// Append value to a row; OrderViolation unless it exceeds the row's last entry.
Symbol concat_coordinate(const Symbol& s, Row row, int value);

// Swap rows so that (length(top) - length(bottom)) ≡ 1 mod 4.  BC only.
Symbol orient_bc(const Symbol& s);

std::vector<Partition> enumerate_partitions(int n);

std::string to_string(SymbolType t);
SymbolType parse_symbol_type(const std::string& text);
// "(0<1 | 1)", "(1 | ∅)"
std::string to_string(const Symbol& s);
Symbol parse_symbol(const std::string& text);
std::string to_string(const Partition& p);  // "[2,1]"
Partition parse_partition(const std::string& text);

}  // namespace howe
