#include "howe/symbols.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "howe/errors.hpp"

namespace howe {
namespace {

int row_sum(const std::vector<int>& r) { return std::accumulate(r.begin(), r.end(), 0); }

// c[a,b] = sum_{i=1}^{floor(n/2)} C(n-2i, 2), n = a + b
int c_exponent(int n) {
  int c = 0;
  for (int i = 1; i <= n / 2; ++i) {
    const int k = n - 2 * i;
    c += k * (k - 1) / 2;
  }
  return c;
}

int mod4(int x) { return ((x % 4) + 4) % 4; }

SymbolType type_of_defect(int d) {
  if (d % 2 != 0) return SymbolType::BC;
  return mod4(d) == 0 ? SymbolType::D : SymbolType::TwoD;
}

// Strictly increasing sequences of given length, entries in [lo, cap], with
// the given sum.
void sequences(int len, int lo, int sum, int cap, std::vector<int>& cur,
               const std::function<void(const std::vector<int>&)>& emit) {
  if (len == 0) {
    if (sum == 0) emit(cur);
    return;
  }
  // minimal sum of len entries starting at x: len*x + len(len-1)/2
  for (int x = lo; x <= cap; ++x) {
    const int min_rest = len * x + len * (len - 1) / 2;
    if (min_rest > sum) break;
    cur.push_back(x);
    sequences(len - 1, x + 1, sum - x, cap, cur, emit);
    cur.pop_back();
  }
}

std::vector<int> parse_row(const std::string& text) {
  std::vector<int> out;
  std::string cleaned;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (ch == '<' || ch == ',') {
      cleaned += ' ';
    } else if (ch == 0xE2 && i + 2 < text.size() &&
               static_cast<unsigned char>(text[i + 1]) == 0x88 &&
               static_cast<unsigned char>(text[i + 2]) == 0x85) {
      i += 2;  // U+2205 empty set
    } else if (std::isdigit(ch) || std::isspace(ch)) {
      cleaned += static_cast<char>(ch);
    } else {
      throw ParseError("unexpected character in symbol row: " + text);
    }
  }
  std::istringstream is(cleaned);
  int v;
  while (is >> v) out.push_back(v);
  return out;
}

}  // namespace

Symbol::Symbol(std::vector<int> t, std::vector<int> b) : top(std::move(t)), bottom(std::move(b)) {
  for (const auto* row : {&top, &bottom}) {
    for (std::size_t i = 0; i < row->size(); ++i) {
      if ((*row)[i] < 0) throw InvalidSymbol("symbol entries must be nonnegative");
      if (i && (*row)[i] <= (*row)[i - 1]) throw InvalidSymbol("symbol rows must be strictly increasing");
    }
  }
  if (!top.empty() && !bottom.empty() && top[0] == 0 && bottom[0] == 0)
    throw InvalidSymbol("both rows of a symbol may not start with 0");
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw DomainError("partition parts must be positive");
    if (i && parts[i] > parts[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return row_sum(parts); }

Symbol canonicalize(const Symbol& s) {
  if (s.top.size() > s.bottom.size()) return s;
  if (s.bottom.size() > s.top.size()) return Symbol(s.bottom, s.top);
  const bool keep = std::lexicographical_compare(s.bottom.rbegin(), s.bottom.rend(),
                                                 s.top.rbegin(), s.top.rend()) ||
                    s.top == s.bottom;
  return keep ? s : Symbol(s.bottom, s.top);
}

SymbolInvariants symbol_invariants(const Symbol& s0) {
  const Symbol s = canonicalize(s0);
  const int a = static_cast<int>(s.top.size());
  const int b = static_cast<int>(s.bottom.size());
  const int n = a + b;
  const int total = row_sum(s.top) + row_sum(s.bottom);
  SymbolInvariants inv;
  inv.defect = a - b;
  inv.type = type_of_defect(inv.defect);
  inv.rank = inv.type == SymbolType::BC ? total - (n - 1) * (n - 1) / 4 : total - n * (n - 2) / 4;
  inv.degenerate = s.degenerate();
  if (inv.rank < 0)
    throw InvalidSymbol("symbol " + to_string(s0) + " has no nonnegative rank");
  return inv;
}

std::vector<Symbol> enumerate_symbols(int rank, SymbolType type, int max_entry) {
  if (rank < 0) throw DomainError("enumerate_symbols: negative rank");
  std::vector<Symbol> out;
  for (int d = (type == SymbolType::BC ? 1 : (type == SymbolType::D ? 0 : 2));; d += (type == SymbolType::BC ? 2 : 4)) {
    bool any_b = false;
    for (int b = 0;; ++b) {
      const int a = b + d;
      const int n = a + b;
      const int S = type == SymbolType::BC ? rank + (n - 1) * (n - 1) / 4 : rank + n * (n - 2) / 4;
      const int min_sum = a * (a - 1) / 2 + b * (b - 1) / 2 + (b > 0 ? b : 0);
      if (min_sum > S) break;
      any_b = true;
      const int cap = max_entry >= 0 ? max_entry : S;
      std::vector<int> top_cur, bot_cur;
      for (int t = 0; t <= S; ++t) {
        sequences(a, 0, t, cap, top_cur, [&](const std::vector<int>& top) {
          sequences(b, 0, S - t, cap, bot_cur, [&](const std::vector<int>& bot) {
            if (!top.empty() && !bot.empty() && top[0] == 0 && bot[0] == 0) return;
            Symbol sym;
            sym.top = top;
            sym.bottom = bot;
            if (a == b && canonicalize(sym) != sym) return;
            out.push_back(std::move(sym));
          });
        });
      }
    }
    if (!any_b) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QPolynomial symbol_generic_degree(const Symbol& s0, const GroupSpec& ambient) {
  const Symbol s = canonicalize(s0);
  const SymbolInvariants inv = symbol_invariants(s);
  const bool bc_ambient = ambient.kind == GroupKind::Sp || ambient.kind == GroupKind::SOodd;
  const bool ok =
      (inv.type == SymbolType::BC && bc_ambient) ||
      (inv.type == SymbolType::D && ambient.kind == GroupKind::SOeven && ambient.sign > 0) ||
      (inv.type == SymbolType::TwoD && ambient.kind == GroupKind::SOeven && ambient.sign < 0);
  if (!ok || inv.rank != ambient.rank)
    throw TypeMismatch("symbol " + to_string(s) + " does not label a unipotent representation of " +
                       to_string(ambient));
  if (inv.rank == 0) return QPolynomial(1);

  const auto& L = s.top;
  const auto& M = s.bottom;
  const int a = static_cast<int>(L.size());
  const int b = static_cast<int>(M.size());
  QPolynomial num(1);
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j) num *= binomial_factor(L[j], -1, L[i]);
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) num *= binomial_factor(M[j], -1, M[i]);
  for (int x : L)
    for (int y : M) num *= binomial_factor(x, +1, y);
  num *= order(ambient).prime_to_q;

  QPolynomial den(1);
  for (const auto* row : {&L, &M})
    for (int x : *row) den *= structured_product({1, x, 2, 0, -1});

  int two_power;
  if (inv.type == SymbolType::BC) {
    two_power = (a + b - 1) / 2;
  } else if (inv.degenerate) {
    two_power = (a + b) / 2;
  } else {
    two_power = (a + b - 2) / 2;
  }
  return exact_div(num, den).shift(-c_exponent(a + b)).divide_scalar(mpz_class(1) << two_power);
}

QPolynomial partition_generic_degree(const Partition& p, bool twisted, int field_degree) {
  if (field_degree < 1) throw DomainError("partition_generic_degree: field degree must be positive");
  const int n = p.size();
  if (n == 0) return QPolynomial(1);
  int n_stat = 0;
  for (std::size_t i = 0; i < p.parts.size(); ++i) n_stat += static_cast<int>(i) * p.parts[i];
  std::vector<int> conj(static_cast<std::size_t>(p.parts[0]), 0);
  for (int x : p.parts)
    for (int j = 0; j < x; ++j) ++conj[j];
  QPolynomial num = structured_product({1, n, 1, 0, -1}).shift(n_stat);
  QPolynomial den(1);
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    for (int j = 0; j < p.parts[i]; ++j) {
      const int hook = p.parts[i] - j + conj[j] - static_cast<int>(i) - 1;
      den *= binomial_factor(hook, -1, 0);
    }
  QPolynomial deg = exact_div(num, den).substitute_power(field_degree, twisted ? -1 : 1);
  if (deg.numerator().back() < 0) deg = -deg;
  return deg;
}

Symbol concat_coordinate(const Symbol& s, Row row, int value) {
  const auto& r = row == Row::Top ? s.top : s.bottom;
  if (value < 0 || (!r.empty() && value <= r.back()))
    throw OrderViolation("cannot append " + std::to_string(value) + " to the " +
                         (row == Row::Top ? "top" : "bottom") + " row of " + to_string(s));
  std::vector<int> t = s.top, b = s.bottom;
  (row == Row::Top ? t : b).push_back(value);
  return Symbol(std::move(t), std::move(b));
}

Symbol orient_bc(const Symbol& s) {
  const int d = static_cast<int>(s.top.size()) - static_cast<int>(s.bottom.size());
  if (d % 2 == 0) throw TypeMismatch("orient_bc: symbol " + to_string(s) + " has even defect");
  return mod4(d) == 1 ? s : Symbol(s.bottom, s.top);
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int mx) {
    if (left == 0) {
      Partition p;
      p.parts = cur;
      out.push_back(p);
      return;
    }
    for (int k = std::min(left, mx); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string to_string(SymbolType t) {
  switch (t) {
    case SymbolType::BC: return "BC";
    case SymbolType::D: return "D";
    case SymbolType::TwoD: return "2D";
  }
  return "?";
}

SymbolType parse_symbol_type(const std::string& text) {
  if (text == "BC" || text == "B" || text == "C") return SymbolType::BC;
  if (text == "D") return SymbolType::D;
  if (text == "2D" || text == "²D") return SymbolType::TwoD;
  throw ParseError("unknown symbol type: " + text);
}

std::string to_string(const Symbol& s) {
  auto row = [](const std::vector<int>& r) {
    if (r.empty()) return std::string("∅");
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += "<";
      out += std::to_string(r[i]);
    }
    return out;
  };
  return "(" + row(s.top) + " | " + row(s.bottom) + ")";
}

Symbol parse_symbol(const std::string& text) {
  auto l = text.find('(');
  auto r = text.rfind(')');
  auto bar = text.find('|');
  if (l == std::string::npos || r == std::string::npos || bar == std::string::npos || !(l < bar && bar < r))
    throw ParseError("symbol must look like (0<1 | 1): " + text);
  return Symbol(parse_row(text.substr(l + 1, bar - l - 1)), parse_row(text.substr(bar + 1, r - bar - 1)));
}

std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts[i]);
  }
  return s + "]";
}

Partition parse_partition(const std::string& text) {
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '[' || ch == ']' || ch == ',') ? ' ' : ch;
  std::istringstream is(cleaned);
  std::vector<int> parts;
  int v;
  while (is >> v) parts.push_back(v);
  if (!is.eof()) throw ParseError("cannot parse partition: " + text);
  return Partition(parts);
}

}  // namespace howe
