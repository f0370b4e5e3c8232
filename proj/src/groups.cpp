#include "howe/groups.hpp"

#include <algorithm>
#include <regex>
#include <tuple>

#include "howe/errors.hpp"

namespace howe {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

void require_sign(int s) { require(s == 1 || s == -1, "sign must be +1 or -1"); }

auto key(const GroupSpec& g) {
  return std::tie(g.kind, g.rank, g.sign, g.field_degree);
}

// prod_{i=1}^{r} (q^{2i} - 1)
QPolynomial symplectic_part(int r) { return structured_product({1, r, 2, 0, -1}); }

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

GroupSpec GroupSpec::sp(int N) {
  require(N >= 0, "Sp: rank must be nonnegative");
  return {GroupKind::Sp, N, 1, 1, {}};
}
GroupSpec GroupSpec::so_odd(int m) {
  require(m >= 0, "SO: rank must be nonnegative");
  return {GroupKind::SOodd, m, 1, 1, {}};
}
GroupSpec GroupSpec::so_even(int m, int sign) {
  require(m >= 0, "SO: rank must be nonnegative");
  require_sign(sign);
  require(m > 0 || sign == 1, "SO-(0) does not exist");
  return {GroupKind::SOeven, m, sign, 1, {}};
}
GroupSpec GroupSpec::o_odd(int m, int disc) {
  require(m >= 0, "O: rank must be nonnegative");
  require_sign(disc);
  return {GroupKind::Oodd, m, disc, 1, {}};
}
GroupSpec GroupSpec::o_even(int m, int sign) {
  require(m >= 0, "O: rank must be nonnegative");
  require_sign(sign);
  require(m > 0 || sign == 1, "O-(0) does not exist");
  return {GroupKind::Oeven, m, sign, 1, {}};
}
GroupSpec GroupSpec::glu(int n, int twist, int d) {
  require(n >= 0 && d >= 1, "GL/U: need n >= 0 and d >= 1");
  require_sign(twist);
  return {GroupKind::GLU, n, twist, d, {}};
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec p;
  p.kind = GroupKind::Product;
  for (auto& f : factors) {
    if (f.kind == GroupKind::Product) {
      for (auto& g : f.factors) p.factors.push_back(std::move(g));
    } else {
      p.factors.push_back(std::move(f));
    }
  }
  return p;
}

int GroupSpec::natural_dimension() const {
  switch (kind) {
    case GroupKind::Sp: return 2 * rank;
    case GroupKind::SOodd:
    case GroupKind::Oodd: return 2 * rank + 1;
    case GroupKind::SOeven:
    case GroupKind::Oeven: return 2 * rank;
    case GroupKind::GLU: return rank;
    case GroupKind::Product: break;
  }
  throw DomainError("natural_dimension: not defined for products");
}

int GroupSpec::witt_index() const {
  switch (kind) {
    case GroupKind::Sp:
    case GroupKind::SOodd:
    case GroupKind::Oodd: return rank;
    case GroupKind::SOeven:
    case GroupKind::Oeven: return sign > 0 ? rank : rank - 1;
    default: break;
  }
  throw DomainError("witt_index: only defined for symplectic and orthogonal groups");
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  return key(a) == key(b) && a.factors == b.factors;
}

bool operator<(const GroupSpec& a, const GroupSpec& b) {
  if (key(a) != key(b)) return key(a) < key(b);
  return std::lexicographical_compare(a.factors.begin(), a.factors.end(),
                                      b.factors.begin(), b.factors.end());
}

GroupOrder order(const GroupSpec& g) {
  GroupOrder o;
  const int r = g.rank;
  switch (g.kind) {
    case GroupKind::Sp:
    case GroupKind::SOodd:
    case GroupKind::Oodd:
      o.q_exponent = r * r;
      o.prime_to_q = symplectic_part(r);
      break;
    case GroupKind::SOeven:
    case GroupKind::Oeven:
      if (r == 0) break;
      o.q_exponent = r * (r - 1);
      o.prime_to_q = binomial_factor(r, -g.sign, 0) * symplectic_part(r - 1);
      break;
    case GroupKind::GLU: {
      const int d = g.field_degree;
      o.q_exponent = d * r * (r - 1) / 2;
      for (int u = 1; u <= r; ++u) {
        const int s = (g.sign < 0 && (u & 1)) ? 1 : -1;  // q^{du} - (±1)^u
        o.prime_to_q *= binomial_factor(d * u, s, 0);
      }
      break;
    }
    case GroupKind::Product:
      for (const auto& f : g.factors) {
        GroupOrder fo = order(f);
        o.q_exponent += fo.q_exponent;
        o.prime_to_q *= fo.prime_to_q;
      }
      break;
  }
  // O(0) is trivial; otherwise the full orthogonal group has two components.
  if ((g.kind == GroupKind::Oodd) || (g.kind == GroupKind::Oeven && r > 0))
    o.prime_to_q *= QPolynomial(2);
  return o;
}

std::vector<QPolynomial> prime_to_q_factors(const GroupSpec& g) {
  std::vector<QPolynomial> f;
  const int r = g.rank;
  auto symplectic = [&](int n) {
    for (int i = 1; i <= n; ++i) f.push_back(binomial_factor(2 * i, -1, 0));
  };
  switch (g.kind) {
    case GroupKind::Sp:
    case GroupKind::SOodd:
    case GroupKind::Oodd: symplectic(r); break;
    case GroupKind::SOeven:
    case GroupKind::Oeven:
      if (r == 0) break;
      symplectic(r - 1);
      f.push_back(binomial_factor(r, -g.sign, 0));
      break;
    case GroupKind::GLU:
      for (int u = 1; u <= r; ++u)
        f.push_back(binomial_factor(g.field_degree * u, (g.sign < 0 && (u & 1)) ? 1 : -1, 0));
      break;
    case GroupKind::Product:
      for (const auto& x : g.factors)
        for (auto& p : prime_to_q_factors(x)) f.push_back(std::move(p));
      break;
  }
  if ((g.kind == GroupKind::Oodd) || (g.kind == GroupKind::Oeven && r > 0)) f.insert(f.begin(), QPolynomial(2));
  return f;
}

GroupSpec dual(const GroupSpec& g) {
  switch (g.kind) {
    case GroupKind::Sp: return GroupSpec::so_odd(g.rank);
    case GroupKind::SOodd: return GroupSpec::sp(g.rank);
    case GroupKind::SOeven:
    case GroupKind::GLU: return g;
    case GroupKind::Product: {
      std::vector<GroupSpec> f;
      for (const auto& x : g.factors) f.push_back(dual(x));
      return GroupSpec::product(std::move(f));
    }
    case GroupKind::Oodd:
    case GroupKind::Oeven: break;
  }
  throw NoDual("full orthogonal groups are disconnected and have no dual: " + to_string(g));
}

QPolynomial isotropic_parabolic_quotient_order(const GroupSpec& g, int k) {
  if (k < 0) throw DomainError("parabolic quotient: k must be nonnegative");
  if (g.kind == GroupKind::GLU || g.kind == GroupKind::Product)
    throw DomainError("parabolic quotient: not a symplectic or orthogonal group");
  if (k > g.witt_index())
    throw DomainError("parabolic quotient: k=" + std::to_string(k) + " exceeds the Witt index of " + to_string(g));
  const int r = g.rank;
  switch (g.kind) {
    case GroupKind::Sp:
    case GroupKind::SOodd:
    case GroupKind::Oodd:
      return q_binomial(r, k, 1) * structured_product({r - k + 1, r, 1, 0, +1});
    case GroupKind::SOeven:
    case GroupKind::Oeven:
      if (g.sign > 0) return q_binomial(r, k, 1) * structured_product({r - k, r - 1, 1, 0, +1});
      return q_binomial(r - 1, k, 1) * structured_product({r - k + 1, r, 1, 0, +1});
    default: break;
  }
  throw DomainError("parabolic quotient: unsupported group");
}

std::string to_string(const GroupSpec& g) {
  switch (g.kind) {
    case GroupKind::Sp: return "Sp(" + std::to_string(2 * g.rank) + ")";
    case GroupKind::SOodd: return "SO(" + std::to_string(2 * g.rank + 1) + ")";
    case GroupKind::SOeven: return "SO" + sign_char(g.sign) + "(" + std::to_string(2 * g.rank) + ")";
    case GroupKind::Oodd:
      return "O(" + std::to_string(2 * g.rank + 1) + ",disc=" + sign_char(g.sign) + "1)";
    case GroupKind::Oeven: return "O" + sign_char(g.sign) + "(" + std::to_string(2 * g.rank) + ")";
    case GroupKind::GLU:
      return std::string(g.sign > 0 ? "GL" : "U") + "(" + std::to_string(g.rank) +
             ";d=" + std::to_string(g.field_degree) + ")";
    case GroupKind::Product: {
      if (g.factors.empty()) return "1";
      std::string s;
      for (std::size_t i = 0; i < g.factors.size(); ++i) {
        if (i) s += " x ";
        s += to_string(g.factors[i]);
      }
      return s;
    }
  }
  return "?";
}

GroupSpec parse_group(const std::string& text) {
  if (const auto x = text.find(" x "); x != std::string::npos)
    return GroupSpec::product({parse_group(text.substr(0, x)), parse_group(text.substr(x + 3))});
  static const std::regex sp_re(R"(\s*Sp\((\d+)\)\s*)");
  static const std::regex so_re(R"(\s*SO([+-]?)\((\d+)\)\s*)");
  static const std::regex o_odd_re(R"(\s*O\((\d+)(?:\s*,\s*disc\s*=\s*([+-]?1))?\)\s*)");
  static const std::regex o_even_re(R"(\s*O([+-])\((\d+)\)\s*)");
  static const std::regex glu_re(R"(\s*(GL|U)\((\d+)(?:\s*;\s*d\s*=\s*(\d+))?\)\s*)");
  std::smatch m;
  auto num = [](const std::string& s) { return std::stoi(s); };
  if (std::regex_match(text, m, sp_re)) {
    const int d = num(m[1]);
    if (d % 2) throw ParseError("Sp needs an even dimension: " + text);
    return GroupSpec::sp(d / 2);
  }
  if (std::regex_match(text, m, so_re)) {
    const int d = num(m[2]);
    if (m[1].str().empty()) {
      if (d % 2 == 0) throw ParseError("even SO needs a sign, e.g. SO+(4): " + text);
      return GroupSpec::so_odd(d / 2);
    }
    if (d % 2) throw ParseError("SO± needs an even dimension: " + text);
    return GroupSpec::so_even(d / 2, m[1] == "+" ? 1 : -1);
  }
  if (std::regex_match(text, m, o_odd_re)) {
    const int d = num(m[1]);
    if (d % 2 == 0) throw ParseError("even O needs a sign, e.g. O+(4): " + text);
    const int disc = m[2].matched ? num(m[2]) : 1;
    return GroupSpec::o_odd(d / 2, disc);
  }
  if (std::regex_match(text, m, o_even_re)) {
    const int d = num(m[2]);
    if (d % 2) throw ParseError("O± needs an even dimension: " + text);
    return GroupSpec::o_even(d / 2, m[1] == "+" ? 1 : -1);
  }
  if (std::regex_match(text, m, glu_re)) {
    const int d = m[3].matched ? num(m[3]) : 1;
    return GroupSpec::glu(num(m[2]), m[1] == "GL" ? 1 : -1, d);
  }
  throw ParseError("cannot parse group name: " + text);
}

}  // namespace howe
