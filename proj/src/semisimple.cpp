#include "howe/semisimple.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <tuple>

#include "howe/errors.hpp"

namespace howe {
namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int ambient_rank(const GroupSpec& g) {
  switch (g.kind) {
    case GroupKind::Sp:
    case GroupKind::SOodd:
    case GroupKind::SOeven: return g.rank;
    default: break;
  }
  throw DomainError("semisimple classes live in Sp, SO(2N+1) or SO±(2m), not " + to_string(g));
}

auto class_key(const SemisimpleClass& s) {
  return std::tie(s.ambient, s.p, s.ell, s.minus_one_sign, s.one_sign, s.blocks);
}

}  // namespace

bool operator<(const Eigenvalue& a, const Eigenvalue& b) {
  return std::tie(a.r, a.torus_sign, a.exponent) < std::tie(b.r, b.torus_sign, b.exponent);
}

bool operator<(const Block& a, const Block& b) {
  return std::tie(a.ev, a.mult) < std::tie(b.ev, b.mult);
}

bool operator==(const SemisimpleClass& a, const SemisimpleClass& b) { return class_key(a) == class_key(b); }
bool operator<(const SemisimpleClass& a, const SemisimpleClass& b) { return class_key(a) < class_key(b); }

int SemisimpleClass::generic_rank() const {
  int r = 0;
  for (const auto& b : blocks) r += b.ev.r * b.mult;
  return r;
}

int SemisimpleClass::generic_sign() const {
  int s = 1;
  for (const auto& b : blocks)
    if (b.ev.torus_sign < 0 && (b.mult & 1)) s = -s;
  return s;
}

void SemisimpleClass::validate() const {
  const int rank = ambient_rank(ambient);
  if (p < 0 || ell < 0) throw DomainError("semisimple class: negative multiplicity");
  if (p + ell + generic_rank() != rank)
    throw RankMismatch("semisimple class: p + ell + generic rank != rank of " + to_string(ambient));
  const bool orth = ambient.kind != GroupKind::Sp;
  if ((orth && ell > 0) != (minus_one_sign != 0))
    throw DomainError("semisimple class: -1 eigenspace sign must be present exactly when ell > 0 in an orthogonal ambient");
  const bool even = ambient.kind == GroupKind::SOeven;
  if ((even && p > 0) != (one_sign != 0))
    throw DomainError("semisimple class: 1 eigenspace sign must be present exactly when p > 0 in SO±(2m)");
  if (even) {
    const int s1 = one_sign ? one_sign : 1;
    const int s2 = minus_one_sign ? minus_one_sign : 1;
    if (s1 * s2 * generic_sign() != ambient.sign)
      throw DomainError("semisimple class: block signs do not multiply to the form's total sign");
  }
  for (const auto& b : blocks)
    if (b.mult < 1 || b.ev.r < 1 || (b.ev.torus_sign != 1 && b.ev.torus_sign != -1))
      throw DomainError("semisimple class: malformed eigenvalue block");
}

Centralizer centralizer(const SemisimpleClass& s) {
  s.validate();
  std::vector<GroupSpec> f;
  for (const auto& b : s.blocks) f.push_back(GroupSpec::glu(b.mult, b.ev.torus_sign, b.ev.r));
  Centralizer c;
  switch (s.ambient.kind) {
    case GroupKind::Sp:
      if (s.ell) f.push_back(GroupSpec::sp(s.ell));
      if (s.p) f.push_back(GroupSpec::sp(s.p));
      break;
    case GroupKind::SOodd:
      if (s.ell) f.push_back(GroupSpec::so_even(s.ell, s.minus_one_sign));
      if (s.p) f.push_back(GroupSpec::so_odd(s.p));
      c.component_order = s.ell > 0 ? 2 : 1;
      break;
    case GroupKind::SOeven:
      if (s.ell) f.push_back(GroupSpec::so_even(s.ell, s.minus_one_sign));
      if (s.p) f.push_back(GroupSpec::so_even(s.p, s.one_sign));
      c.component_order = (s.ell > 0 && s.p > 0) ? 2 : 1;
      break;
    default: break;
  }
  c.shape = GroupSpec::product(std::move(f));
  return c;
}

int epsilon_sign(const SemisimpleClass& s, int q0) {
  if (q0 % 2 == 0) throw DomainError("epsilon_sign: q must be odd");
  int e = 1;
  for (const auto& b : s.blocks)
    if ((b.ev.exponent * b.mult) & 1) e = -e;
  if (s.ell > 0) {
    const int split = ((q0 - 1) / 2) & 1 ? -1 : 1;
    const int nonsplit = ((q0 + 1) / 2) & 1 ? -1 : 1;
    if (s.ambient.kind == GroupKind::SOodd && s.minus_one_sign < 0) {
      for (int i = 0; i < s.ell - 1; ++i) e *= split;
      e *= nonsplit;
    } else {
      for (int i = 0; i < s.ell; ++i) e *= split;
    }
  }
  return e;
}

EnumerationBounds EnumerationBounds::from_env() {
  EnumerationBounds b;
  if (const char* env = std::getenv("HOWE_MAX_RANK")) {
    const int v = std::atoi(env);
    if (v > 0) b.max_rank = v;
  }
  return b;
}

bool is_odd_prime_power(int q0) {
  if (q0 < 3 || q0 % 2 == 0) return false;
  int p = 3;
  while (q0 % p) p += 2;
  while (q0 % p == 0) q0 /= p;
  return q0 == 1;
}

void check_bounds(int rank, int q0, const EnumerationBounds& bounds) {
  if (!is_odd_prime_power(q0)) throw DomainError("q must be an odd prime power, got " + std::to_string(q0));
  if (rank > bounds.max_rank)
    throw BoundExceeded("rank " + std::to_string(rank) + " exceeds the enumeration bound " + std::to_string(bounds.max_rank));
  if (q0 > bounds.max_q)
    throw BoundExceeded("q=" + std::to_string(q0) + " exceeds the enumeration bound " + std::to_string(bounds.max_q));
}

std::vector<Eigenvalue> eigenvalue_orbits(int r, int torus_sign, int q0) {
  const std::int64_t M = ipow(q0, r) - torus_sign;
  // Frobenius has order r on mu_{q^r-1}; on mu_{q^r+1} it has order 2r and
  // its r-th power is inversion.
  const int frob_len = torus_sign > 0 ? r : 2 * r;
  std::vector<char> seen(static_cast<std::size_t>(M), 0);
  std::vector<Eigenvalue> out;
  for (std::int64_t e = 1; e < M; ++e) {
    if (seen[e] || 2 * e == M) continue;
    std::set<std::int64_t> frob;
    std::int64_t x = e;
    for (int i = 0; i < frob_len; ++i) {
      frob.insert(x);
      x = x * q0 % M;
    }
    std::set<std::int64_t> orbit = frob;
    for (auto y : frob) orbit.insert((M - y) % M);
    for (auto y : orbit) seen[y] = 1;
    if (static_cast<int>(frob.size()) != frob_len) continue;  // lives in a smaller field
    if (torus_sign > 0 && frob.count((M - e) % M)) continue;   // really a unitary block
    out.push_back({r, torus_sign, *orbit.begin()});
  }
  return out;
}

std::vector<SemisimpleClass> enumerate_semisimple_classes(const GroupSpec& ambient, int q0,
                                                          const EnumerationBounds& bounds) {
  const int rank = ambient_rank(ambient);
  check_bounds(rank, q0, bounds);

  std::vector<Eigenvalue> orbs;
  for (int r = 1; r <= rank; ++r)
    for (int t : {1, -1})
      for (const auto& ev : eigenvalue_orbits(r, t, q0)) orbs.push_back(ev);

  std::vector<SemisimpleClass> out;
  std::vector<Block> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    for (int ell = 0; ell <= left; ++ell) {
      SemisimpleClass s;
      s.ambient = ambient;
      s.blocks = cur;
      s.ell = ell;
      s.p = left - ell;
      switch (ambient.kind) {
        case GroupKind::Sp: out.push_back(s); break;
        case GroupKind::SOodd:
          if (ell == 0) {
            out.push_back(s);
          } else {
            for (int a : {1, -1}) {
              s.minus_one_sign = a;
              out.push_back(s);
            }
          }
          break;
        case GroupKind::SOeven: {
          for (int s2 : {1, -1}) {
            if (ell == 0 && s2 < 0) continue;
            const int s1 = ambient.sign * s2 * s.generic_sign();
            if (s.p == 0 && s1 < 0) continue;
            s.minus_one_sign = ell ? s2 : 0;
            s.one_sign = s.p ? s1 : 0;
            out.push_back(s);
          }
          break;
        }
        default: break;
      }
    }
    for (std::size_t j = start; j < orbs.size(); ++j) {
      for (int mult = 1; mult * orbs[j].r <= left; ++mult) {
        cur.push_back({orbs[j], mult});
        rec(j + 1, left - mult * orbs[j].r);
        cur.pop_back();
      }
    }
  };
  rec(0, rank);
  for (auto& s : out) std::sort(s.blocks.begin(), s.blocks.end());
  std::sort(out.begin(), out.end());
  return out;
}

SemisimpleClass add_blocks(const SemisimpleClass& s, const Surgery& g) {
  s.validate();
  if (g.count < 0) throw RankMismatch("add_blocks: negative count");
  SemisimpleClass t = s;
  const int rank = s.ambient.rank;
  switch (g.kind) {
    case Surgery::Kind::MinusOnes:
      if (s.ambient.kind == GroupKind::Sp) {
        if (g.sign != 1 && g.sign != -1) throw DomainError("add_blocks: placement sign required");
        t.ambient = GroupSpec::so_odd(rank + g.count);
        t.ell += g.count;
        t.minus_one_sign = t.ell > 0 ? g.sign : 0;
      } else if (s.ambient.kind == GroupKind::SOodd) {
        t.ambient = GroupSpec::sp(rank + g.count);
        t.ell += g.count;
        t.minus_one_sign = 0;  // forced 1 dropped; symplectic -1 spaces carry no type
      } else {
        throw RankMismatch("add_blocks: -1 surgery needs an Sp or SO(2N+1) class");
      }
      break;
    case Surgery::Kind::IdentityOdd:
      if (s.ambient.kind != GroupKind::SOeven) throw RankMismatch("add_blocks: odd identity surgery needs an SO±(2m) class");
      t.ambient = GroupSpec::so_odd(rank + g.count);
      t.p += g.count;
      t.one_sign = 0;
      break;
    case Surgery::Kind::IdentityEven:
      if (s.ambient.kind == GroupKind::SOeven) {
        t.ambient = GroupSpec::so_even(rank + g.count, s.ambient.sign);
        t.p += g.count;
      } else if (s.ambient.kind == GroupKind::SOodd) {
        if (g.sign != 1 && g.sign != -1) throw DomainError("add_blocks: total sign required");
        t.ambient = GroupSpec::so_even(rank + g.count, g.sign);
        t.p += g.count;
      } else {
        throw RankMismatch("add_blocks: even identity surgery needs an orthogonal class");
      }
      {
        const int s2 = t.minus_one_sign ? t.minus_one_sign : 1;
        const int s1 = t.ambient.sign * s2 * t.generic_sign();
        if (t.p == 0 && s1 < 0) throw DomainError("add_blocks: sign constraint cannot be met with p = 0");
        t.one_sign = t.p ? s1 : 0;
      }
      break;
  }
  t.validate();
  return t;
}

std::string to_string(const SemisimpleClass& s) {
  std::string out = to_string(s.ambient) + "[p=" + std::to_string(s.p) + ",ell=" + std::to_string(s.ell);
  if (s.minus_one_sign) out += std::string(",alpha=") + (s.minus_one_sign > 0 ? "+" : "-");
  if (s.one_sign) out += std::string(",beta=") + (s.one_sign > 0 ? "+" : "-");
  for (const auto& b : s.blocks) {
    out += ";" + std::string(b.ev.torus_sign > 0 ? "+" : "-") + std::to_string(b.ev.r) + ":" +
           std::to_string(b.ev.exponent) + "^" + std::to_string(b.mult);
  }
  return out + "]";
}

}  // namespace howe
