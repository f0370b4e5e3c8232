#include "howe/correspond.hpp"

#include "howe/errors.hpp"

namespace howe {
namespace {

int entries_of(const Symbol& s) { return s.entries(); }

Symbol append(const Symbol& s, bool bottom, int value) {
  return canonicalize(concat_coordinate(s, bottom ? Row::Bottom : Row::Top, value));
}

void check_source(const DualPairSpec& pair, const ClassificationData& d, StableRange want, const GroupSpec& src) {
  pair.validate();
  if (pair.range != want)
    throw RangeViolation(std::string(want == StableRange::Symplectic ? "phi" : "psi") + " needs the " +
                         (want == StableRange::Symplectic ? "symplectic" : "orthogonal") + "-stable range, got " +
                         to_string(pair));
  if (d.group != src) throw TypeMismatch("datum of " + to_string(d.group) + " does not belong to " + to_string(src));
  d.validate();
}

}  // namespace

void DualPairSpec::validate() const {
  if (W.kind != GroupKind::Oodd && W.kind != GroupKind::Oeven)
    throw DomainError("dual pair: W must be O(2m+1) or O±(2m), got " + to_string(W));
  if (N < 0) throw DomainError("dual pair: N must be nonnegative");
  if (range == StableRange::Symplectic && n() > N)
    throw RangeViolation(to_string(*this) + ": dim W = " + std::to_string(n()) + " exceeds N = " + std::to_string(N));
  if (range == StableRange::Orthogonal && 2 * N > W.witt_index())
    throw RangeViolation(to_string(*this) + ": 2N = " + std::to_string(2 * N) + " exceeds the Witt index " +
                         std::to_string(W.witt_index()) + " of W");
}

DualPairSpec DualPairSpec::make(int N, const GroupSpec& W) {
  DualPairSpec p{N, W, StableRange::Symplectic};
  if (W.kind != GroupKind::Oodd && W.kind != GroupKind::Oeven)
    throw DomainError("dual pair: W must be O(2m+1) or O±(2m), got " + to_string(W));
  if (p.n() <= N) return p;
  p.range = StableRange::Orthogonal;
  p.validate();
  return p;
}

DualPairSpec parse_pair(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("pair must look like Sp(6):O(3,disc=+1), got " + text);
  GroupSpec a = parse_group(text.substr(0, colon));
  GroupSpec b = parse_group(text.substr(colon + 1));
  if (a.kind != GroupKind::Sp) std::swap(a, b);
  if (a.kind != GroupKind::Sp) throw ParseError("pair needs a symplectic member: " + text);
  return DualPairSpec::make(a.rank, b);
}

std::string to_string(const DualPairSpec& pair) {
  return to_string(pair.symplectic()) + ":" + to_string(pair.W);
}

ClassificationData phi(const DualPairSpec& pair, const ClassificationData& d, int q0) {
  check_source(pair, d, StableRange::Symplectic, pair.W);
  const int N = pair.N;
  const int m = pair.m();
  const auto& s = d.semisimple;
  ClassificationData out;
  out.group = pair.symplectic();
  out.semisimple.ambient = GroupSpec::so_odd(N);
  out.semisimple.blocks = s.blocks;
  out.unipotent.partitions = d.unipotent.partitions;

  if (pair.odd()) {
    const int es = d.extension_signs.at(0);
    out.semisimple.p = s.p;
    out.semisimple.ell = s.ell + N - m;
    out.semisimple.minus_one_sign = es;
    const Symbol a = orient_bc(d.unipotent.minus_one_symbol);
    const int Np = N - m + (entries_of(a) - 1) / 2;
    out.unipotent.minus_one_symbol = append(a, es > 0, Np);
    out.unipotent.one_symbol = d.unipotent.one_symbol;
    if (!out.unipotent.minus_one_symbol.degenerate())
      out.central_sign = pair.W.sign * epsilon_sign(s, q0);
  } else {
    out.semisimple.p = s.p + N - m;
    out.semisimple.ell = s.ell;
    out.semisimple.minus_one_sign = s.minus_one_sign;
    const Symbol& b = d.unipotent.one_symbol;
    const int Np = N - m + entries_of(b) / 2;
    std::size_t next = 0;
    if (b.degenerate()) {
      out.unipotent.one_symbol = append(b, false, Np);
    } else {
      const int alpha = d.extension_signs.at(next++);
      out.unipotent.one_symbol = append(b, alpha > 0, Np);
    }
    out.unipotent.minus_one_symbol = d.unipotent.minus_one_symbol;
    if (s.ell > 0 && !d.unipotent.minus_one_symbol.degenerate()) out.central_sign = d.extension_signs.at(next++);
  }
  out.validate();
  return out;
}

ClassificationData psi(const DualPairSpec& pair, const ClassificationData& d, int q0) {
  check_source(pair, d, StableRange::Orthogonal, pair.symplectic());
  const int N = pair.N;
  const int m = pair.m();
  const auto& s = d.semisimple;
  ClassificationData out;
  out.group = pair.W;
  out.semisimple.blocks = s.blocks;
  out.unipotent.partitions = d.unipotent.partitions;

  if (pair.odd()) {
    out.semisimple.ambient = GroupSpec::sp(m);
    out.semisimple.p = s.p;
    out.semisimple.ell = s.ell + m - N;
    const Symbol& a = d.unipotent.minus_one_symbol;
    const int mp = m - N + entries_of(a) / 2;
    out.unipotent.minus_one_symbol = append(a, !a.degenerate() && *d.central_sign > 0, mp);
    out.unipotent.one_symbol = d.unipotent.one_symbol;
    out.extension_signs = {epsilon_sign(s, q0) * pair.W.sign};
  } else {
    const int sg = pair.W.sign;
    const int alpha = s.minus_one_sign ? s.minus_one_sign : 1;
    const int s1 = sg * alpha * s.generic_sign();
    out.semisimple.ambient = GroupSpec::so_even(m, sg);
    out.semisimple.p = s.p + m - N;
    out.semisimple.ell = s.ell;
    out.semisimple.minus_one_sign = s.minus_one_sign;
    out.semisimple.one_sign = out.semisimple.p > 0 ? s1 : 0;
    const Symbol b = orient_bc(d.unipotent.one_symbol);
    const int mp = m - N + (entries_of(b) - 1) / 2;
    out.unipotent.one_symbol = append(b, s1 > 0, mp);
    out.unipotent.minus_one_symbol = d.unipotent.minus_one_symbol;
    if (out.semisimple.p > 0 && !out.unipotent.one_symbol.degenerate()) out.extension_signs.push_back(1);
    if (s.ell > 0 && !d.unipotent.minus_one_symbol.degenerate()) out.extension_signs.push_back(*d.central_sign);
  }
  out.validate();
  return out;
}

QPolynomial phi_dimension_closed_form(const DualPairSpec& pair, const ClassificationData& d) {
  if (!pair.odd()) throw DomainError("phi_dimension_closed_form: only the odd-W case has a closed form");
  check_source(pair, d, StableRange::Symplectic, pair.W);
  const int N = pair.N;
  const int m = pair.m();
  const int alpha = d.extension_signs.at(0);
  const Symbol a = orient_bc(d.unipotent.minus_one_symbol);
  const int len = a.entries();
  const int Np = N - m + (len - 1) / 2;

  QPolynomial num = irrep_dimension(d) * structured_product({Np + 1, N, 2, 0, -1});
  for (int x : a.top) num *= binomial_factor(Np, alpha, x);
  for (int y : a.bottom) num *= binomial_factor(Np, -alpha, y);
  const QPolynomial den = order(GroupSpec::so_odd(m)).prime_to_q.shift((len - 1) * (len - 1) / 4);
  return exact_div(num, den).divide_scalar(2);
}

}  // namespace howe
