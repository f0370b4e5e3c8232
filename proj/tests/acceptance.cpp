// Acceptance gate: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "howe/classify.hpp"
#include "howe/correspond.hpp"
#include "howe/errors.hpp"
#include "howe/identities.hpp"

using namespace howe;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

QPolynomial qp(int e) { return QPolynomial::q_power(e); }
QPolynomial bf(int a, int s, int b) { return binomial_factor(a, s, b); }

Outcome sum_of_squares() {
  const std::vector<GroupSpec> groups = {
      GroupSpec::sp(1),        GroupSpec::sp(2),         GroupSpec::so_odd(1),     GroupSpec::so_odd(2),
      GroupSpec::o_odd(1, 1),  GroupSpec::o_odd(1, -1),  GroupSpec::o_even(1, 1),  GroupSpec::o_even(1, -1),
      GroupSpec::o_even(2, 1), GroupSpec::o_even(2, -1),
  };
  Outcome o;
  int n = 0;
  for (const auto& g : groups) {
    for (int q0 : {3, 5}) {
      mpz_class total = 0;
      for (const auto& d : enumerate_irreps(g, q0)) {
        const mpz_class v = eval_at(irrep_dimension(d), q0);
        if (v <= 0) fail(o, to_string(g) + ": nonpositive dimension");
        total += v * v;
      }
      const mpz_class want = eval_at(order(g).full(), q0);
      if (total != want) fail(o, to_string(g) + " q=" + std::to_string(q0) + ": " + total.get_str() + " != " + want.get_str());
      ++n;
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " (group, q) cases";
  return o;
}

// Level-0 and level-1 data of Sp(2), built symbolically.
ClassificationData sp2_datum(int ell, int alpha, std::vector<Block> blocks, Symbol minus, Symbol one,
                             std::optional<int> cs) {
  ClassificationData d;
  d.group = GroupSpec::sp(1);
  d.semisimple.ambient = GroupSpec::so_odd(1);
  d.semisimple.ell = ell;
  d.semisimple.p = 1 - ell - static_cast<int>(blocks.size());
  d.semisimple.minus_one_sign = ell ? alpha : 0;
  d.semisimple.blocks = std::move(blocks);
  for (std::size_t i = 0; i < d.semisimple.blocks.size(); ++i) d.unipotent.partitions.push_back(Partition({1}));
  d.unipotent.minus_one_symbol = minus;
  d.unipotent.one_symbol = one;
  d.central_sign = cs;
  return d;
}

Outcome golden_table() {
  Outcome o;
  const Symbol bc0({0}, {});
  const Symbol d0({}, {});
  const QPolynomial half = QPolynomial(1).divide_scalar(2);
  for (int m = 2; m <= 6; ++m) {
    for (int disc : {1, -1}) {
      const DualPairSpec pair = DualPairSpec::make(1, GroupSpec::o_odd(m, disc));
      QPolynomial total;
      auto image_dim = [&](const ClassificationData& d) { return irrep_dimension(psi(pair, d, 3)); };
      // generic classes: (q-3)/2 split, (q-1)/2 non-split, one representative each
      const auto split = sp2_datum(0, 0, {{{1, 1, 1}, 1}}, d0, bc0, std::nullopt);
      const auto nonsplit = sp2_datum(0, 0, {{{1, -1, 1}, 1}}, d0, bc0, std::nullopt);
      const QPolynomial ratio = exact_div(bf(2 * m, -1, 0), bf(2, -1, 0));
      if (image_dim(split) != bf(1, 1, 0) * ratio) fail(o, "split generic image, m=" + std::to_string(m));
      if (image_dim(nonsplit) != bf(1, -1, 0) * ratio) fail(o, "non-split generic image, m=" + std::to_string(m));
      total += (qp(1) - QPolynomial(3)) * half * irrep_dimension(split) * image_dim(split);
      total += (qp(1) - QPolynomial(1)) * half * irrep_dimension(nonsplit) * image_dim(nonsplit);
      for (const Symbol& u : {Symbol({1}, {}), Symbol({0, 1}, {1})}) {
        const auto d = sp2_datum(0, 0, {}, d0, u, std::nullopt);
        total += irrep_dimension(d) * image_dim(d);
      }
      // level 1: sigma_1^+ with symbol (1 | 0), sigma_1^- with (0<1 | ∅).  The two
      // central signs must produce the two displayed forms; which sign lands on
      // which form follows the row rule of psi, not the labels of the example.
      for (int alpha : {1, -1}) {
        const Symbol u = alpha > 0 ? Symbol({1}, {0}) : Symbol({0, 1}, {});
        std::multiset<std::string> got;
        std::multiset<std::string> want;
        for (int cs : {1, -1}) {
          const auto d = sp2_datum(1, alpha, {}, u, bc0, cs);
          got.insert(image_dim(d).to_string());
          total += irrep_dimension(d) * image_dim(d);
          const QPolynomial form = alpha > 0 ? exact_div(bf(m, cs, 0) * bf(m, -cs, 1), bf(1, -1, 0))
                                             : exact_div(bf(m, cs, 0) * bf(m, cs, 1), bf(1, 1, 0));
          want.insert(form.divide_scalar(2).to_string());
        }
        if (got != want) fail(o, std::string("sigma_1^") + (alpha > 0 ? "+" : "-") + " images, m=" + std::to_string(m));
      }
      const QPolynomial want_total = qp(2 * m + 1) - qp(1) - QPolynomial(1);
      if (total != want_total) fail(o, "total at m=" + std::to_string(m) + ": " + total.to_string());
      if (top_dim_orthogonal(1, pair.W).closed_form != want_total) fail(o, "top part at m=" + std::to_string(m));
    }
  }
  if (o.pass) o.detail = "m = 2..6, both discriminants, symbolic";
  return o;
}

Outcome oscillator_halves() {
  Outcome o;
  for (int N = 1; N <= 6; ++N) {
    for (int alpha : {1, -1}) {
      QPolynomial sum;
      QPolynomial first;
      for (int cs : {1, -1}) {
        ClassificationData d;
        d.group = GroupSpec::sp(N);
        d.semisimple.ambient = GroupSpec::so_odd(N);
        d.semisimple.ell = N;
        d.semisimple.minus_one_sign = alpha;
        d.unipotent.minus_one_symbol = alpha > 0 ? Symbol({N}, {0}) : Symbol({0, N}, {});
        d.unipotent.one_symbol = Symbol({0}, {});
        d.central_sign = cs;
        const QPolynomial dim = irrep_dimension(d);
        if (cs > 0) first = dim;
        else if (dim != first) fail(o, "unequal halves at N=" + std::to_string(N));
        sum += dim;
      }
      if (sum != bf(N, alpha, 0)) fail(o, "N=" + std::to_string(N) + ": " + sum.to_string());
    }
  }
  if (o.pass) o.detail = "N = 1..6, both signs";
  return o;
}

Outcome q_multinomial() {
  Outcome o;
  for (int m = 0; m <= 6; ++m) {
    if (!check_q_multinomial(m)) fail(o, "identity fails at m=" + std::to_string(m));
    if (m >= 1 && check_q_multinomial(m, true)) fail(o, "negative control passed at m=" + std::to_string(m));
  }
  if (o.pass) o.detail = "m <= 6; perturbed control rejected";
  return o;
}

Outcome top_dim_triple() {
  Outcome o;
  int n = 0;
  auto check = [&](const TopDimReport& r, const std::string& what) {
    ++n;
    if (!r.consistent()) fail(o, what);
  };
  for (int m = 0; m <= 5; ++m)
    for (int N = m; N <= m + 4; ++N)
      check(top_dim_symplectic(N, GroupSpec::o_odd(m, 1)), "symplectic odd N=" + std::to_string(N) + " m=" + std::to_string(m));
  for (int m = 1; m <= 4; ++m)
    for (int N = m; N <= m + 4; ++N)
      for (int s : {1, -1})
        check(top_dim_symplectic(N, GroupSpec::o_even(m, s)),
              "symplectic even N=" + std::to_string(N) + " m=" + std::to_string(m));
  for (int N = 0; N <= 3; ++N)
    for (int m = N; m <= 2 * N + 3; ++m) {
      check(top_dim_orthogonal(N, GroupSpec::o_odd(m, 1)), "orthogonal odd N=" + std::to_string(N) + " m=" + std::to_string(m));
      if (m >= 1)
        check(top_dim_orthogonal(N, GroupSpec::o_even(m, 1)),
              "orthogonal even N=" + std::to_string(N) + " m=" + std::to_string(m));
    }
  if (o.pass) o.detail = std::to_string(n) + " reports agree";
  return o;
}

struct PairCase {
  int N;
  GroupSpec W;
  int q0;
};

std::vector<PairCase> eta_cases() {
  std::vector<PairCase> out;
  for (auto [N, m, q0] : {std::tuple{3, 1, 3}, {3, 1, 5}, {4, 1, 3}, {5, 2, 3}})
    for (int disc : {1, -1}) out.push_back({N, GroupSpec::o_odd(m, disc), q0});
  for (auto [N, m, q0] : {std::tuple{2, 1, 3}, {4, 2, 3}})
    for (int s : {1, -1}) out.push_back({N, GroupSpec::o_even(m, s), q0});
  return out;
}

std::vector<PairCase> zeta_cases() {
  std::vector<PairCase> out;
  for (int m : {2, 3}) {
    for (int disc : {1, -1}) out.push_back({1, GroupSpec::o_odd(m, disc), 3});
    for (int s : {1, -1}) out.push_back({1, GroupSpec::o_even(m, s), 3});
  }
  return out;
}

std::string label(const PairCase& c) {
  return "Sp(" + std::to_string(2 * c.N) + "):" + to_string(c.W) + " q=" + std::to_string(c.q0);
}

Outcome correspondence(const std::vector<PairCase>& cases) {
  Outcome o;
  int ok = 0;
  for (const auto& c : cases) {
    try {
      const auto rep = verify_correspondence_identity(DualPairSpec::make(c.N, c.W), c.q0);
      if (rep.equal) ++ok;
      else fail(o, label(c) + ": lhs " + rep.lhs.get_str() + " != rhs " + rep.rhs.get_str());
    } catch (const RangeViolation& e) {
      fail(o, label(c) + " is outside both stable ranges (" + e.what() + ")");
    }
  }
  o.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " pairs verified" + (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome full_decomposition() {
  Outcome o;
  auto cases = eta_cases();
  for (const auto& c : zeta_cases()) cases.push_back(c);
  int ok = 0;
  for (const auto& c : cases) {
    try {
      const auto rep = verify_full_decomposition(DualPairSpec::make(c.N, c.W), c.q0);
      if (rep.equal) ++ok;
      else fail(o, label(c) + ": total " + rep.total.get_str() + " != " + rep.expected.get_str());
    } catch (const RangeViolation& e) {
      fail(o, label(c) + " is outside both stable ranges (" + e.what() + ")");
    }
  }
  o.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " pairs verified" + (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome injectivity_and_rank() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const int N = 3 * n;
    const int m = n / 2;
    std::vector<GroupSpec> forms;
    if (n % 2) forms = {GroupSpec::o_odd(m, 1), GroupSpec::o_odd(m, -1)};
    else forms = {GroupSpec::o_even(m, 1), GroupSpec::o_even(m, -1)};
    std::set<ClassificationData> all;
    std::size_t count = 0;
    for (const auto& W : forms) {
      const DualPairSpec pair = DualPairSpec::make(N, W);
      std::set<ClassificationData> images;
      const auto irreps = enumerate_irreps(W, 3);
      for (const auto& d : irreps) {
        const auto img = phi(pair, d, 3);
        images.insert(img);
        const int rk = n_rank(irrep_dimension(img), N);
        if (rk != n) fail(o, to_string(img) + " has N-rank " + std::to_string(rk));
      }
      if (images.size() != irreps.size()) fail(o, "phi not injective for " + to_string(pair));
      count += images.size();
      all.insert(images.begin(), images.end());
    }
    if (all.size() != count) fail(o, "images of the two forms of dimension " + std::to_string(n) + " overlap");
  }
  if (o.pass) o.detail = "n = 1..3, N = 3n, q = 3";
  return o;
}

Outcome closed_form_phi() {
  Outcome o;
  int n = 0;
  for (int m = 0; m <= 2; ++m)
    for (int N = 2 * m + 1; N <= 5; ++N)
      for (int disc : {1, -1})
        for (int q0 : {3, 5}) {
          const DualPairSpec pair = DualPairSpec::make(N, GroupSpec::o_odd(m, disc));
          for (const auto& d : enumerate_irreps(pair.W, q0)) {
            ++n;
            if (irrep_dimension(phi(pair, d, q0)) != phi_dimension_closed_form(pair, d))
              fail(o, to_string(pair) + ": " + to_string(d));
          }
        }
  if (o.pass) o.detail = std::to_string(n) + " inputs, symbolic";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"sum of squares", sum_of_squares},
      {"SL2 golden table", golden_table},
      {"oscillator halves", oscillator_halves},
      {"q-multinomial identities", q_multinomial},
      {"top-dim triple agreement", top_dim_triple},
      {"eta identity", [] { return correspondence(eta_cases()); }},
      {"zeta identity", [] { return correspondence(zeta_cases()); }},
      {"full decomposition", full_decomposition},
      {"injectivity, disjointness, N-rank", injectivity_and_rank},
      {"closed-form phi dimension", closed_form_phi},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %2zu  %-36s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
