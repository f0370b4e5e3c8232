#include "howe/classify.hpp"

#include <tuple>

#include "howe/errors.hpp"

namespace howe {
namespace {

SymbolType symbol_type_for(const GroupSpec& f) {
  if (f.kind == GroupKind::SOeven) return f.sign > 0 ? SymbolType::D : SymbolType::TwoD;
  return SymbolType::BC;
}

void check_symbol(const Symbol& s, const GroupSpec& factor, const char* which) {
  if (canonicalize(s) != s)
    throw DomainError(std::string(which) + " symbol " + to_string(s) + " is not in canonical form");
  const SymbolInvariants inv = symbol_invariants(s);
  if (inv.rank != factor.rank)
    throw RankMismatch(std::string(which) + " symbol " + to_string(s) + " has rank " + std::to_string(inv.rank) +
                       ", factor " + to_string(factor) + " needs " + std::to_string(factor.rank));
  if (inv.type != symbol_type_for(factor))
    throw TypeMismatch(std::string(which) + " symbol " + to_string(s) + " is of type " + to_string(inv.type) +
                       ", factor " + to_string(factor) + " needs " + to_string(symbol_type_for(factor)));
}

bool is_trivial_oeven(const GroupSpec& g) { return g.kind == GroupKind::Oeven && g.rank == 0; }

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

void sign_tuples(int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int s : {1, -1}) {
    cur.push_back(s);
    sign_tuples(k, cur, out);
    cur.pop_back();
  }
}

nlohmann::json semisimple_to_json(const SemisimpleClass& s) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : s.blocks)
    blocks.push_back({{"r", b.ev.r}, {"torus_sign", b.ev.torus_sign}, {"exponent", b.ev.exponent}, {"mult", b.mult}});
  return {{"ambient", to_string(s.ambient)},
          {"p", s.p},
          {"ell", s.ell},
          {"minus_one_sign", s.minus_one_sign},
          {"one_sign", s.one_sign},
          {"blocks", blocks}};
}

SemisimpleClass semisimple_from_json(const nlohmann::json& j) {
  SemisimpleClass s;
  s.ambient = parse_group(j.at("ambient").get<std::string>());
  s.p = j.at("p").get<int>();
  s.ell = j.at("ell").get<int>();
  s.minus_one_sign = j.value("minus_one_sign", 0);
  s.one_sign = j.value("one_sign", 0);
  for (const auto& b : j.at("blocks")) {
    Block blk;
    blk.ev.r = b.at("r").get<int>();
    blk.ev.torus_sign = b.at("torus_sign").get<int>();
    blk.ev.exponent = b.at("exponent").get<std::int64_t>();
    blk.mult = b.at("mult").get<int>();
    s.blocks.push_back(blk);
  }
  return s;
}

}  // namespace

bool operator<(const UnipotentDatum& a, const UnipotentDatum& b) {
  return std::tie(a.partitions, a.minus_one_symbol, a.one_symbol) <
         std::tie(b.partitions, b.minus_one_symbol, b.one_symbol);
}

bool operator==(const ClassificationData& a, const ClassificationData& b) {
  return std::tie(a.group, a.semisimple, a.unipotent, a.central_sign, a.extension_signs) ==
         std::tie(b.group, b.semisimple, b.unipotent, b.central_sign, b.extension_signs);
}

bool operator<(const ClassificationData& a, const ClassificationData& b) {
  return std::tie(a.group, a.semisimple, a.unipotent, a.central_sign, a.extension_signs) <
         std::tie(b.group, b.semisimple, b.unipotent, b.central_sign, b.extension_signs);
}

GroupSpec semisimple_ambient(const GroupSpec& g) {
  switch (g.kind) {
    case GroupKind::Sp: return GroupSpec::so_odd(g.rank);
    case GroupKind::SOodd:
    case GroupKind::Oodd: return GroupSpec::sp(g.rank);
    case GroupKind::Oeven: return GroupSpec::so_even(g.rank, g.sign);
    default: break;
  }
  throw DomainError("no classification data for " + to_string(g));
}

GroupSpec minus_one_factor(const SemisimpleClass& s) {
  switch (s.ambient.kind) {
    case GroupKind::Sp: return GroupSpec::sp(s.ell);
    case GroupKind::SOodd:
    case GroupKind::SOeven: return GroupSpec::so_even(s.ell, s.minus_one_sign ? s.minus_one_sign : 1);
    default: break;
  }
  throw DomainError("minus_one_factor: bad ambient " + to_string(s.ambient));
}

GroupSpec one_factor(const SemisimpleClass& s) {
  switch (s.ambient.kind) {
    case GroupKind::Sp: return GroupSpec::sp(s.p);
    case GroupKind::SOodd: return GroupSpec::so_odd(s.p);
    case GroupKind::SOeven: return GroupSpec::so_even(s.p, s.one_sign ? s.one_sign : 1);
    default: break;
  }
  throw DomainError("one_factor: bad ambient " + to_string(s.ambient));
}

std::pair<int, int> extension_sign_count(const ClassificationData& d) {
  if (d.group.kind != GroupKind::Oeven || d.group.rank == 0) return {0, 0};
  const auto& s = d.semisimple;
  const int a = (s.p > 0 && !d.unipotent.one_symbol.degenerate()) ? 1 : 0;
  const int b = (s.ell > 0 && !d.unipotent.minus_one_symbol.degenerate()) ? 1 : 0;
  return {a, b};
}

void ClassificationData::validate() const {
  if (semisimple.ambient != semisimple_ambient(group))
    throw TypeMismatch("semisimple class in " + to_string(semisimple.ambient) + " does not fit " + to_string(group));
  semisimple.validate();
  const auto& u = unipotent;
  if (u.partitions.size() != semisimple.blocks.size())
    throw RankMismatch("unipotent datum needs one partition per generic block");
  for (std::size_t i = 0; i < u.partitions.size(); ++i)
    if (u.partitions[i].size() != semisimple.blocks[i].mult)
      throw RankMismatch("partition " + to_string(u.partitions[i]) + " does not match block multiplicity " +
                         std::to_string(semisimple.blocks[i].mult));
  check_symbol(u.minus_one_symbol, minus_one_factor(semisimple), "-1 eigenspace");
  check_symbol(u.one_symbol, one_factor(semisimple), "1 eigenspace");

  const bool want_central = group.kind == GroupKind::Sp && semisimple.ell > 0 && !u.minus_one_symbol.degenerate();
  if (want_central != central_sign.has_value())
    throw DomainError(want_central ? "central sign required" : "central sign not allowed here");
  if (central_sign && *central_sign != 1 && *central_sign != -1) throw DomainError("central sign must be ±1");

  std::size_t want_ext = 0;
  if (group.kind == GroupKind::Oodd) want_ext = 1;
  if (group.kind == GroupKind::Oeven) {
    const auto [a, b] = extension_sign_count(*this);
    want_ext = static_cast<std::size_t>(a + b);
  }
  if (extension_signs.size() != want_ext)
    throw DomainError("expected " + std::to_string(want_ext) + " extension sign(s), got " +
                      std::to_string(extension_signs.size()));
  for (int e : extension_signs)
    if (e != 1 && e != -1) throw DomainError("extension signs must be ±1");
}

QPolynomial irrep_dimension(const ClassificationData& d) {
  d.validate();
  if (is_trivial_oeven(d.group)) return QPolynomial(1);
  const auto& s = d.semisimple;
  const QPolynomial index =
      exact_div(order(s.ambient).prime_to_q, order(centralizer(s).shape).prime_to_q);
  QPolynomial u = symbol_generic_degree(d.unipotent.minus_one_symbol, minus_one_factor(s)) *
                  symbol_generic_degree(d.unipotent.one_symbol, one_factor(s));
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    const auto& ev = s.blocks[i].ev;
    u *= partition_generic_degree(d.unipotent.partitions[i], ev.torus_sign < 0, ev.r);
  }
  QPolynomial dim = index * u;
  switch (d.group.kind) {
    case GroupKind::Sp:
      if (d.central_sign) dim = dim.divide_scalar(2);
      break;
    case GroupKind::Oeven:
      dim = (dim * QPolynomial(2)).divide_scalar(mpz_class(1) << d.extension_signs.size());
      break;
    default: break;
  }
  return dim;
}

std::vector<ClassificationData> enumerate_irreps(const GroupSpec& g, int q0, const EnumerationBounds& bounds) {
  const GroupSpec amb = semisimple_ambient(g);
  std::vector<ClassificationData> out;
  if (is_trivial_oeven(g)) {
    check_bounds(0, q0, bounds);
    ClassificationData d;
    d.group = g;
    d.semisimple.ambient = amb;
    out.push_back(d);
    return out;
  }
  for (const auto& s : enumerate_semisimple_classes(amb, q0, bounds)) {
    std::vector<std::vector<Partition>> part_choices{{}};
    for (const auto& b : s.blocks) {
      std::vector<std::vector<Partition>> next;
      for (const auto& prefix : part_choices)
        for (const auto& p : enumerate_partitions(b.mult)) {
          next.push_back(prefix);
          next.back().push_back(p);
        }
      part_choices = std::move(next);
    }
    const GroupSpec fm = minus_one_factor(s);
    const GroupSpec f1 = one_factor(s);
    const auto minus_syms = enumerate_symbols(fm.rank, symbol_type_for(fm));
    const auto one_syms = enumerate_symbols(f1.rank, symbol_type_for(f1));
    for (const auto& parts : part_choices) {
      for (const auto& a : minus_syms) {
        for (const auto& b : one_syms) {
          ClassificationData d;
          d.group = g;
          d.semisimple = s;
          d.unipotent = {parts, a, b};
          switch (g.kind) {
            case GroupKind::Sp:
              if (s.ell > 0 && !a.degenerate()) {
                for (int cs : {1, -1}) {
                  d.central_sign = cs;
                  out.push_back(d);
                }
              } else {
                out.push_back(d);
              }
              break;
            case GroupKind::SOodd: out.push_back(d); break;
            case GroupKind::Oodd:
              for (int es : {1, -1}) {
                d.extension_signs = {es};
                out.push_back(d);
              }
              break;
            case GroupKind::Oeven: {
              const auto [ka, kb] = extension_sign_count(d);
              std::vector<std::vector<int>> tuples;
              std::vector<int> cur;
              sign_tuples(ka + kb, cur, tuples);
              for (auto& t : tuples) {
                d.extension_signs = t;
                out.push_back(d);
              }
              break;
            }
            default: break;
          }
        }
      }
    }
  }
  return out;
}

int n_rank(const QPolynomial& dim, int n) {
  if (n <= 0) throw DomainError("n_rank: n must be positive");
  if (dim.is_zero()) throw DomainError("n_rank: zero dimension");
  const int deg = q_degree(dim);
  return (deg + n - 1) / n;
}

nlohmann::json to_json(const ClassificationData& d) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : d.unipotent.partitions) parts.push_back(to_string(p));
  nlohmann::json j = {
      {"schema", "howe/1"},
      {"group", to_string(d.group)},
      {"semisimple", semisimple_to_json(d.semisimple)},
      {"unipotent",
       {{"partitions", parts},
        {"minus_one_symbol", to_string(d.unipotent.minus_one_symbol)},
        {"one_symbol", to_string(d.unipotent.one_symbol)}}},
      {"central_sign", nullptr},
      {"extension_signs", d.extension_signs},
  };
  if (d.central_sign) j["central_sign"] = *d.central_sign;
  return j;
}

ClassificationData classification_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("schema") && j.at("schema") != "howe/1")
      throw ParseError("unsupported schema " + j.at("schema").dump());
    ClassificationData d;
    d.group = parse_group(j.at("group").get<std::string>());
    d.semisimple = semisimple_from_json(j.at("semisimple"));
    const auto& u = j.at("unipotent");
    for (const auto& p : u.at("partitions")) d.unipotent.partitions.push_back(parse_partition(p.get<std::string>()));
    d.unipotent.minus_one_symbol = canonicalize(parse_symbol(u.at("minus_one_symbol").get<std::string>()));
    d.unipotent.one_symbol = canonicalize(parse_symbol(u.at("one_symbol").get<std::string>()));
    if (j.contains("central_sign") && !j.at("central_sign").is_null()) d.central_sign = j.at("central_sign").get<int>();
    if (j.contains("extension_signs")) d.extension_signs = j.at("extension_signs").get<std::vector<int>>();
    d.validate();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed classification datum: ") + e.what());
  }
}

std::string to_string(const ClassificationData& d) {
  std::string out = to_string(d.group) + " s=" + to_string(d.semisimple) + " u=";
  for (const auto& p : d.unipotent.partitions) out += to_string(p) + ";";
  out += to_string(d.unipotent.minus_one_symbol) + ";" + to_string(d.unipotent.one_symbol);
  if (d.central_sign) out += " central=" + sign_str(*d.central_sign);
  if (!d.extension_signs.empty()) {
    out += " ext=";
    for (int e : d.extension_signs) out += sign_str(e);
  }
  return out;
}

}  // namespace howe
