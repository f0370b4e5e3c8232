#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "howe/classify.hpp"
#include "howe/correspond.hpp"
#include "howe/errors.hpp"
#include "howe/identities.hpp"

using namespace howe;
using nlohmann::json;

namespace {

enum class Format { Text, Csv, Json };

struct Globals {
  Format format = Format::Text;
  std::optional<int> max_rank;

  EnumerationBounds bounds() const {
    EnumerationBounds b = EnumerationBounds::from_env();
    if (max_rank) b.max_rank = *max_rank;
    return b;
  }
};

// Verification failures exit with 1, bad input with 2.
constexpr int kFailed = 1;
constexpr int kInputError = 2;

void emit_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string signs_field(const ClassificationData& d) {
  std::string out;
  if (d.central_sign) out += std::string("central=") + (*d.central_sign > 0 ? "+" : "-");
  if (!d.extension_signs.empty()) {
    if (!out.empty()) out += " ";
    out += "ext=";
    for (int e : d.extension_signs) out += e > 0 ? "+" : "-";
  }
  return out;
}

std::string unipotent_field(const ClassificationData& d) {
  std::string out;
  for (const auto& p : d.unipotent.partitions) out += to_string(p) + " ";
  return out + to_string(d.unipotent.minus_one_symbol) + " " + to_string(d.unipotent.one_symbol);
}

ClassificationData read_datum(const std::string& path) {
  json j;
  try {
    if (path == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw ParseError("cannot open " + path);
      j = json::parse(in);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return classification_from_json(j);
}

json datum_with_dim(const ClassificationData& d, std::optional<int> q0) {
  json j = to_json(d);
  const QPolynomial dim = irrep_dimension(d);
  j["dim_poly"] = dim.to_string();
  if (q0) j["dim_at_q"] = eval_at(dim, *q0).get_str();
  return j;
}

int run_dim(const Globals& g, const std::string& input, std::optional<int> q0) {
  const ClassificationData d = read_datum(input);
  if (g.format == Format::Json) {
    std::cout << datum_with_dim(d, q0).dump(2) << "\n";
    return 0;
  }
  const QPolynomial dim = irrep_dimension(d);
  std::cout << "datum: " << to_string(d) << "\n";
  std::cout << "dim: " << dim.to_string() << "\n";
  if (q0) std::cout << "dim(q=" << *q0 << "): " << eval_at(dim, *q0).get_str() << "\n";
  return 0;
}

int run_enumerate(const Globals& g, const std::string& group, int q0) {
  const GroupSpec G = parse_group(group);
  const auto irreps = enumerate_irreps(G, q0, g.bounds());
  if (g.format == Format::Json) {
    json rows = json::array();
    for (const auto& d : irreps) rows.push_back(datum_with_dim(d, q0));
    std::cout << json{{"schema", "howe/1"}, {"group", to_string(G)}, {"q", q0}, {"irreps", rows}}.dump(2) << "\n";
    return 0;
  }
  if (g.format == Format::Csv) std::cout << "group,semisimple,unipotent,signs,dim_poly,dim_at_q\n";
  std::size_t i = 0;
  for (const auto& d : irreps) {
    const QPolynomial dim = irrep_dimension(d);
    const std::string at = eval_at(dim, q0).get_str();
    if (g.format == Format::Csv) {
      std::cout << csv_field(to_string(d.group)) << "," << csv_field(to_string(d.semisimple)) << ","
                << csv_field(unipotent_field(d)) << "," << csv_field(signs_field(d)) << "," << csv_field(dim.to_string())
                << "," << at << "\n";
    } else {
      std::cout << ++i << "  " << to_string(d) << "  dim = " << dim.to_string() << " = " << at << "\n";
    }
  }
  if (g.format == Format::Text) std::cout << irreps.size() << " irreducible representations\n";
  return 0;
}

int run_transfer(const Globals& g, bool is_phi, const std::string& pair_text, const std::string& input, bool all,
                 int q0) {
  const DualPairSpec pair = parse_pair(pair_text);
  auto apply = [&](const ClassificationData& d) { return is_phi ? phi(pair, d, q0) : psi(pair, d, q0); };
  if (!all) {
    if (input.empty()) throw ParseError("either --input or --all is required");
    const ClassificationData img = apply(read_datum(input));
    if (g.format == Format::Text) {
      const QPolynomial dim = irrep_dimension(img);
      std::cout << "image: " << to_string(img) << "\n";
      std::cout << "dim: " << dim.to_string() << "\n";
      std::cout << "dim(q=" << q0 << "): " << eval_at(dim, q0).get_str() << "\n";
    } else {
      std::cout << datum_with_dim(img, q0).dump(2) << "\n";
    }
    return 0;
  }
  const GroupSpec source = is_phi ? pair.W : pair.symplectic();
  const auto irreps = enumerate_irreps(source, q0, g.bounds());
  json rows = json::array();
  if (g.format == Format::Csv) std::cout << "source,source_dim,image,image_dim_poly,image_dim_at_q\n";
  for (const auto& d : irreps) {
    const ClassificationData img = apply(d);
    const QPolynomial sd = irrep_dimension(d);
    const QPolynomial id = irrep_dimension(img);
    if (g.format == Format::Csv) {
      std::cout << csv_field(to_string(d)) << "," << csv_field(sd.to_string()) << "," << csv_field(to_string(img)) << ","
                << csv_field(id.to_string()) << "," << eval_at(id, q0).get_str() << "\n";
    } else if (g.format == Format::Json) {
      rows.push_back({{"source", datum_with_dim(d, q0)}, {"image", datum_with_dim(img, q0)}});
    } else {
      std::cout << to_string(d) << "\n    -> " << to_string(img) << "\n    dim " << id.to_string() << "\n";
    }
  }
  if (g.format == Format::Json)
    std::cout << json{{"schema", "howe/1"}, {"pair", to_string(pair)}, {"q", q0}, {"rows", rows}}.dump(2) << "\n";
  return 0;
}

int run_verify(const Globals& g, const std::string& pair_text, int q0, bool full, const std::string& report_path) {
  const DualPairSpec pair = parse_pair(pair_text);
  const auto t0 = std::chrono::steady_clock::now();
  const CorrespondenceReport rep = verify_correspondence_identity(pair, q0, g.bounds());
  std::optional<DecompositionReport> dec;
  if (full) dec = verify_full_decomposition(pair, q0, g.bounds());
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = rep.equal && (!dec || dec->equal);

  json j = {{"schema", "howe/1"},
            {"pair", to_string(pair)},
            {"range", pair.range == StableRange::Symplectic ? "symplectic-stable" : "orthogonal-stable"},
            {"q", q0},
            {"lhs", rep.lhs.get_str()},
            {"rhs", rep.rhs.get_str()},
            {"equal", rep.equal},
            {"elapsed_seconds", elapsed}};
  if (dec)
    j["full_decomposition"] = {{"total", dec->total.get_str()}, {"expected", dec->expected.get_str()}, {"equal", dec->equal}};
  if (!report_path.empty()) {
    json rows = json::array();
    for (const auto& w : rep.witness_table)
      rows.push_back({{"source", w.source},
                      {"source_dim", w.source_dim.get_str()},
                      {"image_dim", w.image_dim.get_str()},
                      {"product", w.product.get_str()}});
    json full_report = j;
    full_report["witness"] = rows;
    std::ofstream out(report_path);
    if (!out) throw ParseError("cannot write " + report_path);
    out << full_report.dump(2) << "\n";
  }
  if (g.format == Format::Json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "pair: " << to_string(pair) << " (" << j["range"].get<std::string>() << "), q = " << q0 << "\n";
    std::cout << "lhs = " << rep.lhs.get_str() << "\n";
    std::cout << "rhs = " << rep.rhs.get_str() << "\n";
    std::cout << "summands: " << rep.witness_table.size() << "\n";
    std::cout << "equal: " << (rep.equal ? "true" : "false") << "\n";
    if (dec) {
      std::cout << "full decomposition total = " << dec->total.get_str() << "\n";
      std::cout << "expected q^(N*n) = " << dec->expected.get_str() << "\n";
      std::cout << "full decomposition equal: " << (dec->equal ? "true" : "false") << "\n";
    }
  }
  return ok ? 0 : kFailed;
}

int run_identity(bool multinomial, bool top_dim, bool ratios, int m, int N, const std::string& W_text, bool perturb,
                 bool orthogonal) {
  if (!multinomial && !top_dim && !ratios) throw ParseError("choose --multinomial, --top-dim or --order-ratios");
  bool ok = true;
  if (multinomial) {
    const bool r = check_q_multinomial(m, perturb);
    std::cout << (r ? "OK" : "FAILED") << "\n";
    ok = ok && r;
  }
  if (top_dim) {
    if (W_text.empty()) throw ParseError("--top-dim needs --W");
    const GroupSpec W = parse_group(W_text);
    const TopDimReport r = orthogonal ? top_dim_orthogonal(N, W) : top_dim_symplectic(N, W);
    std::cout << "closed:    " << r.closed_form.to_string() << "\n";
    std::cout << "leveled:   " << r.leveled_form.to_string() << "\n";
    std::cout << "recursive: " << r.recursive_form.to_string() << "\n";
    for (std::size_t l = 0; l < r.per_level_terms.size(); ++l)
      std::cout << "  level " << l << ": " << r.per_level_terms[l].to_string() << "\n";
    std::cout << (r.consistent() ? "OK" : "FAILED") << "\n";
    ok = ok && r.consistent();
  }
  if (ratios) {
    const bool r = N >= m ? check_step2_order_ratio(N, m) && check_even_order_ratio(N, m, 1) &&
                                check_even_order_ratio(N, m, -1)
                          : check_x_ell_factorization(N, m);
    std::cout << "order ratios N=" << N << " m=" << m << ": " << (r ? "OK" : "FAILED") << "\n";
    ok = ok && r;
  }
  return ok ? 0 : kFailed;
}

int run_symbols(const Globals& g, int rank, const std::string& type_text, std::optional<int> q0) {
  const SymbolType t = parse_symbol_type(type_text);
  const GroupSpec ambient = t == SymbolType::BC ? GroupSpec::sp(rank)
                                                : GroupSpec::so_even(rank, t == SymbolType::D ? 1 : -1);
  const auto syms = enumerate_symbols(rank, t);
  if (g.format == Format::Csv) std::cout << "symbol,rank,defect,degenerate,degree,degree_at_q\n";
  json rows = json::array();
  for (const auto& s : syms) {
    const auto inv = symbol_invariants(s);
    const QPolynomial deg = symbol_generic_degree(s, ambient);
    const std::string at = q0 ? eval_at(deg, *q0).get_str() : "";
    if (g.format == Format::Csv) {
      std::cout << csv_field(to_string(s)) << "," << inv.rank << "," << inv.defect << "," << inv.degenerate << ","
                << csv_field(deg.to_string()) << "," << at << "\n";
    } else if (g.format == Format::Json) {
      json r = {{"symbol", to_string(s)}, {"rank", inv.rank}, {"defect", inv.defect},
                {"degenerate", inv.degenerate}, {"degree", deg.to_string()}};
      if (q0) r["degree_at_q"] = at;
      rows.push_back(r);
    } else {
      std::cout << to_string(s) << "  defect " << inv.defect << (inv.degenerate ? "  degenerate" : "") << "  degree "
                << deg.to_string() << (q0 ? " = " + at : "") << "\n";
    }
  }
  if (g.format == Format::Json) std::cout << rows.dump(2) << "\n";
  return 0;
}

int run_orders(const Globals& g, const std::string& group, std::optional<int> q0) {
  const GroupSpec G = parse_group(group);
  const GroupOrder o = order(G);
  std::string factored;
  for (const auto& f : prime_to_q_factors(G)) {
    const bool constant = f.degree() <= 0;
    factored += constant ? f.to_string() : "(" + f.to_string() + ")";
  }
  if (factored.empty()) factored = "1";
  json quotients = json::array();
  if (G.kind != GroupKind::GLU && G.kind != GroupKind::Product)
    for (int k = 0; k <= G.witt_index(); ++k) quotients.push_back(isotropic_parabolic_quotient_order(G, k).to_string());

  if (g.format == Format::Json) {
    json j = {{"group", to_string(G)},
              {"q_exponent", o.q_exponent},
              {"prime_to_q", factored},
              {"prime_to_q_expanded", o.prime_to_q.to_string()},
              {"parabolic_quotients", quotients}};
    if (q0) j["order_at_q"] = eval_at(o.full(), *q0).get_str();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "group: " << to_string(G) << "\n";
  std::cout << "q-exponent: " << o.q_exponent << "\n";
  std::cout << "prime-to-q: " << factored << "\n";
  std::cout << "expanded: " << o.prime_to_q.to_string() << "\n";
  if (q0) std::cout << "order(q=" << *q0 << "): " << eval_at(o.full(), *q0).get_str() << "\n";
  for (std::size_t k = 0; k < quotients.size(); ++k)
    std::cout << "|G/P_" << k << "| = " << quotients[k].get<std::string>() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"howe: classification data, dimensions and eta/zeta correspondences for finite Sp and O"};
  app.require_subcommand(1);
  Globals g;
  std::string format = "text";
  int max_rank = 0;
  app.add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--max-rank", max_rank, "enumeration rank bound (overrides HOWE_MAX_RANK)");
  app.fallthrough();

  std::optional<int> q_opt;
  int q_req = 3;
  std::string input, group, pair, report, W_text, type_text = "BC";
  bool all = false, full = false, multinomial = false, top_dim = false, ratios = false, perturb = false,
       orthogonal = false;
  int m = 1, N = 1, rank = 1;

  auto* dim = app.add_subcommand("dim", "dimension of a classification datum");
  dim->add_option("--input", input, "datum JSON file, - for stdin")->required();
  dim->add_option("--q", q_opt, "evaluate at this q");

  auto* en = app.add_subcommand("enumerate", "list all irreducible representations at a numeric q");
  en->add_option("group", group, "e.g. Sp(4), SO(5), O(3,disc=-1), O+(4)")->required();
  en->add_option("--q", q_req, "odd prime power")->required();

  auto* ph = app.add_subcommand("phi", "eta correspondence O(W) -> Sp(2N), symplectic-stable range");
  auto* ps = app.add_subcommand("psi", "zeta correspondence Sp(2N) -> O(W), orthogonal-stable range");
  for (auto* sub : {ph, ps}) {
    sub->add_option("--pair", pair, "e.g. Sp(6):O(3,disc=+1)")->required();
    sub->add_option("--input", input, "datum JSON file, - for stdin");
    sub->add_flag("--all", all, "apply to every irreducible representation of the source group");
    sub->add_option("--q", q_req, "odd prime power fixing the sign eps(s) (default 3)");
  }

  auto* ve = app.add_subcommand("verify", "check the top-part dimension identity by enumeration");
  ve->add_option("--pair", pair, "e.g. Sp(2):O(5,disc=+1)")->required();
  ve->add_option("--q", q_req, "odd prime power")->required();
  ve->add_flag("--full", full, "also check the full parabolic decomposition");
  ve->add_option("--report", report, "write a JSON report with every summand");

  auto* id = app.add_subcommand("identity", "symbolic identity checks");
  id->add_flag("--multinomial", multinomial, "q-multinomial identities");
  id->add_flag("--top-dim", top_dim, "closed, leveled and recursive top-part forms");
  id->add_flag("--order-ratios", ratios, "order-ratio identities behind the leveled terms");
  id->add_flag("--perturb", perturb, "negative control for --multinomial");
  id->add_flag("--orthogonal", orthogonal, "use the orthogonal-stable top-part forms");
  id->add_option("--m", m, "rank m");
  id->add_option("--N", N, "symplectic half-rank N");
  id->add_option("--W", W_text, "orthogonal space, e.g. O(5) or O-(4)");

  auto* sy = app.add_subcommand("symbols", "list Lusztig symbols of a rank and type");
  sy->add_option("--rank", rank, "rank")->required();
  sy->add_option("--type", type_text, "BC, D or 2D");
  sy->add_option("--q", q_opt, "evaluate degrees at this q");

  auto* orr = app.add_subcommand("orders", "group order and isotropic parabolic quotients");
  orr->add_option("group", group, "group name")->required();
  orr->add_option("--q", q_opt, "evaluate at this q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("ParseError", e.what());
    return kInputError;
  }

  g.format = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Text;
  if (max_rank > 0) g.max_rank = max_rank;

  try {
    if (*dim) return run_dim(g, input, q_opt);
    if (*en) return run_enumerate(g, group, q_req);
    if (*ph) return run_transfer(g, true, pair, input, all, q_req);
    if (*ps) return run_transfer(g, false, pair, input, all, q_req);
    if (*ve) return run_verify(g, pair, q_req, full, report);
    if (*id) return run_identity(multinomial, top_dim, ratios, m, N, W_text, perturb, orthogonal);
    if (*sy) return run_symbols(g, rank, type_text, q_opt);
    if (*orr) return run_orders(g, group, q_opt);
  } catch (const Error& e) {
    emit_error(e.kind(), e.what());
    return kInputError;
  } catch (const std::exception& e) {
    emit_error("InternalError", e.what());
    return kInputError;
  }
  return kInputError;
}
