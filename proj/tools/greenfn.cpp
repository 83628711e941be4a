#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "greenfn/errors.hpp"
#include "greenfn/gelfand_graev.hpp"
#include "greenfn/phi_format.hpp"
#include "greenfn/verify.hpp"

using namespace greenfn;
using json = nlohmann::json;

namespace {

constexpr int kExitData = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitMismatch = 4;

struct Source {
  std::string group;
  std::string pack;
  std::string levi;
  std::string levi_pack;
  std::string residue;
  std::string output;
};

void add_source(CLI::App* cmd, Source& s, bool with_levi = true) {
  cmd->add_option("group", s.group, "Group type, e.g. GL3, or the name recorded in --pack");
  cmd->add_option("--pack", s.pack, "Pack document for the group");
  if (with_levi) {
    cmd->add_option("--levi", s.levi, "Levi subgroup: T, GL2xGL1, GL2(q^2), {1,3}, ...");
    cmd->add_option("--levi-pack", s.levi_pack, "Pack document for the Levi subgroup");
  }
  cmd->add_option("--residue", s.residue, "Congruence on q recorded with the output, e.g. q=-1mod3");
  cmd->add_option("-o,--output", s.output, "Output file (default: standard output)");
}

SpringerTable group_table(const Source& s) {
  SpringerTable T;
  if (!s.pack.empty()) {
    T = load_pack_file(s.pack);
  } else {
    if (s.group.empty()) throw DataError("a group type or --pack is required");
    const RootDatumF R = make_root_datum(s.group);
    T = levi_springer(R, whole_group(R));
  }
  if (!s.residue.empty()) {
    set_residue(T.group, s.residue);
    T.residue = s.residue;
  }
  return T;
}

SpringerTable levi_table(const SpringerTable& G, const Source& s) {
  if (!s.levi_pack.empty()) return load_pack_file(s.levi_pack);
  if (s.levi.empty() || s.levi == "G") return G;
  return levi_springer(G.group, parse_levi(G.group, s.levi));
}

void emit(const Source& s, const std::string& text) {
  if (s.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(s.output);
  if (!out) throw DataError("cannot write " + s.output);
  out << text;
}

json checks_json(const std::vector<LawCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

bool all_pass(const std::vector<LawCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

int cmd_table(const Source& s, const std::string& format) {
  const SpringerTable G = group_table(s);
  const SpringerTable L = levi_table(G, s);
  const GreenTable t = green_table(TwoVarEngine(G, L));
  if (format == "csv")
    emit(s, render_csv(t));
  else if (format == "json")
    emit(s, render_json(t));
  else
    emit(s, render_phi(t));
  return 0;
}

SpringerTable levi_only(const Source& s, const RootDatumF& R) {
  if (!s.levi_pack.empty()) return load_pack_file(s.levi_pack);
  if (s.levi.empty()) throw DataError("--levi or --levi-pack is required");
  return levi_springer(R, parse_levi(R, s.levi));
}

int cmd_scalar(const Source& s, const std::string& kind, const std::string& system) {
  const bool relative = kind == "induced-gg" || kind == "mackey";
  SpringerTable H;
  if (relative) {
    H = s.pack.empty() ? levi_only(s, make_root_datum(s.group)) : levi_only(s, group_table(s).group);
    if (!s.residue.empty()) {
      set_residue(H.group, s.residue);
      H.residue = s.residue;
    }
  } else {
    H = group_table(s);
  }
  const LeviDatum whole = whole_group(H.group);
  int iota = regular_system(H, 0);
  if (!system.empty()) {
    iota = -1;
    for (size_t i = 0; i < H.systems.size(); ++i)
      if (H.systems[i].label(H.classes) == system) iota = static_cast<int>(i);
    if (iota < 0) throw DataError("no system " + system + " in " + H.levi.name);
  }
  json r;
  r["kind"] = kind;
  r["group"] = H.group.name;
  r["system"] = H.systems[iota].label(H.classes);
  r["assumptions"] = H.assumptions();
  json checks = json::array();
  bool ok = true;
  if (kind == "induced-gg") {
    r["levi"] = H.levi.name;
    r["formula"] = "|Z(L)/Z0(L)|^2 sum_w |Z0(L0)^{wF}| |W_G(L0)| / |W_L(L0)|^2 |(wF)^W_G cap W_L(L0)F| / |(wF)^W_G|";
    r["value"] = format_phi(induced_gg_norm(whole, H, iota));
  } else if (kind == "gg-norm") {
    const QPoly v = gg_norm(H, iota);
    r["formula"] = "|Z/Z0|^2 |Z0^F| q^{dim Z(L0) - dim Z}";
    r["value"] = format_phi(v);
    const QPoly sum = induced_gg_norm(whole, H, iota);
    checks.push_back({{"name", "induced-gg with L = G"}, {"value", format_phi(sum)}, {"pass", sum == v}});
    ok = ok && sum == v;
    if (split_composition(H, H) && H.group.rank <= 3)
      for (int q : {2, 3}) {
        const Rational counted = gelfand_graev_norm(FiniteGL(H.group.rank, q));
        const CycQ symbolic = v.eval(CycQ(q));
        const bool pass = symbolic == CycQ(counted);
        checks.push_back({{"name", "oracle q=" + std::to_string(q)}, {"value", counted.get_str()}, {"pass", pass}});
        ok = ok && pass;
      }
  } else if (kind == "y-norm") {
    r["formula"] = "q^{-rkss} |Z0^F|^-1";
    r["value"] = format_phi(y_norm(H, iota));
  } else if (kind == "mackey") {
    const MackeyCheck m = cuspidal_mackey_check(whole, H, iota);
    r["levi"] = H.levi.name;
    r["formula"] = "|Z(L)/Z0(L)|^2 |W_G(L)^F| |Z0(L)^F|";
    r["value"] = format_phi(m.lhs);
    checks.push_back({{"name", "mackey sum"}, {"value", format_phi(m.rhs)}, {"pass", m.lhs == m.rhs}});
    checks.push_back({{"name", "induced-gg"}, {"value", format_phi(m.prop6)}, {"pass", m.lhs == m.prop6}});
    ok = m.equal;
  } else {
    throw DataError("unknown kind " + kind);
  }
  r["checks"] = checks;
  emit(s, r.dump(2) + "\n");
  return ok ? 0 : kExitInvariant;
}

int cmd_verify(const Source& s, const std::string& suite) {
  const SpringerTable G = group_table(s);
  const SpringerTable L = levi_table(G, s);
  const auto checks = run_suite(G, L, suite);
  json r;
  r["group"] = G.levi.name;
  r["levi"] = L.levi.name;
  r["suite"] = suite;
  r["checks"] = checks_json(checks);
  r["pass"] = all_pass(checks);
  emit(s, r.dump(2) + "\n");
  return all_pass(checks) ? 0 : kExitInvariant;
}

int cmd_oracle_compare(const Source& s, const std::vector<int>& qs) {
  const SpringerTable G = group_table(s);
  std::vector<LeviDatum> levis;
  if (s.levi.empty())
    levis = all_levis(G.group);
  else
    levis.push_back(parse_levi(G.group, s.levi));
  std::vector<OracleReport> reports;
  for (int q : qs) {
    const FiniteGL Gq(G.group.rank, q);
    for (const auto& M : levis) {
      const SpringerTable L = levi_springer(G.group, M);
      if (!split_composition(G, L)) {
        if (!s.levi.empty()) throw DataError(M.name + " is not a split Levi subgroup");
        continue;
      }
      reports.push_back(oracle_compare(TwoVarEngine(G, L), Gq));
    }
  }
  emit(s, oracle_report_json(reports));
  for (const auto& r : reports)
    if (!r.pass()) return kExitInvariant;
  return 0;
}

int cmd_pack_validate(const std::string& file) {
  const SpringerTable T = load_pack_file(file);
  const auto sols = solve_all(T);
  const LawCheck orth = orthogonality_check(T);
  json r;
  r["file"] = file;
  r["group"] = T.levi.name;
  r["classes"] = T.classes.size();
  r["systems"] = T.systems.size();
  json blocks = json::array();
  for (const auto& s : sols) blocks.push_back(json::parse(solution_json(T, s)));
  r["blocks"] = blocks;
  r["assumptions"] = T.assumptions();
  r["checks"] = checks_json({orth});
  std::cout << r.dump(2) << "\n";
  return orth.pass ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green functions of finite reductive groups"};
  app.set_config("--config");
  app.require_subcommand(1);

  Source src;
  std::string format = "phi", kind, system, suite = "all", pack_file;
  std::vector<int> qs{2, 3};

  auto* table = app.add_subcommand("table", "Two-variable Green function table |v^{L^F}| Q^G_L(u,v)");
  add_source(table, src);
  table->add_option("--format", format, "phi, csv or json")->check(CLI::IsMember({"phi", "csv", "json"}));

  auto* scalar = app.add_subcommand("scalar", "Scalar products of Gelfand-Graev characters");
  add_source(scalar, src);
  scalar->add_option("--kind", kind, "induced-gg, gg-norm, y-norm or mackey")
      ->required()
      ->check(CLI::IsMember({"induced-gg", "gg-norm", "y-norm", "mackey"}));
  scalar->add_option("--system", system, "Regular-support local system (default: principal block)");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  add_source(verify, src);
  verify->add_option("--suite", suite, "all, orthogonality, laws, integrality, support, regular, gelfand-graev");

  auto* oracle = app.add_subcommand("oracle-compare", "Symbolic tables against brute-force counts in GL_n(F_q)");
  add_source(oracle, src);
  oracle->add_option("--q", qs, "Field sizes")->check(CLI::IsMember({2, 3}));

  auto* validate = app.add_subcommand("pack-validate", "Load a pack, solve every block, check orthogonality");
  validate->add_option("file", pack_file)->required();

  auto* exporter = app.add_subcommand("pack-export", "Write a built-in table as a pack document");
  add_source(exporter, src);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*table) return cmd_table(src, format);
    if (*scalar) return cmd_scalar(src, kind, system);
    if (*verify) return cmd_verify(src, suite);
    if (*oracle) return cmd_oracle_compare(src, qs);
    if (*validate) return cmd_pack_validate(pack_file);
    if (*exporter) {
      const SpringerTable G = group_table(src);
      emit(src, export_pack(levi_table(G, src)));
      return 0;
    }
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const CrossPathMismatch& e) {
    std::cerr << "cross-path mismatch: " << e.what() << "\n";
    return kExitMismatch;
  }
  return 0;
}
