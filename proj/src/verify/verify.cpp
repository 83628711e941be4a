#include "greenfn/verify.hpp"

#include <json.hpp>

#include "greenfn/errors.hpp"
#include "greenfn/gelfand_graev.hpp"
#include "greenfn/phi_format.hpp"

namespace greenfn {

namespace {

bool is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Rational at(const RatFunc& r, int q) {
  const CycQ x = r.eval(CycQ(q));
  if (!x.is_rational()) throw InvariantError("non-rational value " + r.str());
  return x.rational();
}

}  // namespace

bool OracleReport::pass() const {
  if (!certified) return false;
  for (const auto& e : entries)
    if (e.symbolic != e.counted) return false;
  return true;
}

std::optional<std::vector<int>> split_composition(const SpringerTable& G, const SpringerTable& L) {
  const auto& simple = G.group.all_simple();
  if (G.levi.K.size() != simple.size() || !is_identity(L.levi.sigma)) return std::nullopt;
  const std::string& name = G.group.name;
  if (name.rfind("GL", 0) != 0) return std::nullopt;
  std::vector<bool> in(G.group.rank, false);
  for (int k : L.levi.K) in.at(k) = true;
  std::vector<int> comp{1};
  for (int i = 0; i + 1 < G.group.rank; ++i) {
    if (in[i])
      ++comp.back();
    else
      comp.push_back(1);
  }
  return comp;
}

LawCheck orthogonality_check(const SpringerTable& T) {
  LawCheck out{"orthogonality", true, ""};
  const auto sols = solve_all(T);
  int pairs = 0;
  for (size_t b1 = 0; b1 < sols.size(); ++b1) {
    const TwistedCoset& W1 = T.blocks[b1].relative;
    const ClassFunction Z = torus_weight(T, static_cast<int>(b1));
    for (int w = 0; w < W1.num_classes(); ++w) {
      const auto Qw = one_var_green(T, sols[b1], w);
      for (size_t b2 = 0; b2 < sols.size(); ++b2)
        for (int v = 0; v < T.blocks[b2].relative.num_classes(); ++v) {
          const auto Qv = one_var_green(T, sols[b2], v);
          RatFunc sum;
          for (size_t c = 0; c < T.classes.size(); ++c)
            for (int a = 0; a < T.classes[c].num_f_classes(); ++a)
              sum += RatFunc(Qw[c][a] * Qv[c][a].conjugate(), T.centralizer_order(static_cast<int>(c), a));
          const RatFunc expected = (b1 == b2 && w == v) ? RatFunc(W1.centralizer_order(w)) / Z[w] : RatFunc(0);
          ++pairs;
          if (!(sum == expected)) {
            out.pass = false;
            out.detail = T.levi.name + " blocks " + T.blocks[b1].name + "/" + T.blocks[b2].name + " classes " +
                         std::to_string(w) + "," + std::to_string(v) + ": " + format_phi(sum) + " vs " +
                         format_phi(expected);
            return out;
          }
        }
    }
  }
  out.detail = std::to_string(pairs) + " pairs";
  return out;
}

LawCheck green_polynomial_check(int n) {
  LawCheck out{"green-polynomials GL" + std::to_string(n), true, ""};
  const SpringerTable T = gl_springer(n);
  const BlockSolution s = lusztig_shoji_solve(T, 0);
  const TwistedCoset& W = T.blocks[0].relative;
  const auto chains = T.group.components(T.group.all_simple());
  int checked = 0;
  for (int c = 0; c < W.num_classes(); ++c) {
    Partition rho(n, 1);
    if (!chains.empty()) rho = cycle_type(chain_point_permutation(T.group, chains[0], W.representative(c)));
    const auto Q = one_var_green(T, s, c);
    for (size_t u = 0; u < T.classes.size(); ++u) {
      const Partition lambda = parse_partition(T.classes[u].label);
      const QPoly expected = green_polynomial(lambda, rho);
      ++checked;
      if (!(Q[u][0] == expected)) {
        out.pass = false;
        out.detail = "class " + T.classes[u].label + ", torus " + partition_label(rho) + ": " + Q[u][0].str() +
                     " vs " + expected.str();
        return out;
      }
    }
  }
  out.detail = std::to_string(checked) + " values";
  return out;
}

OracleReport oracle_compare(const TwoVarEngine& engine, const FiniteGL& Gq) {
  const SpringerTable& G = engine.group();
  const SpringerTable& L = engine.levi();
  const auto comp = split_composition(G, L);
  if (!comp || G.group.rank != Gq.n()) throw DataError("oracle comparison needs a split Levi of GL" + std::to_string(Gq.n()));
  OracleReport rep;
  rep.group = G.levi.name;
  rep.levi = L.levi.name;
  rep.q = Gq.q();
  for (const auto& uc : f_classes(G)) {
    const auto u = Gq.jordan_element({Gq.n()}, {parse_partition(uc.label)});
    const HcRow row = hc_two_var_row(Gq, *comp, u);
    if (!row.certified) {
      rep.certified = false;
      rep.detail = "u=" + uc.label + ": " + row.detail;
    }
    for (const auto& vc : f_classes(L)) {
      auto it = row.values.find(vc.label);
      if (it == row.values.end()) throw InvariantError("oracle has no class " + vc.label + " in " + L.levi.name);
      rep.entries.push_back({uc.label, vc.label, at(engine.blocksum(uc.f, vc.f), Gq.q()), it->second});
    }
  }
  return rep;
}

std::string oracle_report_json(const std::vector<OracleReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["group"] = r.group;
    j["levi"] = r.levi;
    j["q"] = r.q;
    j["certified"] = r.certified;
    if (!r.detail.empty()) j["detail"] = r.detail;
    j["pass"] = r.pass();
    j["entries"] = nlohmann::json::array();
    for (const auto& e : r.entries)
      j["entries"].push_back({{"u", e.u},
                              {"v", e.v},
                              {"symbolic", e.symbolic.get_str()},
                              {"counted", e.counted.get_str()},
                              {"match", e.symbolic == e.counted}});
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

std::vector<LawCheck> gelfand_graev_checks(const SpringerTable& G) {
  LawCheck whole{"gg-specialization", true, ""};
  for (size_t b = 0; b < G.blocks.size() && whole.pass; ++b) {
    const int iota = regular_system(G, static_cast<int>(b));
    const QPoly a = induced_gg_norm(G.levi, G, iota), c = gg_norm(G, iota);
    if (!(a == c)) {
      whole.pass = false;
      whole.detail = "block " + G.blocks[b].name + ": " + format_phi(a) + " vs " + format_phi(c);
    }
  }
  LawCheck mackey{"cuspidal-mackey", true, ""};
  int tori = 0;
  for (const auto& M : all_levis(G.group)) {
    if (!M.K.empty()) continue;
    const SpringerTable T = levi_springer(G.group, M);
    const MackeyCheck m = cuspidal_mackey_check(G.levi, T, 0);
    ++tori;
    if (!m.equal) {
      mackey.pass = false;
      mackey.detail = M.name + ": " + format_phi(m.lhs) + ", " + format_phi(m.rhs) + ", " + format_phi(m.prop6);
      break;
    }
  }
  if (mackey.pass) mackey.detail = std::to_string(tori) + " tori";
  return {whole, mackey};
}

std::vector<LawCheck> run_suite(const SpringerTable& G, const SpringerTable& L, const std::string& suite) {
  const bool all = suite == "all";
  std::vector<LawCheck> out;
  if (all || suite == "orthogonality") {
    out.push_back(orthogonality_check(G));
    if (&G != &L) out.push_back(orthogonality_check(L));
  }
  if (all || suite == "laws" || suite == "integrality" || suite == "support" || suite == "regular") {
    const TwoVarEngine e(G, L);
    for (auto& law : table_laws(e, green_table(e)))
      if (all || suite == "laws" || law.name.find(suite) != std::string::npos) out.push_back(std::move(law));
  }
  if (all || suite == "gelfand-graev")
    for (auto& c : gelfand_graev_checks(G)) out.push_back(std::move(c));
  if (out.empty()) throw DataError("unknown suite " + suite);
  return out;
}

}  // namespace greenfn
