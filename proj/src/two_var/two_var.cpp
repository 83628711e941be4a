#include "greenfn/two_var.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "greenfn/errors.hpp"
#include "greenfn/phi_format.hpp"

namespace greenfn {

namespace {

RatMatrix as_matrix(const std::vector<std::vector<QPoly>>& p) {
  RatMatrix m;
  for (const auto& row : p) m.emplace_back(row.begin(), row.end());
  return m;
}

bool integral_polynomial(const RatFunc& r) {
  return r.is_polynomial() && r.num().has_rational_coefficients() && r.num().has_integral_coefficients();
}

std::string pair_name(const std::vector<FClassLabel>& us, const std::vector<FClassLabel>& vs, size_t u, size_t v) {
  return "(u=" + us[u].label + ", v=" + vs[v].label + ")";
}

}  // namespace

std::vector<FClassLabel> f_classes(const SpringerTable& T) {
  std::vector<FClassLabel> out;
  for (int c = 0; c < static_cast<int>(T.classes.size()); ++c) {
    const UnipotentClass& C = T.classes[c];
    for (int a = 0; a < C.num_f_classes(); ++a)
      out.push_back({{c, a}, C.num_f_classes() == 1 ? C.label : C.label + "_(" + C.a_classes[a] + ")"});
  }
  return out;
}

long component_order(const SpringerTable& T, const FClass& u) {
  const UnipotentClass& C = T.classes.at(u.cls);
  return C.a_order / C.a_class_sizes.at(u.a);
}

TwoVarEngine::TwoVarEngine(const SpringerTable& G, const SpringerTable& L)
    : G_(G), L_(L), sol_g_(solve_all(G)), sol_l_(solve_all(L)) {
  for (int b = 0; b < static_cast<int>(L.blocks.size()); ++b) {
    const int g = matching_block(G, L, b);
    match_.push_back(g);
    const TwistedCoset& WL = L.blocks[b].relative;
    fusion_.push_back(class_fusion(WL, G.blocks[g].relative));
    ClassFunction w = torus_weight(L, b);
    for (int c = 0; c < WL.num_classes(); ++c) w[c] *= RatFunc(Rational(WL.class_size[c]) / Rational(WL.order()));
    weight_.push_back(std::move(w));
    std::vector<std::vector<std::vector<QPoly>>> qg, ql;
    for (int c = 0; c < WL.num_classes(); ++c) {
      qg.push_back(one_var_green(G, sol_g_[g], fusion_.back()[c]));
      ql.push_back(one_var_green(L, sol_l_[b], c));
    }
    green_g_.push_back(std::move(qg));
    green_l_.push_back(std::move(ql));
  }
  for (int b = 0; b < static_cast<int>(L.blocks.size()); ++b) rmats_.push_back(build_r_matrix(b));
}

RatFunc TwoVarEngine::blocksum(const FClass& u, const FClass& v) const {
  RatFunc sum;
  for (size_t b = 0; b < L_.blocks.size(); ++b) {
    for (size_t c = 0; c < weight_[b].size(); ++c) {
      const QPoly& qu = green_g_[b][c][u.cls][u.a];
      const QPoly& qv = green_l_[b][c][v.cls][v.a];
      if (qu.is_zero() || qv.is_zero()) continue;
      sum += RatFunc(qu.conjugate() * qv) * weight_[b][c];
    }
  }
  return sum / RatFunc(L_.order());
}

RatFunc TwoVarEngine::rmatrix(const FClass& u, const FClass& v) const {
  RatFunc sum;
  for (const RMatrix& rm : rmats_)
    for (size_t i = 0; i < rm.rows.size(); ++i) {
      const CycQ yu = G_.y_value(rm.rows[i], u.cls, u.a);
      if (yu.is_zero()) continue;
      for (size_t j = 0; j < rm.cols.size(); ++j) {
        const CycQ yv = L_.y_value(rm.cols[j], v.cls, v.a);
        if (!yv.is_zero() && !rm.Rt[i][j].is_zero()) sum += RatFunc(rm.Rt[i][j] * (yu.conjugate() * yv));
      }
    }
  return sum / (L_.class_size(v.cls, v.a) * RatFunc(component_order(L_, v)));
}

RMatrix TwoVarEngine::build_r_matrix(int b) const {
  const int g = match_[b];
  const BlockSolution& sg = sol_g_[g];
  const BlockSolution& sl = sol_l_[b];
  const Block& BL = L_.blocks[b];
  const TwistedCoset& WL = BL.relative;
  const TwistedCoset& WG = G_.blocks[g].relative;
  RMatrix rm;
  rm.block_l = b;
  rm.block_g = g;
  rm.rows = sg.basis;
  rm.cols = sl.basis;
  const size_t n = rm.rows.size(), m = rm.cols.size();
  auto gname = [&](size_t i) { return G_.systems[rm.rows[i]].label(G_.classes); };
  auto lname = [&](size_t j) { return L_.systems[rm.cols[j]].label(L_.classes); };

  std::vector<ClassFunction> phi;
  for (int s : rm.cols) phi.push_back(BL.characters.as_class_function(L_.systems[s].w_index));
  RatMatrix X(n, std::vector<RatFunc>(m)), M(m, std::vector<RatFunc>(m));
  for (size_t i = 0; i < n; ++i) {
    const ClassFunction res = restrict_function(WG, WL, sg.qt[i]);
    for (size_t k = 0; k < m; ++k) X[i][k] = inner_product(WL, res, phi[k]);
  }
  for (size_t j = 0; j < m; ++j)
    for (size_t k = 0; k < m; ++k) M[j][k] = inner_product(WL, sl.qt[j], phi[k]);
  rm.R = multiply(X, invert(M));

  std::vector<int> cg, cl;
  for (int s : rm.rows) cg.push_back(G_.systems[s].c);
  for (int s : rm.cols) cl.push_back(L_.systems[s].c);
  std::vector<int> neg_cl;
  for (int c : cl) neg_cl.push_back(-c);
  const RatMatrix lemma = multiply(
      multiply(multiply(multiply(as_matrix(sg.P), q_power_diagonal(cg)), induction_pairing(G_, L_, b)),
               q_power_diagonal(neg_cl)),
      invert(as_matrix(sl.P)));

  rm.Rt.assign(n, std::vector<QPoly>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      const RatFunc rt = rm.R[i][j].shift(cg[i] - cl[j]);
      if (!(rt == lemma[i][j]))
        throw CrossPathMismatch("Rt(" + gname(i) + ", " + lname(j) + ") is " + format_phi(rt) +
                                " by restriction but " + format_phi(lemma[i][j]) + " by P_G C_G I C_L^-1 P_L^-1");
      if (!integral_polynomial(rt))
        throw DataError("Rt(" + gname(i) + ", " + lname(j) + ") = " + format_phi(rt) + " is not in Z[q]");
      rm.Rt[i][j] = rt.as_polynomial();
      if (rm.Rt[i][j].is_zero()) continue;
      const int ci = G_.systems[rm.rows[i]].cls, cj = L_.systems[rm.cols[j]].cls;
      const auto sat = saturated_class(G_, L_, cj);
      const auto ind = induced_class(G_, L_, cj);
      if ((sat && !G_.in_closure(*sat, ci)) || (ind && !G_.in_closure(ci, *ind)))
        throw InvariantError("Rt(" + gname(i) + ", " + lname(j) + ") is nonzero outside the induction range");
    }
  return rm;
}

GreenTable green_table(const TwoVarEngine& engine) {
  const SpringerTable& G = engine.group();
  const SpringerTable& L = engine.levi();
  GreenTable t;
  t.group = G.levi.name;
  t.levi = L.levi.name;
  t.rows = f_classes(L);
  t.cols = f_classes(G);
  t.residue = G.residue.empty() ? L.residue : G.residue;
  std::set<std::string> seen;
  for (const auto* T : {&G, &L})
    for (const auto& a : T->assumptions())
      if (seen.insert(a).second) t.assumptions.push_back(a);
  if (levi_center(G.group, G.levi.K, G.levi.sigma).component_order > 1)
    t.assumptions.push_back("Z(G) is disconnected: the block-sum formula is proved for q large");
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const FClass& v = t.rows[r].f;
    const RatFunc vsize = L.class_size(v.cls, v.a);
    std::vector<RatFunc> vals;
    std::vector<QPoly> scaled;
    for (size_t c = 0; c < t.cols.size(); ++c) {
      const FClass& u = t.cols[c].f;
      const RatFunc a = engine.blocksum(u, v);
      const RatFunc b = engine.rmatrix(u, v);
      if (!(a == b))
        throw CrossPathMismatch("Q" + pair_name(t.cols, t.rows, c, r) + ": block sum " + format_phi(a) +
                                ", R-matrix " + format_phi(b));
      const RatFunc s = vsize * a;
      if (!integral_polynomial(s * RatFunc(component_order(L, v))))
        throw InvariantError("|v||A(v)|Q" + pair_name(t.cols, t.rows, c, r) + " = " +
                             format_phi(s * RatFunc(component_order(L, v))) + " is not in Z[q]");
      vals.push_back(a);
      scaled.push_back(s.as_polynomial());
    }
    t.values.push_back(std::move(vals));
    t.scaled.push_back(std::move(scaled));
  }
  return t;
}

std::vector<LawCheck> table_laws(const TwoVarEngine& engine, const GreenTable& t) {
  const SpringerTable& G = engine.group();
  const SpringerTable& L = engine.levi();
  std::vector<LawCheck> out;

  LawCheck reg{"regular-element", true, ""};
  for (size_t c = 0; c < t.cols.size() && reg.pass; ++c) {
    if (t.cols[c].f.cls != G.regular_class()) continue;
    int hits = 0;
    for (size_t r = 0; r < t.rows.size(); ++r) {
      if (t.scaled[r][c].is_zero()) continue;
      ++hits;
      if (t.rows[r].f.cls != L.regular_class() || !(t.scaled[r][c] == QPoly(1))) {
        reg.pass = false;
        reg.detail = "|v|Q" + pair_name(t.cols, t.rows, c, r) + " = " + format_phi(t.scaled[r][c]);
      }
    }
    if (reg.pass && hits != 1) {
      reg.pass = false;
      reg.detail = "u=" + t.cols[c].label + " meets " + std::to_string(hits) + " classes of L";
    }
  }
  out.push_back(reg);

  LawCheck integ{"integrality", true, ""};
  for (size_t r = 0; r < t.rows.size() && integ.pass; ++r)
    for (size_t c = 0; c < t.cols.size() && integ.pass; ++c) {
      const QPoly x = t.scaled[r][c] * CycQ(Rational(component_order(L, t.rows[r].f)));
      if (!x.has_rational_coefficients() || !x.has_integral_coefficients()) {
        integ.pass = false;
        integ.detail = "|v||A(v)|Q" + pair_name(t.cols, t.rows, c, r) + " = " + x.str();
      }
    }
  out.push_back(integ);

  LawCheck sup{"support", true, ""};
  int checked = 0;
  for (size_t r = 0; r < t.rows.size() && sup.pass; ++r) {
    const int vc = t.rows[r].f.cls;
    const auto sat = saturated_class(G, L, vc);
    const auto ind = induced_class(G, L, vc);
    if (!sat && !ind) continue;
    for (size_t c = 0; c < t.cols.size() && sup.pass; ++c) {
      ++checked;
      if (t.scaled[r][c].is_zero()) continue;
      const int uc = t.cols[c].f.cls;
      if ((sat && !G.in_closure(*sat, uc)) || (ind && !G.in_closure(uc, *ind))) {
        sup.pass = false;
        sup.detail = "nonzero entry" + pair_name(t.cols, t.rows, c, r) + " outside the induction range";
      }
    }
  }
  if (sup.pass) sup.detail = checked ? std::to_string(checked) + " entries" : "no induced-class map";
  out.push_back(sup);
  return out;
}

std::string render_csv(const GreenTable& t) {
  std::ostringstream os;
  for (const auto& a : t.assumptions) os << "# assumption: " << a << "\n";
  os << "\"v\\u\"";
  for (const auto& c : t.cols) os << ",\"" << c.label << "\"";
  os << "\n";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    os << "\"" << t.rows[r].label << "\"";
    for (const auto& x : t.scaled[r]) os << "," << x.str();
    os << "\n";
  }
  return os.str();
}

std::string render_json(const GreenTable& t) {
  nlohmann::json j;
  j["group"] = t.group;
  j["levi"] = t.levi;
  j["residue"] = t.residue;
  j["assumptions"] = t.assumptions;
  j["quantity"] = "|v^{L^F}| Q^G_L(u,v)";
  std::vector<std::string> rows, cols;
  for (const auto& r : t.rows) rows.push_back(r.label);
  for (const auto& c : t.cols) cols.push_back(c.label);
  j["rows"] = rows;
  j["cols"] = cols;
  j["values"] = nlohmann::json::array();
  for (const auto& row : t.scaled) {
    std::vector<std::string> cells;
    for (const auto& x : row) cells.push_back(format_phi(x));
    j["values"].push_back(cells);
  }
  return j.dump(2) + "\n";
}

std::string render_phi(const GreenTable& t) {
  std::ostringstream os;
  os << "# |v^{L^F}| Q^G_L(u,v), G = " << t.group << ", L = " << t.levi << "\n";
  for (const auto& a : t.assumptions) os << "# assumption: " << a << "\n";
  os << "v\\u";
  for (const auto& c : t.cols) os << " & " << c.label;
  os << "\n";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    os << t.rows[r].label;
    for (const auto& x : t.scaled[r]) os << " & " << format_phi(x);
    os << "\n";
  }
  return os.str();
}

}  // namespace greenfn
