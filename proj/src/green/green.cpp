#include "greenfn/green.hpp"

#include <json.hpp>

#include "greenfn/errors.hpp"
#include "greenfn/phi_format.hpp"

namespace greenfn {

ClassFunction torus_weight(const SpringerTable& T, int block) {
  const Block& B = T.blocks.at(block);
  ClassFunction z;
  for (int c = 0; c < B.relative.num_classes(); ++c)
    z.emplace_back(torus_order(T.group, B.cuspidal_levi.K, B.relative.representative(c)));
  return z;
}

RatMatrix target_gram(const SpringerTable& T, int block) {
  const auto& basis = T.blocks.at(block).systems;
  const size_t n = basis.size();
  RatMatrix L(n, std::vector<RatFunc>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const LocalSystem& si = T.systems[basis[i]];
      const LocalSystem& sj = T.systems[basis[j]];
      if (si.cls != sj.cls) continue;
      const UnipotentClass& C = T.classes[si.cls];
      RatFunc sum;
      for (int a = 0; a < C.num_f_classes(); ++a) {
        const CycQ y = T.y_value(basis[i], si.cls, a) * T.y_value(basis[j], si.cls, a).conjugate();
        if (y.is_zero()) continue;
        sum += RatFunc(C.c0_order[a] * (y * CycQ(Rational(C.a_class_sizes[a]))));
      }
      L[i][j] = (sum / RatFunc(C.a_order)).shift(-2 * si.c);
    }
  return L;
}

BlockSolution lusztig_shoji_solve(const SpringerTable& T, int block) {
  const Block& B = T.blocks.at(block);
  const TwistedCoset& W = B.relative;
  BlockSolution sol;
  sol.block = block;
  sol.basis = B.systems;
  const size_t n = sol.basis.size();
  const ClassFunction Z = torus_weight(T, block);
  sol.Lambda = target_gram(T, block);
  auto sys = [&](size_t i) -> const LocalSystem& { return T.systems[sol.basis[i]]; };
  auto name = [&](size_t i) { return sys(i).label(T.classes); };

  std::vector<ClassFunction> phi;
  for (size_t i = 0; i < n; ++i) phi.push_back(B.characters.as_class_function(sys(i).w_index));

  // Groups of equal support, contiguous in solver order.
  std::vector<std::pair<size_t, size_t>> groups;
  for (size_t i = 0; i < n; ++i) {
    if (i == 0 || sys(i).cls != sys(i - 1).cls) groups.emplace_back(i, i);
    groups.back().second = i + 1;
  }

  sol.qt.resize(n);
  for (size_t g = 0; g < groups.size(); ++g) {
    for (size_t i = groups[g].first; i < groups[g].second; ++i) {
      ClassFunction f = phi[i];
      for (size_t h = 0; h < g; ++h) {
        const auto [lo, hi] = groups[h];
        RatMatrix lam;
        std::vector<RatFunc> r;
        for (size_t k = lo; k < hi; ++k) {
          lam.emplace_back(sol.Lambda[k].begin() + lo, sol.Lambda[k].begin() + hi);
          r.push_back(weighted_pairing(W, phi[i], sol.qt[k], Z));
        }
        bool zero = true;
        for (const auto& x : r) zero = zero && x.is_zero();
        if (zero) continue;
        std::vector<RatFunc> y;
        try {
          y = solve_left(lam, r);
        } catch (const InvariantError&) {
          throw DataError("target Gram matrix is singular on the support of " + name(lo));
        }
        for (size_t k = lo; k < hi; ++k)
          for (size_t c = 0; c < f.size(); ++c) f[c] -= y[k - lo] * sol.qt[k][c];
      }
      sol.qt[i] = std::move(f);
    }
    // The Gram matrix of the new group must be the target.
    for (size_t i = groups[g].first; i < groups[g].second; ++i)
      for (size_t j = groups[g].first; j < groups[g].second; ++j) {
        const RatFunc got = weighted_pairing(W, sol.qt[i], sol.qt[j], Z);
        if (!(got == sol.Lambda[i][j]))
          throw DataError("Gram entry (" + name(i) + ", " + name(j) + ") is " + format_phi(got) +
                          " but the class data give " + format_phi(sol.Lambda[i][j]));
      }
  }

  sol.P.assign(n, std::vector<QPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      const RatFunc v = inner_product(W, sol.qt[i], phi[k]).shift(sys(i).c - sys(k).c);
      if (!v.is_polynomial() || !v.num().has_integral_coefficients())
        throw DataError("P entry (" + name(i) + ", " + name(k) + ") = " + format_phi(v) + " is not in Z[q]");
      sol.P[i][k] = v.as_polynomial();
      const bool same = sys(i).cls == sys(k).cls;
      if (same && !(sol.P[i][k] == QPoly(i == k ? 1 : 0)))
        throw InvariantError("P is not the identity on the support of " + name(i));
      if (!same && !sol.P[i][k].is_zero() && !T.in_closure(sys(i).cls, sys(k).cls))
        throw InvariantError("P entry (" + name(i) + ", " + name(k) + ") violates the closure order");
    }
  return sol;
}

std::vector<BlockSolution> solve_all(const SpringerTable& T) {
  std::vector<BlockSolution> out;
  for (size_t b = 0; b < T.blocks.size(); ++b) out.push_back(lusztig_shoji_solve(T, static_cast<int>(b)));
  return out;
}

std::vector<std::vector<QPoly>> one_var_green(const SpringerTable& T, const BlockSolution& sol, int w_class) {
  std::vector<std::vector<QPoly>> out;
  for (int cls = 0; cls < static_cast<int>(T.classes.size()); ++cls) {
    std::vector<QPoly> row;
    for (int a = 0; a < T.classes[cls].num_f_classes(); ++a) {
      RatFunc v;
      for (size_t i = 0; i < sol.basis.size(); ++i) {
        const CycQ y = T.y_value(sol.basis[i], cls, a);
        if (!y.is_zero()) v += (sol.qt[i].at(w_class) * RatFunc(y)).shift(T.systems[sol.basis[i]].c);
      }
      if (!v.is_polynomial()) throw InvariantError("Green function value is not a polynomial: " + v.str());
      row.push_back(v.as_polynomial());
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string solution_json(const SpringerTable& T, const BlockSolution& sol) {
  nlohmann::json j;
  j["block"] = T.blocks.at(sol.block).name;
  std::vector<std::string> labels;
  for (int s : sol.basis) labels.push_back(T.systems[s].label(T.classes));
  j["basis"] = labels;
  j["P"] = nlohmann::json::array();
  j["Lambda"] = nlohmann::json::array();
  for (size_t i = 0; i < sol.basis.size(); ++i) {
    std::vector<std::string> prow, lrow;
    for (size_t k = 0; k < sol.basis.size(); ++k) {
      prow.push_back(format_phi(sol.P[i][k]));
      lrow.push_back(format_phi(sol.Lambda[i][k]));
    }
    j["P"].push_back(prow);
    j["Lambda"].push_back(lrow);
  }
  return j.dump(2) + "\n";
}

}  // namespace greenfn
