#pragma once

#include <string>
#include <vector>

#include "greenfn/green.hpp"

namespace greenfn {

/// An F-class u_a of unipotent elements: class index and A(u)-class index.
struct FClass {
  int cls = 0;
  int a = 0;
};

/// Restriction coefficients between a block I of L and the block I_G of G:
/// Res Qt_iota = sum_gamma R[iota][gamma] Qt_gamma, and
/// Rt[iota][gamma] = q^{c_iota - c_gamma} R[iota][gamma] in Z[q].
struct RMatrix {
  int block_l = 0;
  int block_g = 0;
  std::vector<int> rows;  // systems of G, solver order
  std::vector<int> cols;  // systems of L, solver order
  RatMatrix R;
  std::vector<std::vector<QPoly>> Rt;
};

/// Two evaluators of Q^G_L(u, v) sharing the solved blocks of G and L.
class TwoVarEngine {
 public:
  /// Solves every block of G and L and matches blocks by cuspidal datum.
  TwoVarEngine(const SpringerTable& G, const SpringerTable& L);

  const SpringerTable& group() const { return G_; }
  const SpringerTable& levi() const { return L_; }

  /// |L^F|^-1 sum_I sum_{w in W_L(L0)F} |Z0(L0)^{wF}|/|W_L(L0)| conj(Q^{G,I_G}_{wF}(u)) Q^{L,I}_{wF}(v).
  RatFunc blocksum(const FClass& u, const FClass& v) const;

  /// |v^{L^F}|^-1 |A(v)^F|^-1 sum_I sum_{iota,gamma} conj(Y_iota(u)) Y_gamma(v) Rt[iota][gamma].
  RatFunc rmatrix(const FClass& u, const FClass& v) const;

  /// Checked against P_G C_G I C_L^-1 P_L^-1 (CrossPathMismatch), integrality
  /// (DataError) and the support condition (InvariantError) on construction.
  const RMatrix& r_matrix(int block_l) const { return rmats_.at(block_l); }

 private:
  RMatrix build_r_matrix(int b) const;

  const SpringerTable& G_;
  const SpringerTable& L_;
  std::vector<BlockSolution> sol_g_, sol_l_;
  std::vector<int> match_;
  // Per block of L: fusion of relative classes into the G block, and the
  // Green functions Q^{G,I_G}_{wF}, Q^{L,I}_{wF} indexed [class of W_L(L0)F][cls][a].
  std::vector<std::vector<int>> fusion_;
  std::vector<ClassFunction> weight_;  // |class| |Z0(L0)^{wF}| / |W_L(L0)|
  std::vector<std::vector<std::vector<std::vector<QPoly>>>> green_g_, green_l_;
  std::vector<RMatrix> rmats_;
};

struct FClassLabel {
  FClass f;
  std::string label;  // "3,3" or "3,3_(E(3))"
};

std::vector<FClassLabel> f_classes(const SpringerTable& T);

/// |A(u_a)^F| = |C_{A(u)}(a)|.
long component_order(const SpringerTable& T, const FClass& u);

/// Rows: F-classes of L; columns: F-classes of G. Every entry is computed
/// by both evaluators and must agree (CrossPathMismatch naming the pair);
/// |v^{L^F}| |A(v)^F| Q must lie in Z[q] (InvariantError).
struct GreenTable {
  std::string group;
  std::string levi;
  std::vector<FClassLabel> rows;
  std::vector<FClassLabel> cols;
  std::vector<std::vector<RatFunc>> values;  // Q^G_L(u, v), [row][col]
  std::vector<std::vector<QPoly>> scaled;    // |v^{L^F}| Q^G_L(u, v)
  std::string residue;
  std::vector<std::string> assumptions;
};

GreenTable green_table(const TwoVarEngine& engine);

/// Named pass/fail result with a counterexample on failure.
struct LawCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Regular-element law, integrality with the |A(v)| denominators, and the
/// support law wherever induced and saturated classes are known.
std::vector<LawCheck> table_laws(const TwoVarEngine& engine, const GreenTable& t);

std::string render_csv(const GreenTable& t);
std::string render_json(const GreenTable& t);
/// Table 1 layout: header "v\u" row then one line per F-class of L.
std::string render_phi(const GreenTable& t);

}  // namespace greenfn
