#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greenfn/oracle.hpp"
#include "greenfn/two_var.hpp"

namespace greenfn {

/// Block sizes of a split Levi of GL_n, in diagonal order; nullopt otherwise.
std::optional<std::vector<int>> split_composition(const SpringerTable& G, const SpringerTable& L);

/// One-variable orthogonality within and across blocks:
/// sum_u |C(u)^F|^-1 Q_w(u) conj(Q_w'(u)) = delta |C_W(wF)| / |Z0(L0)^{wF}|.
LawCheck orthogonality_check(const SpringerTable& T);

/// Principal-block Green functions of GL_n against green_polynomial for
/// every unipotent class and every class of W.
LawCheck green_polynomial_check(int n);

struct OracleEntry {
  std::string u;
  std::string v;
  Rational symbolic;
  Rational counted;
};

/// Symbolic table of (G, L) at q against brute-force counts in GL_n(F_q).
struct OracleReport {
  std::string group;
  std::string levi;
  int q = 0;
  std::vector<OracleEntry> entries;
  bool certified = true;
  std::string detail;
  bool pass() const;
};

/// Requires G = GL_n and L split; throws DataError otherwise.
OracleReport oracle_compare(const TwoVarEngine& engine, const FiniteGL& Gq);
std::string oracle_report_json(const std::vector<OracleReport>& reports);

/// induced_gg_norm(G, G) = gg_norm(G) for every regular system, and the
/// cuspidal Mackey check for every maximal torus.
std::vector<LawCheck> gelfand_graev_checks(const SpringerTable& G);

/// Named suites: orthogonality, laws (regular-element, integrality, support),
/// gelfand-graev, or all. Cross-path equality is enforced while building the table.
std::vector<LawCheck> run_suite(const SpringerTable& G, const SpringerTable& L, const std::string& suite);

}  // namespace greenfn
