#pragma once

#include <string>
#include <vector>

#include "greenfn/matrix.hpp"
#include "greenfn/springer.hpp"

namespace greenfn {

/// Lusztig-Shoji solution of one block.
///
/// basis lists the block's F-stable systems in solver order (decreasing
/// support dimension). Row iota of P expands Qt_iota in the phi basis:
/// P[iota][kappa] = q^{c_iota - c_kappa} <Qt_iota, phi_kappa>, an integral
/// polynomial vanishing unless C_iota lies in the closure of C_kappa, with
/// the identity on same-support pairs.
struct BlockSolution {
  int block = 0;
  std::vector<int> basis;
  std::vector<std::vector<QPoly>> P;
  RatMatrix Lambda;               // target Gram matrix from the class data
  std::vector<ClassFunction> qt;  // Qt_iota on the classes of the relative coset
};

/// Lambda_{g,k} = |A|^-1 sum_a |C0(v_a)^F| q^{-2c_g} Y_g(v_a) conj(Y_k(v_a)),
/// zero across different supports.
RatMatrix target_gram(const SpringerTable& T, int block);

/// Throws DataError (non-integral entry or Gram mismatch, naming the pair) or
/// InvariantError (triangularity).
BlockSolution lusztig_shoji_solve(const SpringerTable& T, int block);
std::vector<BlockSolution> solve_all(const SpringerTable& T);

/// Z_{L0}: class of the relative coset -> |Z0(L0)^{wF}|.
ClassFunction torus_weight(const SpringerTable& T, int block);

/// Q^{G,I}_{wF}(u_a) = sum_iota Qt_iota(wF) q^{c_iota} Y_iota(u_a), indexed
/// [class][F-class]; w_class is a class of the block's relative coset.
std::vector<std::vector<QPoly>> one_var_green(const SpringerTable& T, const BlockSolution& sol, int w_class);

/// JSON with basis labels, P and Lambda.
std::string solution_json(const SpringerTable& T, const BlockSolution& sol);

}  // namespace greenfn
