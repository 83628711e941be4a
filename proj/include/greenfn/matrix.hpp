#pragma once

#include <vector>

#include "greenfn/qpoly.hpp"

namespace greenfn {

using RatMatrix = std::vector<std::vector<RatFunc>>;

RatMatrix identity_matrix(size_t n);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& a);
/// Gauss-Jordan inverse over Q(zeta)(q); throws InvariantError if singular.
RatMatrix invert(const RatMatrix& a);
/// Solves x * a = b for a row vector x.
std::vector<RatFunc> solve_left(const RatMatrix& a, const std::vector<RatFunc>& b);
/// Diagonal matrix diag(q^{e_i}).
RatMatrix q_power_diagonal(const std::vector<int>& exponents);

}  // namespace greenfn
