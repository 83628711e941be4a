#pragma once

#include "greenfn/springer.hpp"

namespace greenfn {

/// The unique system of a block supported on the regular unipotent class.
/// Throws DataError if the block has none.
int regular_system(const SpringerTable& T, int block);

/// <R_L^G Gamma_iota, R_L^G Gamma_iota> for a regular-support system iota of
/// L, from twisted-class data of W_L(L0)F inside W_G(L0)F:
/// |Z(L)/Z0(L)|^2 sum_w |Z0(L0)^{wF}| |W_G(L0)| / |W_L(L0)|^2 * |(wF)^W_G cap W_L F| / |(wF)^W_G|.
/// The ambient group is the Levi M of the root datum (the whole group by default).
QPoly induced_gg_norm(const LeviDatum& M, const SpringerTable& L, int system);
inline QPoly induced_gg_norm(const SpringerTable& L, int system) { return induced_gg_norm(whole_group(L.group), L, system); }

/// <Gamma_iota, Gamma_iota'> on the group of T: |Z/Z0|^2 |Z0^F| q^{dim Z(L0) - dim Z}
/// if iota = iota', else 0.
QPoly gg_norm(const SpringerTable& T, int system, int other);
inline QPoly gg_norm(const SpringerTable& T, int system) { return gg_norm(T, system, system); }

/// <Y_iota, Y_iota'> = q^{-rkss} |Z0^F|^-1 if iota = iota', else 0.
RatFunc y_norm(const SpringerTable& T, int system, int other);
inline RatFunc y_norm(const SpringerTable& T, int system) { return y_norm(T, system, system); }

struct MackeyCheck {
  QPoly lhs;    // |Z(L)/Z0(L)|^2 |W_G(L)^F| |Z0(L)^F|
  QPoly rhs;    // |W_G(L)^F| times the same expression with G = L
  QPoly prop6;  // induced_gg_norm(G, L, iota)
  bool equal = false;
};

/// For a cuspidal pair (L = L0). Throws DataError otherwise.
MackeyCheck cuspidal_mackey_check(const LeviDatum& M, const SpringerTable& L, int system);

}  // namespace greenfn
