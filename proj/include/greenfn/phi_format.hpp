#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greenfn/qpoly.hpp"

namespace greenfn {

/// p = scalar * q^q_power * prod Phi_n^m * residual.
///
/// For rational input, scalar is 1/d with d the common denominator and the
/// residual has integer coefficients (its sign and content are left alone,
/// matching the usual table layout such as "(-2q-1)\Phi_{2}").
struct PhiFactorization {
  int q_power = 0;
  std::vector<std::pair<int, int>> phis;  // (n, multiplicity), n ascending
  QPoly residual;
  CycQ scalar{1};

  QPoly reassemble() const;
};

inline constexpr int kDefaultPhiBound = 30;

/// Returns nullopt when p has non-rational coefficients or is zero.
std::optional<PhiFactorization> phi_factorize(const QPoly& p, int bound = kDefaultPhiBound);

/// Table rendering: "(4q+1)q^{4}\Phi_{2}^{2}/3", "\Phi_{2}\Phi_{3}", "3q+1", "0".
/// Non-rational polynomials fall back to the expanded form.
std::string format_phi(const QPoly& p, int bound = kDefaultPhiBound);
std::string format_phi(const PhiFactorization& f);

/// Rational functions print as "N" or "N/(D)" using format_phi for both parts.
std::string format_phi(const RatFunc& r, int bound = kDefaultPhiBound);

/// Parses the rendering grammar: sums and implicit products of integers, q,
/// q^{k}, \Phi_{n}, \Phi_{n}^{m}, E(n)^k, parenthesised subexpressions with an
/// optional power, and a trailing "/d" on a product. Throws std::invalid_argument on bad input.
QPoly parse_qpoly(const std::string& text);

}  // namespace greenfn
