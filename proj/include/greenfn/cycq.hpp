#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace greenfn {

using Rational = mpq_class;
using Integer = mpz_class;

/// An element of the cyclotomic field Q(zeta_N).
///
/// Stored in the power basis 1, z, ..., z^(phi(N)-1) of Q(zeta_N) with the
/// relation Phi_N(z) = 0. Every value is kept at its minimal conductor, so
/// two equal numbers always have identical representations.
class CycQ {
 public:
  CycQ() : conductor_(1), coeffs_{Rational(0)} {}
  CycQ(long v) : conductor_(1), coeffs_{Rational(v)} {}  // NOLINT
  CycQ(const Rational& v) : conductor_(1), coeffs_{v} { coeffs_[0].canonicalize(); }  // NOLINT
  CycQ(const Integer& v) : conductor_(1), coeffs_{Rational(v)} {}  // NOLINT

  /// zeta_n^k = exp(2 pi i k / n).
  static CycQ root_of_unity(int n, long k = 1);

  int conductor() const { return conductor_; }
  bool is_rational() const { return conductor_ == 1; }
  bool is_zero() const { return conductor_ == 1 && sgn(coeffs_[0]) == 0; }
  bool is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }
  /// Only valid when is_rational().
  const Rational& rational() const;
  /// Power-basis coefficients at the current conductor.
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// True when every power-basis coefficient is an integer, i.e. the value
  /// lies in Z[zeta_N].
  bool is_integral() const;

  CycQ conjugate() const { return galois(-1); }
  /// The automorphism zeta_N -> zeta_N^k, k coprime to the conductor.
  CycQ galois(long k) const;
  CycQ inverse() const;

  CycQ operator-() const;
  CycQ& operator+=(const CycQ& o);
  CycQ& operator-=(const CycQ& o);
  CycQ& operator*=(const CycQ& o);
  CycQ& operator/=(const CycQ& o) { return *this *= o.inverse(); }

  friend CycQ operator+(CycQ a, const CycQ& b) { return a += b; }
  friend CycQ operator-(CycQ a, const CycQ& b) { return a -= b; }
  friend CycQ operator*(CycQ a, const CycQ& b) { return a *= b; }
  friend CycQ operator/(CycQ a, const CycQ& b) { return a /= b; }
  friend bool operator==(const CycQ& a, const CycQ& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

  /// Total order on representations; only meant for use as a map key.
  friend bool structural_less(const CycQ& a, const CycQ& b);

  /// GAP-style text: 1/2, E(3), -2*E(3)^2+1/3 ...
  std::string str() const;
  /// Parses what str() produces.
  static CycQ parse(const std::string& text);

 private:
  CycQ(int conductor, std::vector<Rational> coeffs);
  // Re-expresses the value at conductor m (a multiple of conductor_).
  std::vector<Rational> lifted(int m) const;
  void canonicalize();

  int conductor_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycQ& x);

namespace cyclotomic {
/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long>& phi(int n);
int euler_phi(int n);
long gcd(long a, long b);
long lcm(long a, long b);
}  // namespace cyclotomic

}  // namespace greenfn
