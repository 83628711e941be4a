#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "greenfn/cycq.hpp"

namespace greenfn {

/// Polynomial in the indeterminate q with coefficients in a cyclotomic field.
/// Dense, low degree first, never carries trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) : QPoly(CycQ(c)) {}  // NOLINT
  QPoly(const Rational& c) : QPoly(CycQ(c)) {}  // NOLINT
  QPoly(const CycQ& c);  // NOLINT
  explicit QPoly(std::vector<CycQ> coeffs);

  static QPoly q() { return monomial(CycQ(1), 1); }
  static QPoly monomial(const CycQ& c, int degree);
  /// The n-th cyclotomic polynomial Phi_n(q).
  static QPoly cyclotomic(int n);
  static QPoly from_integers(const std::vector<long>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<CycQ>& coefficients() const { return coeffs_; }
  CycQ coeff(int k) const;
  CycQ leading() const { return is_zero() ? CycQ() : coeffs_.back(); }
  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int valuation() const;

  bool has_rational_coefficients() const;
  bool has_integral_coefficients() const;

  QPoly conjugate() const;
  CycQ eval(const CycQ& x) const;
  /// p(q) -> p(q^k).
  QPoly substitute_power(int k) const;
  /// p(q) -> p(-q).
  QPoly negate_variable() const;
  /// Multiplies by q^k (k >= 0) or divides exactly (k < 0).
  QPoly shift(int k) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const CycQ& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator*(QPoly a, const CycQ& c) { return a *= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division over the coefficient field: *this = quot * d + rem.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  /// Exact division; throws std::domain_error if d does not divide.
  QPoly exact_div(const QPoly& d) const;
  bool divisible_by(const QPoly& d) const { return divmod(d).second.is_zero(); }
  QPoly monic() const;

  static QPoly gcd(QPoly a, QPoly b);

  /// Plain expanded rendering, e.g. "7q^{2}+2q-2".
  std::string str() const;

 private:
  void trim();
  std::vector<CycQ> coeffs_;
};

QPoly pow(const QPoly& p, int e);
std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// Element of the rational function field Q(zeta)(q), kept as num/den with
/// gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const CycQ& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const QPoly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const QPoly& num, const QPoly& den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Requires is_polynomial().
  QPoly as_polynomial() const;

  RatFunc conjugate() const;
  RatFunc inverse() const;
  CycQ eval(const CycQ& x) const;
  /// Multiplies by q^k for any integer k.
  RatFunc shift(int k) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  RatFunc(QPoly num, QPoly den, bool already_reduced)
      : num_(std::move(num)), den_(std::move(den)) {
    (void)already_reduced;
  }
  void normalize();
  QPoly num_;
  QPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

}  // namespace greenfn
