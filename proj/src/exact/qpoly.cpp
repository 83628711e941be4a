#include "greenfn/qpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace greenfn {

QPoly::QPoly(const CycQ& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<CycQ> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const CycQ& c, int degree) {
  if (degree < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  std::vector<CycQ> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::cyclotomic(int n) { return from_integers(cyclotomic::phi(n)); }

QPoly QPoly::from_integers(const std::vector<long>& coeffs) {
  std::vector<CycQ> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CycQ QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return CycQ();
  return coeffs_[k];
}

int QPoly::valuation() const {
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  return 0;
}

bool QPoly::has_rational_coefficients() const {
  for (const auto& c : coeffs_)
    if (!c.is_rational()) return false;
  return true;
}

bool QPoly::has_integral_coefficients() const {
  for (const auto& c : coeffs_)
    if (!c.is_integral()) return false;
  return true;
}

QPoly QPoly::conjugate() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = c.conjugate();
  return out;
}

CycQ QPoly::eval(const CycQ& x) const {
  CycQ acc;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    acc *= x;
    acc += coeffs_[k];
  }
  return acc;
}

QPoly QPoly::substitute_power(int k) const {
  if (k < 1) throw std::invalid_argument("substitute_power: k must be positive");
  if (is_zero()) return {};
  std::vector<CycQ> v(static_cast<size_t>(degree()) * k + 1);
  for (size_t j = 0; j < coeffs_.size(); ++j) v[j * k] = coeffs_[j];
  return QPoly(std::move(v));
}

QPoly QPoly::negate_variable() const {
  QPoly out = *this;
  for (size_t j = 1; j < out.coeffs_.size(); j += 2) out.coeffs_[j] = -out.coeffs_[j];
  return out;
}

QPoly QPoly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    std::vector<CycQ> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return QPoly(std::move(v));
  }
  if (valuation() < -k) throw std::domain_error("QPoly::shift: not divisible by q^" + std::to_string(-k));
  return QPoly(std::vector<CycQ>(coeffs_.begin() - k, coeffs_.end()));
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<CycQ> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const CycQ& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
  QPoly rem = *this;
  if (rem.degree() < d.degree()) return {QPoly(), rem};
  std::vector<CycQ> quot(rem.degree() - d.degree() + 1);
  const CycQ lead_inv = d.leading().inverse();
  const int dd = d.degree();
  for (int k = rem.degree(); k >= dd; --k) {
    const CycQ c = rem.coeffs_[k] * lead_inv;
    if (c.is_zero()) continue;
    quot[k - dd] = c;
    for (int j = 0; j <= dd; ++j) rem.coeffs_[k - dd + j] -= c * d.coeffs_[j];
  }
  rem.trim();
  return {QPoly(std::move(quot)), rem};
}

QPoly QPoly::exact_div(const QPoly& d) const {
  auto [quot, rem] = divmod(d);
  if (!rem.is_zero())
    throw std::domain_error("QPoly::exact_div: " + d.str() + " does not divide " + str());
  return quot;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

QPoly pow(const QPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  QPoly result(1);
  QPoly base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

namespace {

std::string monomial_text(int k) {
  if (k == 0) return "";
  if (k == 1) return "q";
  return "q^{" + std::to_string(k) + "}";
}

}  // namespace

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const CycQ& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (c.is_rational()) {
      const Rational& r = c.rational();
      if (sgn(r) < 0) os << "-";
      else if (!first) os << "+";
      Rational a = abs(r);
      if (k == 0 || a != 1) os << a.get_str();
    } else {
      if (!first) os << "+";
      os << "(" << c.str() << ")";
    }
    os << monomial_text(k);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const QPoly& num, const QPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    // Pull out common powers of q first; most denominators are products of
    // cyclotomic factors and q-powers, so this keeps gcds short.
    int v = std::min(num_.valuation(), den_.valuation());
    if (v > 0) {
      num_ = num_.shift(-v);
      den_ = den_.shift(-v);
    }
    if (den_.degree() > 0) {
      QPoly g = QPoly::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
      }
    }
  }
  const CycQ lead = den_.leading();
  if (!lead.is_one()) {
    const CycQ inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

QPoly RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("RatFunc: not a polynomial: " + str());
  return num_;
}

RatFunc RatFunc::conjugate() const {
  RatFunc out(num_.conjugate(), den_.conjugate(), true);
  return out;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(den_, num_);
}

CycQ RatFunc::eval(const CycQ& x) const {
  CycQ d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("RatFunc::eval: pole at " + x.str());
  return num_.eval(x) / d;
}

RatFunc RatFunc::shift(int k) const {
  if (k >= 0) return RatFunc(num_.shift(k), den_);
  return RatFunc(num_, den_.shift(-k));
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    den_ *= o.den_;
    const CycQ lead = den_.leading();
    if (!lead.is_one()) {
      num_ *= lead.inverse();
      den_ = QPoly(1);
    }
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

}  // namespace greenfn
