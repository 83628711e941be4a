#include "greenfn/phi_format.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace greenfn {

QPoly PhiFactorization::reassemble() const {
  QPoly p = residual.shift(q_power);
  for (auto [n, m] : phis) p *= pow(QPoly::cyclotomic(n), m);
  return p * scalar;
}

std::optional<PhiFactorization> phi_factorize(const QPoly& p, int bound) {
  if (p.is_zero() || !p.has_rational_coefficients()) return std::nullopt;
  Integer d = 1;
  for (const auto& c : p.coefficients()) {
    const Integer den = c.rational().get_den();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
  }
  PhiFactorization f;
  f.scalar = CycQ(Rational(Integer(1), d));
  QPoly r = p * CycQ(Rational(d));
  f.q_power = r.valuation();
  r = r.shift(-f.q_power);
  for (int n = 1; n <= bound; ++n) {
    const QPoly phi = QPoly::cyclotomic(n);
    if (phi.degree() > r.degree()) continue;
    int m = 0;
    while (r.degree() >= phi.degree()) {
      auto [quot, rem] = r.divmod(phi);
      if (!rem.is_zero()) break;
      r = quot;
      ++m;
    }
    if (m > 0) f.phis.emplace_back(n, m);
  }
  f.residual = r;
  return f;
}

std::string format_phi(const PhiFactorization& f) {
  std::ostringstream os;
  const bool other_factors = f.q_power > 0 || !f.phis.empty();
  const Rational& s = f.scalar.rational();
  const Integer d = s.get_den();
  // Scalars other than 1/d do not arise from phi_factorize; fold them in.
  QPoly residual = f.residual * CycQ(Rational(s.get_num()));
  if (residual.is_constant()) {
    const Rational c = residual.coeff(0).rational();
    if (!other_factors) {
      os << c.get_str();
    } else if (c == -1) {
      os << "-";
    } else if (c != 1) {
      os << c.get_str();
    }
  } else if (!other_factors && d == 1) {
    os << residual.str();
  } else {
    os << "(" << residual.str() << ")";
  }
  if (f.q_power == 1) os << "q";
  else if (f.q_power > 1) os << "q^{" << f.q_power << "}";
  for (auto [n, m] : f.phis) {
    os << "\\Phi_{" << n << "}";
    if (m > 1) os << "^{" << m << "}";
  }
  if (d != 1) os << "/" << d.get_str();
  return os.str();
}

std::string format_phi(const QPoly& p, int bound) {
  if (p.is_zero()) return "0";
  auto f = phi_factorize(p, bound);
  if (!f) return p.str();
  return format_phi(*f);
}

std::string format_phi(const RatFunc& r, int bound) {
  if (r.is_polynomial()) return format_phi(r.num(), bound);
  return format_phi(r.num(), bound) + "/(" + format_phi(r.den(), bound) + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  QPoly parse() {
    QPoly p = expr();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse_qpoly: " + why + " at offset " + std::to_string(pos_) +
                                " in '" + s_ + "'");
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  bool consume(const std::string& tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!consume(tok)) fail("expected '" + tok + "'");
  }
  long integer() {
    size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }
  Integer big_integer() {
    size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(s_.substr(start, pos_ - start));
  }
  long braced_integer() {
    expect("{");
    long v = integer();
    expect("}");
    return v;
  }

  QPoly expr() {
    QPoly total;
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      QPoly t = term();
      total += sign > 0 ? t : -t;
      first = false;
      if (at_end() || peek() == ')') break;
    }
    return total;
  }

  bool starts_factor() const {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '(' || c == '\\' ||
           c == 'E';
  }

  QPoly term() {
    if (!starts_factor()) fail("expected factor");
    QPoly p(1);
    while (starts_factor() || peek() == '*') {
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      p *= factor();
    }
    if (peek() == '/') {
      ++pos_;
      Integer d = big_integer();
      if (d == 0) fail("zero denominator");
      p *= CycQ(Rational(Integer(1), d));
    }
    return p;
  }

  QPoly factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return QPoly(CycQ(Rational(big_integer())));
    if (c == 'q') {
      ++pos_;
      int k = 1;
      if (consume("^")) k = static_cast<int>(peek() == '{' ? braced_integer() : integer());
      return QPoly::monomial(CycQ(1), k);
    }
    if (c == '(') {
      ++pos_;
      QPoly inner = expr();
      expect(")");
      if (consume("^")) inner = pow(inner, static_cast<int>(peek() == '{' ? braced_integer() : integer()));
      return inner;
    }
    if (consume("\\Phi_")) {
      int n = static_cast<int>(peek() == '{' ? braced_integer() : integer());
      if (n < 1) fail("bad cyclotomic index");
      int m = 1;
      if (consume("^")) m = static_cast<int>(peek() == '{' ? braced_integer() : integer());
      return pow(QPoly::cyclotomic(n), m);
    }
    if (consume("E(")) {
      int n = static_cast<int>(integer());
      expect(")");
      long k = 1;
      if (consume("^")) k = integer();
      return QPoly(CycQ::root_of_unity(n, k));
    }
    fail("unexpected character");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

QPoly parse_qpoly(const std::string& text) { return Parser(text).parse(); }

}  // namespace greenfn
