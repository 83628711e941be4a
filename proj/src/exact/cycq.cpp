#include "greenfn/cycq.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace greenfn {

namespace cyclotomic {

long gcd(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm(long a, long b) { return a / gcd(a, b) * b; }

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<long>& phi(int n) {
  static std::recursive_mutex mu;
  static std::map<int, std::vector<long>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("cyclotomic::phi: n must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long> divisor = phi(d);
    // Exact division of monic integer polynomials.
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(divisor.size()) - 1;
    std::vector<long> quot(dn - dd + 1, 0);
    for (int k = dn; k >= dd; --k) {
      long c = num[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) num[k - dd + j] -= c * divisor[j];
    }
    num = quot;
  }
  return cache.emplace(n, num).first->second;
}

}  // namespace cyclotomic

namespace {

// Reduces a polynomial in z modulo Phi_n(z) in place and trims to phi(n).
void reduce_mod_phi(std::vector<Rational>& v, int n) {
  const auto& p = cyclotomic::phi(n);
  const int d = static_cast<int>(p.size()) - 1;
  for (int k = static_cast<int>(v.size()) - 1; k >= d; --k) {
    if (sgn(v[k]) == 0) continue;
    Rational c = v[k];
    for (int j = 0; j <= d; ++j) v[k - d + j] -= c * p[j];
  }
  v.resize(d, Rational(0));
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Solves the (overdetermined, consistent) system A x = b over Q.
// Returns false if inconsistent.
bool solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational>& x) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) return false;
  x.assign(cols, Rational(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return true;
}

}  // namespace

CycQ::CycQ(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  reduce_mod_phi(coeffs_, conductor_);
  canonicalize();
}

CycQ CycQ::root_of_unity(int n, long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
  k = mod(k, n);
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = 1;
  return CycQ(n, std::move(v));
}

const Rational& CycQ::rational() const {
  if (conductor_ != 1) throw std::logic_error("CycQ::rational on irrational value " + str());
  return coeffs_[0];
}

bool CycQ::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

std::vector<Rational> CycQ::lifted(int m) const {
  if (m == conductor_) return coeffs_;
  const int step = m / conductor_;
  std::vector<Rational> v(static_cast<size_t>(step) * coeffs_.size(), Rational(0));
  for (size_t j = 0; j < coeffs_.size(); ++j) v[j * step] = coeffs_[j];
  reduce_mod_phi(v, m);
  return v;
}

void CycQ::canonicalize() {
  for (auto& c : coeffs_) c.canonicalize();
  if (conductor_ == 1) return;
  bool all_zero_above = true;
  for (size_t j = 1; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0) all_zero_above = false;
  if (all_zero_above) {
    Rational c = coeffs_[0];
    conductor_ = 1;
    coeffs_.assign(1, c);
    return;
  }
  const int n = conductor_;
  for (int m = 2; m < n; ++m) {
    if (n % m != 0) continue;
    // Membership in Q(zeta_m): fixed by every automorphism k = 1 mod m.
    bool fixed = true;
    for (long k = 1 + m; k < n && fixed; k += m) {
      if (cyclotomic::gcd(k, n) != 1) continue;
      if (!(galois(k).coeffs_ == coeffs_)) fixed = false;
    }
    if (!fixed) continue;
    const int dm = cyclotomic::euler_phi(m);
    const int dn = static_cast<int>(coeffs_.size());
    std::vector<std::vector<Rational>> a(dn, std::vector<Rational>(dm, Rational(0)));
    for (int i = 0; i < dm; ++i) {
      std::vector<Rational> col(static_cast<size_t>(i) * (n / m) + 1, Rational(0));
      col.back() = 1;
      reduce_mod_phi(col, n);
      for (int r = 0; r < dn; ++r) a[r][i] = col[r];
    }
    std::vector<Rational> x;
    if (!solve_exact(a, coeffs_, x)) continue;
    conductor_ = m;
    coeffs_ = std::move(x);
    return;
  }
}

CycQ CycQ::galois(long k) const {
  if (conductor_ == 1) return *this;
  const int n = conductor_;
  k = mod(k, n);
  if (cyclotomic::gcd(k, n) != 1) throw std::invalid_argument("galois: exponent not a unit");
  std::vector<Rational> v(n, Rational(0));
  for (size_t j = 0; j < coeffs_.size(); ++j) v[mod(static_cast<long>(j) * k, n)] += coeffs_[j];
  reduce_mod_phi(v, n);
  CycQ out;
  out.conductor_ = n;
  out.coeffs_ = std::move(v);
  return out;
}

CycQ CycQ::inverse() const {
  if (is_zero()) throw std::domain_error("CycQ: division by zero");
  if (conductor_ == 1) return CycQ(Rational(1 / coeffs_[0]));
  CycQ others(1);
  for (long k = 2; k < conductor_; ++k) {
    if (cyclotomic::gcd(k, conductor_) != 1) continue;
    others *= galois(k);
  }
  CycQ norm = *this * others;
  return others * CycQ(Rational(1 / norm.rational()));
}

CycQ CycQ::operator-() const {
  CycQ out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycQ& CycQ::operator+=(const CycQ& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  const int m = static_cast<int>(cyclotomic::lcm(conductor_, o.conductor_));
  auto a = lifted(m);
  auto b = o.lifted(m);
  for (size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  *this = CycQ(m, std::move(a));
  return *this;
}

CycQ& CycQ::operator-=(const CycQ& o) { return *this += -o; }

CycQ& CycQ::operator*=(const CycQ& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  if (o.conductor_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    if (sgn(o.coeffs_[0]) == 0) *this = CycQ();
    return *this;
  }
  if (conductor_ == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    if (sgn(s) == 0) *this = CycQ();
    return *this;
  }
  const int m = static_cast<int>(cyclotomic::lcm(conductor_, o.conductor_));
  auto a = lifted(m);
  auto b = o.lifted(m);
  std::vector<Rational> prod(a.size() + b.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  *this = CycQ(m, std::move(prod));
  return *this;
}

bool structural_less(const CycQ& a, const CycQ& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_;
  for (size_t j = 0; j < a.coeffs_.size(); ++j)
    if (a.coeffs_[j] != b.coeffs_[j]) return a.coeffs_[j] < b.coeffs_[j];
  return false;
}

std::string CycQ::str() const {
  if (conductor_ == 1) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t j = coeffs_.size(); j-- > 0;) {
    const Rational& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? "+" : "-");
    else if (sgn(c) < 0) os << "-";
    Rational ac = abs(c);
    if (j == 0) {
      os << ac.get_str();
    } else {
      if (ac != 1) os << ac.get_str() << "*";
      os << "E(" << conductor_ << ")";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return os.str();
}

CycQ CycQ::parse(const std::string& text) {
  CycQ total;
  size_t i = 0;
  const size_t n = text.size();
  auto fail = [&]() { throw std::invalid_argument("CycQ::parse: bad input '" + text + "'"); };
  if (n == 0) fail();
  while (i < n) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
    }
    Rational coeff(1);
    bool have_number = false;
    size_t start = i;
    while (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    if (i > start) {
      coeff = Rational(text.substr(start, i - start));
      coeff.canonicalize();
      have_number = true;
    }
    CycQ term(coeff);
    if (i < n && text[i] == '*') ++i;
    if (i + 1 < n && text[i] == 'E' && text[i + 1] == '(') {
      i += 2;
      size_t close = text.find(')', i);
      if (close == std::string::npos) fail();
      int cond = std::stoi(text.substr(i, close - i));
      i = close + 1;
      long power = 1;
      if (i < n && text[i] == '^') {
        ++i;
        size_t ps = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == ps) fail();
        power = std::stol(text.substr(ps, i - ps));
      }
      term *= root_of_unity(cond, power);
    } else if (!have_number) {
      fail();
    }
    total += sign > 0 ? term : -term;
  }
  return total;
}

std::ostream& operator<<(std::ostream& os, const CycQ& x) { return os << x.str(); }

}  // namespace greenfn
