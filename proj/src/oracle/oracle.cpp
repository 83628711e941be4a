#include "greenfn/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "greenfn/errors.hpp"

namespace greenfn {

namespace {

constexpr long kMaxCodes = 1L << 20;

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

int mod_inverse(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw InvariantError("no inverse mod p");
}

int rank_mod(std::vector<int> a, int m, int q) {
  int r = 0;
  for (int col = 0; col < m && r < m; ++col) {
    int p = r;
    while (p < m && a[p * m + col] == 0) ++p;
    if (p == m) continue;
    for (int j = 0; j < m; ++j) std::swap(a[p * m + j], a[r * m + j]);
    const int s = mod_inverse(a[r * m + col], q);
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i * m + col] == 0) continue;
      const int f = a[i * m + col] * s % q;
      for (int j = 0; j < m; ++j) a[i * m + j] = ((a[i * m + j] - f * a[r * m + j]) % q + q) % q;
    }
    ++r;
  }
  return r;
}

// Jordan type from the ranks of powers of u - 1; empty if u is not unipotent.
Partition unipotent_type(std::vector<int> u, int m, int q) {
  for (int i = 0; i < m; ++i) u[i * m + i] = (u[i * m + i] + q - 1) % q;
  std::vector<int> power(m * m, 0);
  for (int i = 0; i < m; ++i) power[i * m + i] = 1;
  Partition conj;
  int prev = m;
  for (int k = 1; k <= m && prev > 0; ++k) {
    std::vector<int> next(m * m, 0);
    for (int i = 0; i < m; ++i)
      for (int l = 0; l < m; ++l)
        for (int j = 0; j < m; ++j) next[i * m + j] = (next[i * m + j] + power[i * m + l] * u[l * m + j]) % q;
    power = std::move(next);
    const int r = rank_mod(power, m, q);
    conj.push_back(prev - r);
    prev = r;
  }
  if (prev != 0) return {};
  return conjugate_partition(conj);
}

long weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0L); }

std::vector<int> block_starts(const std::vector<int>& composition) {
  std::vector<int> starts;
  int o = 0;
  for (int m : composition) {
    starts.push_back(o);
    o += m;
  }
  return starts;
}

int block_of(const std::vector<int>& composition, int i) {
  int o = 0;
  for (size_t b = 0; b < composition.size(); ++b) {
    o += composition[b];
    if (i < o) return static_cast<int>(b);
  }
  throw DataError("index outside composition");
}

bool in_parabolic(const FiniteGL& G, const std::vector<int>& composition, const FiniteGL::Mat& y) {
  const int n = G.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (block_of(composition, i) > block_of(composition, j) && y[i * n + j] != 0) return false;
  return true;
}

FiniteGL::Mat levi_part(const FiniteGL& G, const std::vector<int>& composition, FiniteGL::Mat y) {
  const int n = G.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (block_of(composition, i) != block_of(composition, j)) y[i * n + j] = 0;
  return y;
}

void check_composition(const FiniteGL& G, const std::vector<int>& composition) {
  int total = 0;
  for (int m : composition) {
    if (m < 1) throw DataError("composition parts must be positive");
    total += m;
  }
  if (total != G.n()) throw DataError("composition does not sum to n");
}

// Charge of a word with partition content (Lascoux-Schuetzenberger).
int charge(std::vector<int> word) {
  int total = 0;
  std::vector<bool> used(word.size(), false);
  size_t left = word.size();
  while (left > 0) {
    int top = 0;
    for (size_t i = 0; i < word.size(); ++i)
      if (!used[i]) top = std::max(top, word[i]);
    int pos = static_cast<int>(word.size());
    int index = 0;
    for (int letter = 1; letter <= top; ++letter) {
      int found = -1;
      for (int i = pos - 1; i >= 0; --i)
        if (!used[i] && word[i] == letter) {
          found = i;
          break;
        }
      if (found < 0) {
        if (letter > 1) ++index;
        for (int i = static_cast<int>(word.size()) - 1; i >= pos; --i)
          if (!used[i] && word[i] == letter) {
            found = i;
            break;
          }
      }
      if (found < 0) throw InvariantError("content is not a partition");
      used[found] = true;
      --left;
      total += index;
      pos = found;
    }
  }
  return total;
}

void fill_tableaux(const Partition& shape, const Partition& content, std::vector<std::vector<int>>& T,
                   std::vector<int>& remaining, size_t row, size_t col, std::vector<std::vector<int>>& words) {
  if (row == shape.size()) {
    std::vector<int> word;
    for (size_t r = shape.size(); r-- > 0;)
      for (int x : T[r]) word.push_back(x);
    words.push_back(std::move(word));
    return;
  }
  if (col == static_cast<size_t>(shape[row])) {
    fill_tableaux(shape, content, T, remaining, row + 1, 0, words);
    return;
  }
  const int lo = std::max(col > 0 ? T[row][col - 1] : 1, row > 0 ? T[row - 1][col] + 1 : 1);
  for (int x = lo; x <= static_cast<int>(content.size()); ++x) {
    if (remaining[x - 1] == 0) continue;
    --remaining[x - 1];
    T[row][col] = x;
    fill_tableaux(shape, content, T, remaining, row, col + 1, words);
    ++remaining[x - 1];
  }
}

}  // namespace

FiniteGL::FiniteGL(int n, int q) : n_(n), q_(q) {
  if (n < 1 || !is_prime(q)) throw DataError("oracle groups need n >= 1 and q prime");
  long codes = 1;
  for (int i = 0; i < n * n; ++i) {
    codes *= q;
    if (codes > kMaxCodes) throw DataError("GL" + std::to_string(n) + "(" + std::to_string(q) + ") is too large to enumerate");
  }
  index_.assign(codes, -1);
  Mat m(n * n, 0);
  for (long code = 0; code < codes; ++code) {
    long c = code;
    for (int i = 0; i < n * n; ++i) {
      m[i] = static_cast<int>(c % q);
      c /= q;
    }
    if (rank(m) == n) {
      index_[code] = static_cast<int>(elements_.size());
      elements_.push_back(m);
    }
  }
}

long FiniteGL::encode(const Mat& a) const {
  long code = 0;
  for (int i = n_ * n_; i-- > 0;) code = code * q_ + a[i];
  return code;
}

int FiniteGL::index_of(const Mat& a) const { return index_.at(encode(a)); }

FiniteGL::Mat FiniteGL::identity() const {
  Mat m(n_ * n_, 0);
  for (int i = 0; i < n_; ++i) m[i * n_ + i] = 1;
  return m;
}

FiniteGL::Mat FiniteGL::mul(const Mat& a, const Mat& b) const {
  Mat c(n_ * n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const int x = a[i * n_ + k];
      if (x == 0) continue;
      for (int j = 0; j < n_; ++j) c[i * n_ + j] = (c[i * n_ + j] + x * b[k * n_ + j]) % q_;
    }
  return c;
}

FiniteGL::Mat FiniteGL::inverse(const Mat& a) const {
  Mat m = a, inv = identity();
  for (int col = 0; col < n_; ++col) {
    int p = col;
    while (p < n_ && m[p * n_ + col] == 0) ++p;
    if (p == n_) throw InvariantError("singular matrix in the oracle");
    for (int j = 0; j < n_; ++j) {
      std::swap(m[p * n_ + j], m[col * n_ + j]);
      std::swap(inv[p * n_ + j], inv[col * n_ + j]);
    }
    const int s = mod_inverse(m[col * n_ + col], q_);
    for (int j = 0; j < n_; ++j) {
      m[col * n_ + j] = m[col * n_ + j] * s % q_;
      inv[col * n_ + j] = inv[col * n_ + j] * s % q_;
    }
    for (int r = 0; r < n_; ++r) {
      const int f = m[r * n_ + col];
      if (r == col || f == 0) continue;
      for (int j = 0; j < n_; ++j) {
        m[r * n_ + j] = ((m[r * n_ + j] - f * m[col * n_ + j]) % q_ + q_) % q_;
        inv[r * n_ + j] = ((inv[r * n_ + j] - f * inv[col * n_ + j]) % q_ + q_) % q_;
      }
    }
  }
  return inv;
}

int FiniteGL::rank(Mat a) const { return rank_mod(std::move(a), n_, q_); }

bool FiniteGL::is_unipotent(const Mat& a) const { return !unipotent_type(a, n_, q_).empty(); }

Partition FiniteGL::jordan_type(const Mat& u) const {
  Partition p = unipotent_type(u, n_, q_);
  if (p.empty()) throw DataError("element is not unipotent");
  return p;
}

FiniteGL::Mat FiniteGL::jordan_element(const std::vector<int>& composition, const std::vector<Partition>& parts) const {
  if (parts.size() != composition.size()) throw DataError("one partition per block expected");
  Mat m = identity();
  const auto starts = block_starts(composition);
  for (size_t b = 0; b < composition.size(); ++b) {
    if (weight(parts[b]) != composition[b]) throw DataError("partition does not match block size");
    int o = starts[b];
    for (int part : parts[b]) {
      for (int k = 0; k + 1 < part; ++k) m[(o + k) * n_ + o + k + 1] = 1;
      o += part;
    }
  }
  return m;
}

std::vector<std::vector<int>> FiniteGL::conjugacy_classes() const {
  std::vector<int> cls(elements_.size(), -1);
  std::vector<std::vector<int>> out;
  std::vector<Mat> inverses;
  for (const auto& x : elements_) inverses.push_back(inverse(x));
  for (size_t g = 0; g < elements_.size(); ++g) {
    if (cls[g] >= 0) continue;
    std::vector<int> members;
    for (size_t x = 0; x < elements_.size(); ++x) {
      const int h = index_of(mul(mul(elements_[x], elements_[g]), inverses[x]));
      if (cls[h] < 0) {
        cls[h] = static_cast<int>(out.size());
        members.push_back(h);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::string levi_label(const FiniteGL& G, const std::vector<int>& composition, const FiniteGL::Mat& v) {
  const int n = G.n();
  const auto starts = block_starts(composition);
  std::string label;
  for (size_t b = 0; b < composition.size(); ++b) {
    const int m = composition[b];
    if (m < 2) continue;
    std::vector<int> block(m * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) block[i * m + j] = v[(starts[b] + i) * n + starts[b] + j];
    const Partition p = unipotent_type(block, m, G.q());
    if (p.empty()) throw DataError("Levi block is not unipotent");
    if (!label.empty()) label += ",";
    label += partition_label(p);
  }
  return label.empty() ? "1" : label;
}

ParabolicData parabolic_data(const FiniteGL& G, const std::vector<int>& composition) {
  check_composition(G, composition);
  ParabolicData d;
  d.composition = composition;
  long radical_dim = 0;
  for (size_t a = 0; a < composition.size(); ++a)
    for (size_t b = a + 1; b < composition.size(); ++b) radical_dim += composition[a] * composition[b];
  d.radical_order = 1;
  for (long k = 0; k < radical_dim; ++k) d.radical_order *= G.q();
  for (const auto& x : G.elements()) {
    if (!(levi_part(G, composition, x) == x)) continue;
    ++d.levi_order;
    if (G.is_unipotent(x)) ++d.class_sizes[levi_label(G, composition, x)];
  }
  for (const auto& [label, size] : d.class_sizes) {
    std::vector<Partition> parts;
    size_t start = 0;
    std::vector<std::string> pieces;
    if (label != "1") {
      while (start <= label.size()) {
        size_t end = label.find(',', start);
        if (end == std::string::npos) end = label.size();
        pieces.push_back(label.substr(start, end - start));
        start = end + 1;
      }
    }
    size_t next = 0;
    for (int m : composition) parts.push_back(m < 2 ? Partition{1} : parse_partition(pieces.at(next++)));
    d.representatives[label] = G.jordan_element(composition, parts);
  }
  return d;
}

Rational hc_two_var(const FiniteGL& G, const std::vector<int>& composition, const FiniteGL::Mat& u,
                    const FiniteGL::Mat& v) {
  const ParabolicData d = parabolic_data(G, composition);
  long count = 0;
  for (const auto& x : G.elements()) {
    const FiniteGL::Mat y = G.mul(G.mul(G.inverse(x), u), x);
    if (in_parabolic(G, composition, y) && levi_part(G, composition, y) == v) ++count;
  }
  return Rational(count) / Rational(d.levi_order * d.radical_order);
}

HcRow hc_two_var_row(const FiniteGL& G, const std::vector<int>& composition, const FiniteGL::Mat& u) {
  const ParabolicData d = parabolic_data(G, composition);
  std::map<std::string, long> hist, exact;
  for (const auto& x : G.elements()) {
    const FiniteGL::Mat y = G.mul(G.mul(G.inverse(x), u), x);
    if (!in_parabolic(G, composition, y)) continue;
    const FiniteGL::Mat l = levi_part(G, composition, y);
    const std::string label = levi_label(G, composition, l);
    ++hist[label];
    if (l == d.representatives.at(label)) ++exact[label];
  }
  HcRow row;
  row.certified = true;
  const Rational denom(d.levi_order * d.radical_order);
  for (const auto& [label, size] : d.class_sizes) {
    row.values[label] = Rational(exact[label]) / denom;
    // |L^F| <1_C, Q(u,.)> = |C| Q(u, v_C); Harish-Chandra induction of 1_C at u.
    const Rational lhs = Rational(size) * row.values[label];
    const Rational rhs = Rational(hist[label]) / denom;
    if (lhs != rhs) {
      row.certified = false;
      row.detail = "class " + label + ": " + lhs.get_str() + " vs " + rhs.get_str();
    }
  }
  return row;
}

Integer frobenius_character(const Partition& nu, const Partition& rho) {
  const long n = weight(nu);
  if (weight(rho) != n) throw DataError("partitions of different sizes");
  const int N = static_cast<int>(std::max<size_t>(nu.size(), 1));
  // p_rho as a map from exponent vectors to coefficients.
  std::map<std::vector<int>, Integer> p{{std::vector<int>(N, 0), Integer(1)}};
  for (int r : rho) {
    std::map<std::vector<int>, Integer> next;
    for (const auto& [e, c] : p)
      for (int i = 0; i < N; ++i) {
        auto f = e;
        f[i] += r;
        next[f] += c;
      }
    p = std::move(next);
  }
  std::vector<int> target(N);
  for (int i = 0; i < N; ++i) target[i] = (i < static_cast<int>(nu.size()) ? nu[i] : 0) + (N - 1 - i);
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<int> e(N);
    bool ok = true;
    for (int i = 0; i < N && ok; ++i) {
      e[i] = target[i] - (N - 1 - perm[i]);
      ok = e[i] >= 0;
    }
    if (!ok) continue;
    auto it = p.find(e);
    if (it != p.end()) total += inversions % 2 ? -it->second : it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

QPoly kostka_foulkes(const Partition& nu, const Partition& mu) {
  if (weight(nu) != weight(mu)) throw DataError("partitions of different sizes");
  std::vector<std::vector<int>> T;
  for (int r : nu) T.emplace_back(r, 0);
  std::vector<int> remaining(mu.begin(), mu.end());
  std::vector<std::vector<int>> words;
  fill_tableaux(nu, mu, T, remaining, 0, 0, words);
  QPoly k;
  for (const auto& w : words) k += QPoly::monomial(CycQ(1), charge(w));
  return k;
}

QPoly green_polynomial(const Partition& lambda, const Partition& rho) {
  if (weight(lambda) != weight(rho)) throw DataError("partitions of different sizes");
  const long nl = partition_n(lambda);
  QPoly out;
  for (const auto& nu : partitions(static_cast<int>(weight(lambda)))) {
    const Integer chi = frobenius_character(nu, rho);
    if (chi == 0) continue;
    const QPoly k = kostka_foulkes(nu, lambda);
    for (int d = 0; d <= k.degree(); ++d)
      if (!k.coeff(d).is_zero()) out += QPoly::monomial(k.coeff(d) * CycQ(chi), static_cast<int>(nl) - d);
  }
  return out;
}

Rational gelfand_graev_norm(const FiniteGL& G) {
  const int n = G.n();
  long unitri = 1;
  for (int k = 0; k < n * (n - 1) / 2; ++k) unitri *= G.q();
  auto psi = [&](const FiniteGL::Mat& y) -> std::optional<CycQ> {
    int s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int x = y[i * n + j];
        if (i == j && x != 1) return std::nullopt;
        if (i > j && x != 0) return std::nullopt;
        if (j == i + 1) s += x;
      }
    return CycQ::root_of_unity(G.q(), s % G.q());
  };
  CycQ total;
  for (const auto& cls : G.conjugacy_classes()) {
    const FiniteGL::Mat& g = G.elements()[cls.front()];
    CycQ value;
    for (const auto& x : G.elements()) {
      if (auto v = psi(G.mul(G.mul(x, g), G.inverse(x)))) value += *v;
    }
    value = value * CycQ(Rational(1) / Rational(unitri));
    total += value * value.conjugate() * CycQ(Rational(static_cast<long>(cls.size())));
  }
  total = total * CycQ(Rational(1) / Rational(static_cast<long>(G.order())));
  if (!total.is_rational()) throw InvariantError("Gelfand-Graev norm is not rational");
  return total.rational();
}

}  // namespace greenfn
