#include "greenfn/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <set>

#include "greenfn/errors.hpp"

namespace greenfn {

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (size_t r = 0; r < b.size(); ++r) c[r] = a[b[r]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (size_t r = 0; r < a.size(); ++r) c[a[r]] = static_cast<int>(r);
  return c;
}

int RootDatumF::root_index(const IntVec& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

Perm RootDatumF::identity() const {
  Perm p(num_roots());
  std::iota(p.begin(), p.end(), 0);
  return p;
}

int RootDatumF::length(const Perm& w) const {
  int l = 0;
  for (int r = 0; r < num_positive; ++r)
    if (!is_positive(w[r])) ++l;
  return l;
}

Perm RootDatumF::from_word(const std::vector<int>& word) const {
  Perm w = identity();
  for (int i : word) {
    if (i < 0 || i >= ss_rank) throw DataError("simple reflection index out of range: " + std::to_string(i + 1));
    w = compose(w, reflections[i]);
  }
  return w;
}

std::vector<int> RootDatumF::reduced_word(const Perm& w0) const {
  std::vector<int> word;
  Perm w = w0;
  while (true) {
    int i = 0;
    while (i < ss_rank && is_positive(w[i])) ++i;
    if (i == ss_rank) break;
    word.push_back(i);
    w = compose(w, reflections[i]);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

int RootDatumF::simple_image(const Perm& w, int i) const {
  const int r = w[i];
  return r < ss_rank ? r : -1;
}

bool RootDatumF::maps_onto(const Perm& w, const std::vector<int>& J,
                           const std::vector<int>& target) const {
  std::vector<int> img;
  for (int j : J) {
    const int s = simple_image(w, j);
    if (s < 0) return false;
    img.push_back(s);
  }
  std::sort(img.begin(), img.end());
  std::vector<int> t = target;
  std::sort(t.begin(), t.end());
  return img == t;
}

IntMat RootDatumF::simple_matrix(const Perm& w) const {
  IntMat m(ss_rank, IntVec(ss_rank, 0));
  for (int j = 0; j < ss_rank; ++j)
    for (int i = 0; i < ss_rank; ++i) m[i][j] = roots[w[j]][i];
  return m;
}

std::vector<int> RootDatumF::all_simple() const {
  std::vector<int> v(ss_rank);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<std::vector<int>> RootDatumF::components(const std::vector<int>& K) const {
  std::set<int> left(K.begin(), K.end());
  std::vector<std::vector<int>> out;
  while (!left.empty()) {
    std::vector<int> comp;
    std::deque<int> queue{*left.begin()};
    left.erase(left.begin());
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      comp.push_back(i);
      for (auto it = left.begin(); it != left.end();) {
        if (cartan[i][*it] != 0) {
          queue.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    // Order chains from their smallest endpoint.
    auto degree = [&](int i) {
      int d = 0;
      for (int j : comp)
        if (j != i && cartan[i][j] != 0) ++d;
      return d;
    };
    bool chain = true;
    for (int i : comp)
      if (degree(i) > 2) chain = false;
    if (chain && comp.size() > 1) {
      int start = -1;
      for (int i : comp)
        if (degree(i) == 1) {
          start = i;
          break;
        }
      if (start >= 0) {
        std::vector<int> ordered{start};
        std::set<int> seen{start};
        while (ordered.size() < comp.size()) {
          int cur = ordered.back();
          int next = -1;
          for (int j : comp)
            if (!seen.count(j) && cartan[cur][j] != 0) next = j;
          if (next < 0) break;
          ordered.push_back(next);
          seen.insert(next);
        }
        if (ordered.size() == comp.size()) comp = ordered;
      }
    }
    out.push_back(comp);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return *std::min_element(a.begin(), a.end()) <
                                                      *std::min_element(b.begin(), b.end()); });
  return out;
}

namespace {

IntVec mat_vec(const IntMat& m, const IntVec& x) {
  IntVec y(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

}  // namespace

RootDatumF build_root_datum(std::string name, IntMat cartan, IntMat simple_roots,
                            IntMat simple_coroots, IntMat phi_x) {
  RootDatumF G;
  G.name = std::move(name);
  G.ss_rank = static_cast<int>(cartan.size());
  G.rank = static_cast<int>(phi_x.size());
  G.cartan = std::move(cartan);
  G.simple_roots = std::move(simple_roots);
  G.simple_coroots = std::move(simple_coroots);
  G.phi_x = std::move(phi_x);
  const int l = G.ss_rank;
  if (static_cast<int>(G.simple_roots.size()) != l || static_cast<int>(G.simple_coroots.size()) != l)
    throw DataError(G.name + ": simple root and coroot counts must match the Cartan matrix");
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      long pairing = 0;
      for (int k = 0; k < G.rank; ++k) pairing += G.simple_roots[j][k] * G.simple_coroots[i][k];
      if (pairing != G.cartan[i][j])
        throw DataError(G.name + ": root/coroot pairing does not match the Cartan matrix at (" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }

  // Root system in simple coordinates by closure under simple reflections.
  auto reflect = [&](const IntVec& b, int i) {
    long p = 0;
    for (int j = 0; j < l; ++j) p += b[j] * G.cartan[i][j];
    IntVec c = b;
    c[i] -= p;
    return c;
  };
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  for (int i = 0; i < l; ++i) {
    IntVec e(l, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec b = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      IntVec c = reflect(b, i);
      if (seen.insert(c).second) queue.push_back(c);
      if (seen.size() > 100000) throw DataError(G.name + ": Cartan matrix is not of finite type");
    }
  }
  std::vector<IntVec> pos;
  for (const auto& b : seen) {
    bool positive = std::all_of(b.begin(), b.end(), [](long x) { return x >= 0; });
    bool negative = std::all_of(b.begin(), b.end(), [](long x) { return x <= 0; });
    if (!positive && !negative) throw DataError(G.name + ": Cartan matrix is not of finite type");
    if (positive) pos.push_back(b);
  }
  auto height = [](const IntVec& b) { return std::accumulate(b.begin(), b.end(), 0L); };
  std::sort(pos.begin(), pos.end(), [&](const IntVec& a, const IntVec& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a > b;  // simple roots e_0, e_1, ... come out in index order
  });
  G.num_positive = static_cast<int>(pos.size());
  G.roots = pos;
  for (const auto& b : pos) {
    IntVec n = b;
    for (auto& x : n) x = -x;
    G.roots.push_back(n);
  }
  for (int r = 0; r < G.num_roots(); ++r) G.index_[G.roots[r]] = r;

  G.reflections.resize(l);
  for (int i = 0; i < l; ++i) {
    Perm s(G.num_roots());
    for (int r = 0; r < G.num_roots(); ++r) s[r] = G.root_index(reflect(G.roots[r], i));
    G.reflections[i] = s;
  }

  G.phi_simple.assign(l, -1);
  for (int i = 0; i < l; ++i) {
    IntVec img = mat_vec(G.phi_x, G.simple_roots[i]);
    for (int j = 0; j < l; ++j)
      if (img == G.simple_roots[j]) G.phi_simple[i] = j;
    if (G.phi_simple[i] < 0) throw DataError(G.name + ": twist does not permute the simple roots");
  }
  G.phi = Perm(G.num_roots());
  for (int r = 0; r < G.num_roots(); ++r) {
    IntVec img(l, 0);
    for (int i = 0; i < l; ++i) img[G.phi_simple[i]] += G.roots[r][i];
    G.phi[r] = G.root_index(img);
    if (G.phi[r] < 0) throw DataError(G.name + ": twist does not preserve the root system");
  }
  return G;
}

namespace {

IntMat cartan_matrix(char type, int n) {
  IntMat c(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw DataError("B_n needs n >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case 'C':
      if (n < 2) throw DataError("C_n needs n >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 4) throw DataError("D_n needs n >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw DataError("E_n needs 6 <= n <= 8");
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw DataError("F_n needs n = 4");
      link(0, 1);
      link(2, 3);
      c[1][2] = -1;
      c[2][1] = -2;
      break;
    case 'G':
      if (n != 2) throw DataError("G_n needs n = 2");
      c[0][1] = -3;
      c[1][0] = -1;
      break;
    default:
      throw DataError(std::string("unknown Cartan type ") + type);
  }
  return c;
}

std::vector<int> graph_automorphism(char type, int n, int order) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  if (order == 1) return p;
  if (order == 2 && type == 'A') {
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  } else if (order == 2 && type == 'D') {
    std::swap(p[n - 2], p[n - 1]);
  } else if (order == 2 && type == 'E' && n == 6) {
    p = {5, 1, 4, 3, 2, 0};
  } else if (order == 3 && type == 'D' && n == 4) {
    p = {2, 1, 3, 0};
  } else {
    throw DataError("no diagram automorphism of order " + std::to_string(order) + " on " + type +
                    std::to_string(n));
  }
  return p;
}

IntMat identity_matrix(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

RootDatumF make_root_datum(const std::string& descriptor) {
  static const std::regex classical(R"(^(GL|GU|SL|PGL)(\d+)$)");
  static const std::regex cartan_type(R"(^([23]?)([A-G])(\d+)(sc|ad)?$)");
  std::smatch m;
  if (std::regex_match(descriptor, m, classical)) {
    const std::string kind = m[1];
    const int n = std::stoi(m[2]);
    if (n < 1) throw DataError("rank must be positive in " + descriptor);
    if (kind == "SL" || kind == "PGL") {
      if (n < 2) throw DataError(descriptor + " is trivial");
      RootDatumF G = make_root_datum("A" + std::to_string(n - 1) + (kind == "SL" ? "sc" : "ad"));
      G.name = descriptor;
      return G;
    }
    IntMat cartan = cartan_matrix('A', n - 1);
    IntMat roots(n - 1, IntVec(n, 0));
    for (int i = 0; i + 1 < n; ++i) {
      roots[i][i] = 1;
      roots[i][i + 1] = -1;
    }
    IntMat phi = identity_matrix(n);
    if (kind == "GU") {
      phi.assign(n, IntVec(n, 0));
      for (int i = 0; i < n; ++i) phi[n - 1 - i][i] = -1;
    }
    return build_root_datum(descriptor, cartan, roots, roots, phi);
  }
  if (std::regex_match(descriptor, m, cartan_type)) {
    const int order = m[1].str().empty() ? 1 : std::stoi(m[1]);
    const char type = m[2].str()[0];
    const int n = std::stoi(m[3]);
    const bool sc = m[4] == "sc";
    if (n < 1) throw DataError("rank must be positive in " + descriptor);
    IntMat cartan = cartan_matrix(type, n);
    std::vector<int> p = graph_automorphism(type, n, order);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (cartan[p[i]][p[j]] != cartan[i][j])
          throw DataError(descriptor + ": diagram permutation is not an automorphism");
    IntMat roots(n, IntVec(n, 0)), coroots(n, IntVec(n, 0)), phi(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) {
      phi[p[i]][i] = 1;
      for (int k = 0; k < n; ++k) {
        if (sc) {
          roots[i][k] = cartan[k][i];
          coroots[i][k] = (k == i);
        } else {
          roots[i][k] = (k == i);
          coroots[i][k] = cartan[i][k];
        }
      }
    }
    return build_root_datum(descriptor, cartan, roots, coroots, phi);
  }
  throw DataError("unrecognised group descriptor '" + descriptor + "'");
}

void set_residue(RootDatumF& G, const std::string& text) {
  static const std::regex re(R"(^q=(-?\d+)mod(\d+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw DataError("bad residue constraint '" + text + "'");
  const long mod = std::stol(m[2]);
  if (mod < 1) throw DataError("residue modulus must be positive");
  G.residue_modulus = mod;
  G.residue = ((std::stol(m[1]) % mod) + mod) % mod;
}

std::vector<Perm> generate_group(const std::vector<Perm>& gens, const Perm& identity) {
  std::vector<Perm> elements{identity};
  std::set<Perm> seen{identity};
  for (size_t k = 0; k < elements.size(); ++k)
    for (const auto& g : gens) {
      Perm x = compose(elements[k], g);
      if (seen.insert(x).second) elements.push_back(std::move(x));
    }
  return elements;
}

int TwistedCoset::find(const Perm& h) const {
  auto it = index.find(h);
  return it == index.end() ? -1 : it->second;
}

bool TwistedCoset::contains(const Perm& pi) const {
  return find(compose(pi, inverse(sigma))) >= 0;
}

int TwistedCoset::classify(const Perm& pi) const {
  const int i = find(compose(pi, inverse(sigma)));
  if (i < 0) throw InvariantError("element is not in the twisted coset");
  return class_of[i];
}

TwistedCoset make_coset(std::vector<Perm> group, const Perm& sigma) {
  TwistedCoset C;
  C.elements = std::move(group);
  C.sigma = sigma;
  for (size_t i = 0; i < C.elements.size(); ++i) C.index[C.elements[i]] = static_cast<int>(i);
  const Perm& id = C.elements.front();
  const Perm sigma_inv = inverse(sigma);

  // Greedy generating set.
  std::set<Perm> span{id};
  for (const auto& g : C.elements) {
    if (span.count(g)) continue;
    C.generators.push_back(g);
    auto closure = generate_group(C.generators, id);
    span = std::set<Perm>(closure.begin(), closure.end());
  }

  const int n = static_cast<int>(C.elements.size());
  C.class_of.assign(n, -1);
  std::vector<Perm> gen_inv;
  for (const auto& g : C.generators) gen_inv.push_back(inverse(g));
  for (int i = 0; i < n; ++i) {
    if (C.class_of[i] >= 0) continue;
    const int c = C.num_classes();
    C.class_rep.push_back(i);
    long size = 0;
    std::vector<int> stack{i};
    C.class_of[i] = c;
    while (!stack.empty()) {
      const int k = stack.back();
      stack.pop_back();
      ++size;
      const Perm pi = C.coset_element(k);
      for (size_t g = 0; g < C.generators.size(); ++g) {
        const Perm conj = compose(compose(C.generators[g], pi), gen_inv[g]);
        const int j = C.find(compose(conj, sigma_inv));
        if (j < 0) throw InvariantError("twist does not normalize the group");
        if (C.class_of[j] < 0) {
          C.class_of[j] = c;
          stack.push_back(j);
        }
      }
    }
    C.class_size.push_back(size);
  }
  return C;
}

namespace {

bool is_gl_type(const RootDatumF& G) {
  return G.name.rfind("GL", 0) == 0 && G.rank == G.ss_rank + 1;
}

// Points e_0..e_m of a type A chain; the root e_i - e_j as an index.
int chain_root_index(const RootDatumF& G, const std::vector<int>& chain, int i, int j) {
  IntVec coords(G.ss_rank, 0);
  const int lo = std::min(i, j), hi = std::max(i, j);
  for (int k = lo; k < hi; ++k) coords[chain[k]] = (i < j) ? 1 : -1;
  return G.root_index(coords);
}

// Word in simple reflections for the permutation p of chain points.
std::vector<int> chain_word(const std::vector<int>& chain, std::vector<int> p) {
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        word.push_back(chain[i]);
        changed = true;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string gl_levi_name(const RootDatumF& G, const LeviDatum& L) {
  const int n = G.rank;
  if (static_cast<int>(L.K.size()) == G.ss_rank) return G.name;
  // Blocks of consecutive points.
  std::vector<int> block_of(n, 0);
  std::vector<int> block_size;
  int b = 0;
  block_size.push_back(1);
  for (int i = 1; i < n; ++i) {
    if (std::find(L.K.begin(), L.K.end(), i - 1) == L.K.end()) {
      ++b;
      block_size.push_back(0);
    }
    block_of[i] = b;
    ++block_size[b];
  }
  // Action of v on points: v(e_i - e_j) for a fixed j.
  std::vector<int> chain = G.all_simple();
  std::vector<int> vp(n);
  for (int i = 0; i < n; ++i) {
    const int j = i == 0 ? 1 : 0;
    const IntVec& img = G.roots[L.v[chain_root_index(G, chain, i, j)]];
    int first = -1, last = -1;
    for (int k = 0; k < G.ss_rank; ++k)
      if (img[k] != 0) {
        if (first < 0) first = k;
        last = k;
      }
    const bool pos = img[first] > 0;
    vp[i] = pos ? first : last + 1;
  }
  std::vector<bool> done(block_size.size(), false);
  std::string name;
  for (size_t blk = 0; blk < block_size.size(); ++blk) {
    if (done[blk]) continue;
    int d = 0;
    size_t cur = blk;
    do {
      done[cur] = true;
      ++d;
      int start = 0;
      while (block_of[start] != static_cast<int>(cur)) ++start;
      cur = block_of[vp[start]];
    } while (cur != blk && d <= n);
    if (!name.empty()) name += "x";
    name += "GL" + std::to_string(block_size[blk]);
    if (d > 1) name += "(q^" + std::to_string(d) + ")";
  }
  return name;
}

std::string generic_levi_name(const RootDatumF& G, const LeviDatum& L) {
  if (static_cast<int>(L.K.size()) == G.ss_rank && L.v == G.identity()) return "G";
  std::string name;
  if (L.K.empty()) {
    name = "T";
  } else {
    name = "{";
    for (size_t i = 0; i < L.K.size(); ++i) name += (i ? "," : "") + std::to_string(L.K[i] + 1);
    name += "}";
  }
  auto word = G.reduced_word(L.v);
  if (!word.empty()) {
    name += "[";
    for (size_t i = 0; i < word.size(); ++i) name += (i ? "," : "") + std::to_string(word[i] + 1);
    name += "]";
  }
  return name;
}

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) {
        out.push_back(std::stoi(cur) - 1);
        cur.clear();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else {
      throw DataError("bad index list '" + s + "'");
    }
  }
  return out;
}

}  // namespace

LeviDatum make_levi(const RootDatumF& G, std::vector<int> K, const Perm& v) {
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  for (int k : K)
    if (k < 0 || k >= G.ss_rank) throw DataError("Levi simple root index out of range");
  LeviDatum L;
  L.K = K;
  L.v = v;
  L.sigma = compose(v, G.phi);
  if (!G.maps_onto(L.sigma, K, K))
    throw DataError("Levi twist does not stabilize its simple roots (L0 not wF-stable)");
  L.name = is_gl_type(G) ? gl_levi_name(G, L) : generic_levi_name(G, L);
  return L;
}

LeviDatum whole_group(const RootDatumF& G) {
  LeviDatum L = make_levi(G, G.all_simple(), G.identity());
  L.name = G.name;
  return L;
}

LeviDatum parse_levi(const RootDatumF& G, const std::string& text) {
  if (text == "G" || text == G.name) return whole_group(G);
  static const std::regex torus(R"(^T(\[([0-9, ]*)\])?$)");
  static const std::regex subset(R"(^\{([0-9, ]*)\}(\[([0-9, ]*)\])?$)");
  static const std::regex gl_factor(R"(^GL(\d+)(\(q\^(\d+)\))?$)");
  std::smatch m;
  if (std::regex_match(text, m, torus)) {
    Perm v = m[1].matched ? G.from_word(parse_index_list(m[2])) : G.identity();
    return make_levi(G, {}, v);
  }
  if (std::regex_match(text, m, subset)) {
    Perm v = m[2].matched ? G.from_word(parse_index_list(m[3])) : G.identity();
    return make_levi(G, parse_index_list(m[1]), v);
  }
  if (is_gl_type(G) && text.rfind("GL", 0) == 0) {
    const int n = G.rank;
    std::vector<int> K;
    std::vector<int> p(n);
    int pos = 0;
    size_t start = 0;
    while (start <= text.size()) {
      size_t end = text.find('x', start);
      if (end == std::string::npos) end = text.size();
      std::string f = text.substr(start, end - start);
      std::smatch fm;
      if (!std::regex_match(f, fm, gl_factor)) throw DataError("bad Levi factor '" + f + "'");
      const int mm = std::stoi(fm[1]);
      const int d = fm[2].matched ? std::stoi(fm[3]) : 1;
      if (mm < 1 || d < 1 || pos + mm * d > n) throw DataError("Levi '" + text + "' does not fit in " + G.name);
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k + 1 < mm; ++k) K.push_back(pos + j * mm + k);
        for (int k = 0; k < mm; ++k) p[pos + j * mm + k] = pos + ((j + 1) % d) * mm + k;
      }
      pos += mm * d;
      start = end + 1;
    }
    if (pos != n) throw DataError("Levi '" + text + "' has the wrong total rank for " + G.name);
    return make_levi(G, K, G.from_word(chain_word(G.all_simple(), p)));
  }
  throw DataError("unrecognised Levi '" + text + "' for " + G.name);
}

TwistedCoset relative_coset(const RootDatumF& G, const std::vector<int>& K, const Perm& sigma,
                            const std::vector<int>& J) {
  std::vector<Perm> gens;
  for (int k : K) gens.push_back(G.reflections[k]);
  std::vector<Perm> WK = generate_group(gens, G.identity());
  const Perm* x = nullptr;
  for (const auto& w : WK)
    if (G.maps_onto(compose(w, sigma), J, J)) {
      x = &w;
      break;
    }
  if (!x) throw DataError("no element of W_K twists the cuspidal Levi onto itself");
  std::vector<Perm> N;
  for (const auto& w : WK)
    if (G.maps_onto(w, J, J)) N.push_back(w);
  return make_coset(std::move(N), compose(*x, sigma));
}

std::vector<LeviDatum> all_levis(const RootDatumF& G) {
  const int l = G.ss_rank;
  std::vector<Perm> W = generate_group(G.reflections, G.identity());
  std::vector<std::vector<int>> reps;
  std::vector<LeviDatum> out;
  const Perm phi_inv = inverse(G.phi);
  for (int mask = 0; mask < (1 << l); ++mask) {
    std::vector<int> K;
    for (int i = 0; i < l; ++i)
      if (mask & (1 << i)) K.push_back(i);
    bool seen = false;
    for (const auto& R : reps) {
      if (R.size() != K.size()) continue;
      for (const auto& w : W)
        if (G.maps_onto(w, R, K)) {
          seen = true;
          break;
        }
      if (seen) break;
    }
    if (seen) continue;
    reps.push_back(K);
    TwistedCoset C;
    try {
      C = relative_coset(G, G.all_simple(), G.phi, K);
    } catch (const DataError&) {
      continue;
    }
    for (int c = 0; c < C.num_classes(); ++c)
      out.push_back(make_levi(G, K, compose(C.representative(c), phi_inv)));
  }
  // Larger Levis last, the group itself at the very end.
  std::stable_sort(out.begin(), out.end(),
                   [](const LeviDatum& a, const LeviDatum& b) { return a.K.size() < b.K.size(); });
  for (auto& L : out)
    if (static_cast<int>(L.K.size()) == G.ss_rank && L.v == G.identity()) L.name = is_gl_type(G) ? G.name : "G";
  return out;
}

namespace {

Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

QPoly interpolate(const std::vector<long>& xs, const std::vector<Rational>& ys) {
  // Newton divided differences, then expansion.
  const size_t n = xs.size();
  std::vector<Rational> coef(ys);
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / Rational(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly p;
  for (size_t k = n; k-- > 0;) {
    p = p * (QPoly::q() - QPoly(xs[k])) + QPoly(coef[k]);
  }
  return p;
}

}  // namespace

QPoly normalized_charpoly(const IntMat& M) {
  const size_t n = M.size();
  if (n == 0) return QPoly(1);
  std::vector<long> xs;
  std::vector<Rational> ys;
  for (size_t t = 0; t <= n; ++t) {
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) a[i][j] = Integer(static_cast<long>(t) * M[i][j] - (i == j ? 1 : 0));
    xs.push_back(static_cast<long>(t));
    ys.push_back(Rational(bareiss_det(std::move(a))));
  }
  QPoly p = interpolate(xs, ys);
  if (p.degree() != static_cast<int>(n)) throw InvariantError("lattice map is not invertible");
  if (sgn(p.leading().rational()) < 0) p = -p;
  return p;
}

namespace {

QPoly center_factor(const RootDatumF& G) {
  IntMat perm(G.ss_rank, IntVec(G.ss_rank, 0));
  for (int i = 0; i < G.ss_rank; ++i) perm[G.phi_simple[i]][i] = 1;
  return normalized_charpoly(G.phi_x).exact_div(normalized_charpoly(perm));
}

}  // namespace

QPoly torus_order(const RootDatumF& G, const std::vector<int>& J, const Perm& pi) {
  if (!G.maps_onto(pi, J, J)) throw InvariantError("torus_order: element does not stabilize J");
  std::vector<int> rest;
  for (int i = 0; i < G.ss_rank; ++i)
    if (std::find(J.begin(), J.end(), i) == J.end()) rest.push_back(i);
  IntMat M(rest.size(), IntVec(rest.size(), 0));
  for (size_t b = 0; b < rest.size(); ++b) {
    const IntVec& img = G.roots[pi[rest[b]]];
    for (size_t a = 0; a < rest.size(); ++a) M[a][b] = img[rest[a]];
  }
  return normalized_charpoly(M) * center_factor(G);
}

namespace {

QPoly poincare_fixed(const RootDatumF& G, const std::vector<int>& K, const Perm& sigma) {
  std::vector<Perm> gens;
  for (int k : K) gens.push_back(G.reflections[k]);
  QPoly sum;
  for (const auto& w : generate_group(gens, G.identity()))
    if (compose(sigma, w) == compose(w, sigma)) sum += QPoly::monomial(CycQ(1), G.length(w));
  return sum;
}

int positive_roots_in(const RootDatumF& G, const std::vector<int>& K) {
  int count = 0;
  for (int r = 0; r < G.num_positive; ++r) {
    bool inside = true;
    for (int i = 0; i < G.ss_rank; ++i)
      if (G.roots[r][i] != 0 && std::find(K.begin(), K.end(), i) == K.end()) inside = false;
    if (inside) ++count;
  }
  return count;
}

}  // namespace

QPoly group_order(const RootDatumF& G) { return levi_order(G, whole_group(G)); }

QPoly levi_order(const RootDatumF& G, const LeviDatum& L) {
  return torus_order(G, {}, L.sigma).shift(positive_roots_in(G, L.K)) * poincare_fixed(G, L.K, L.sigma);
}

CenterInfo levi_center(const RootDatumF& G, const std::vector<int>& K, const Perm& sigma) {
  CenterInfo info;
  info.dim = G.rank - static_cast<int>(K.size());
  info.connected_order = torus_order(G, K, sigma);
  const size_t k = K.size();
  if (k == 0) return info;
  IntMat ck(k, IntVec(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) ck[i][j] = G.cartan[K[i]][K[j]];
  std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) a[i][j] = Integer(ck[i][j]);
  const long D = std::labs(bareiss_det(a).get_si());
  long r = 1;
  if (G.residue_modulus > 0 && D > 1) {
    if (G.residue_modulus % D != 0)
      throw DataError("residue constraint does not fix q modulo " + std::to_string(D));
    r = G.residue % D;
  }
  // Torsion of X / Z Phi_K: sum c_i alpha_i / D lying in X.
  std::vector<IntVec> torsion;
  IntVec c(k, 0);
  while (true) {
    bool in_lattice = true;
    for (int x = 0; x < G.rank && in_lattice; ++x) {
      long s = 0;
      for (size_t i = 0; i < k; ++i) s += c[i] * G.simple_roots[K[i]][x];
      if (s % D != 0) in_lattice = false;
    }
    if (in_lattice) torsion.push_back(c);
    size_t i = 0;
    while (i < k && ++c[i] == D) c[i++] = 0;
    if (i == k) break;
  }
  info.component_order = static_cast<long>(torsion.size());
  long fixed = 0;
  for (const auto& t : torsion) {
    IntVec img(k, 0);
    for (size_t i = 0; i < k; ++i) {
      const int target = G.simple_image(sigma, K[i]);
      const size_t pos = std::find(K.begin(), K.end(), target) - K.begin();
      if (pos == k) throw InvariantError("twist does not stabilize the Levi");
      img[pos] = ((t[i] * r) % D + D) % D;
    }
    if (img == t) ++fixed;
  }
  info.fixed_components = fixed;
  return info;
}

}  // namespace greenfn
