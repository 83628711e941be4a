#include "greenfn/characters.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "greenfn/errors.hpp"

namespace greenfn {

std::string partition_label(const Partition& p) {
  const bool big = std::any_of(p.begin(), p.end(), [](int x) { return x >= 10; });
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (big && i > 0) s += ".";
    s += std::to_string(p[i]);
  }
  return s;
}

Partition parse_partition(const std::string& s) {
  Partition p;
  if (s.find('.') != std::string::npos) {
    size_t start = 0;
    while (start <= s.size()) {
      size_t end = s.find('.', start);
      if (end == std::string::npos) end = s.size();
      const std::string part = s.substr(start, end - start);
      if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
        throw DataError("bad partition '" + s + "'");
      p.push_back(std::stoi(part));
      start = end + 1;
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw DataError("bad partition '" + s + "'");
      p.push_back(c - '0');
    }
  }
  if (!std::is_sorted(p.rbegin(), p.rend())) throw DataError("partition not weakly decreasing: " + s);
  return p;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition conjugate_partition(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 1; j <= p[0]; ++j) {
    int count = 0;
    for (int x : p)
      if (x >= j) ++count;
    c.push_back(count);
  }
  return c;
}

long partition_n(const Partition& p) {
  long n = 0;
  for (size_t i = 0; i < p.size(); ++i) n += static_cast<long>(i) * p[i];
  return n;
}

namespace {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves a
// bead from b to b - r; the sign counts beads strictly in between.
Integer mn(std::vector<int>& beads, const Partition& rho, size_t k) {
  if (k == rho.size()) return 1;
  const int r = rho[k];
  Integer total = 0;
  for (size_t i = 0; i < beads.size(); ++i) {
    const int b = beads[i];
    const int t = b - r;
    if (t < 0 || std::find(beads.begin(), beads.end(), t) != beads.end()) continue;
    int between = 0;
    for (int x : beads)
      if (x > t && x < b) ++between;
    beads[i] = t;
    const Integer sub = mn(beads, rho, k + 1);
    beads[i] = b;
    total += (between % 2 ? -1 : 1) * sub;
  }
  return total;
}

}  // namespace

Integer symmetric_character(const Partition& lambda, const Partition& rho) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (std::accumulate(rho.begin(), rho.end(), 0) != n)
    throw DataError("cycle type and partition have different sizes");
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beads(len);
  for (int i = 0; i < len; ++i) beads[i] = lambda[i] + (len - 1 - i);
  return mn(beads, rho, 0);
}

std::vector<int> chain_point_permutation(const RootDatumF& G, const std::vector<int>& chain, const Perm& w) {
  const int m = static_cast<int>(chain.size());
  std::vector<int> pos(G.ss_rank, -1);
  for (int k = 0; k < m; ++k) pos[chain[k]] = k;
  auto root_of = [&](int i, int j) {
    IntVec coords(G.ss_rank, 0);
    for (int k = std::min(i, j); k < std::max(i, j); ++k) coords[chain[k]] = i < j ? 1 : -1;
    return G.root_index(coords);
  };
  std::vector<int> p(m + 1);
  for (int i = 0; i <= m; ++i) {
    const int j = i == 0 ? 1 : 0;
    const IntVec& img = G.roots[w[root_of(i, j)]];
    int first = m, last = -1;
    bool positive = false;
    for (int r = 0; r < G.ss_rank; ++r) {
      if (img[r] == 0) continue;
      if (pos[r] < 0) throw InvariantError("element does not stabilize a component");
      if (pos[r] < first) {
        first = pos[r];
        positive = img[r] > 0;
      }
      last = std::max(last, pos[r]);
    }
    p[i] = positive ? first : last + 1;
  }
  return p;
}

Partition cycle_type(const std::vector<int>& p) {
  Partition out;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

int CharacterTable::find(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

ClassFunction CharacterTable::as_class_function(int chi) const {
  ClassFunction f;
  for (const auto& v : values.at(chi)) f.emplace_back(v);
  return f;
}

namespace {

bool is_type_a_chain(const RootDatumF& G, const std::vector<int>& comp) {
  for (size_t i = 0; i < comp.size(); ++i)
    for (size_t j = 0; j < comp.size(); ++j) {
      if (i == j) continue;
      const long a = G.cartan[comp[i]][comp[j]];
      const bool adjacent = (i + 1 == j) || (j + 1 == i);
      if (adjacent ? a != -1 : a != 0) return false;
    }
  return true;
}

std::string word_label(const RootDatumF& G, const Perm& h) {
  const auto word = G.reduced_word(h);
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (G.rank >= 10 && i > 0) s += ".";
    s += std::to_string(word[i] + 1);
  }
  return s;
}

bool commutes(const Perm& a, const Perm& b) { return compose(a, b) == compose(b, a); }

[[noreturn]] void pack_required(const std::string& what) {
  throw DataError("data pack required: no built-in character table for " + what);
}

CharacterTable trivial_table() {
  CharacterTable T;
  T.labels = {"1"};
  T.values = {{CycQ(1)}};
  T.class_labels = {"e"};
  T.convention = "trivial group";
  return T;
}

CharacterTable type_a_table(const RootDatumF& G, const TwistedCoset& C,
                            const std::vector<std::vector<int>>& comps, const Perm& sigma2) {
  const int nc = static_cast<int>(comps.size());
  auto component_of = [&](int simple) {
    for (int c = 0; c < nc; ++c)
      if (std::find(comps[c].begin(), comps[c].end(), simple) != comps[c].end()) return c;
    return -1;
  };
  // Orbits of sigma2 on components.
  std::vector<int> orbit_of(nc, -1);
  std::vector<std::vector<int>> orbits;
  for (int c = 0; c < nc; ++c) {
    if (orbit_of[c] >= 0) continue;
    std::vector<int> orbit;
    int cur = c;
    do {
      orbit_of[cur] = static_cast<int>(orbits.size());
      orbit.push_back(cur);
      cur = component_of(G.simple_image(sigma2, comps[cur][0]));
    } while (cur != c);
    orbits.push_back(orbit);
  }
  for (const auto& orbit : orbits) {
    const auto& chain = comps[orbit[0]];
    Perm s = G.identity();
    for (size_t k = 0; k < orbit.size(); ++k) s = compose(sigma2, s);
    if (chain.size() >= 2 && G.simple_image(s, chain[0]) != chain[0])
      pack_required("a twist reversing a type A component");
  }

  // Per class, the cycle type of (pi^d restricted to the orbit's first component).
  const int ncl = C.num_classes();
  std::vector<std::vector<Partition>> types(ncl);
  std::vector<std::string> class_labels(ncl);
  for (int cl = 0; cl < ncl; ++cl) {
    const Perm pi = C.representative(cl);
    std::string label;
    for (const auto& orbit : orbits) {
      Perm s = G.identity();
      for (size_t k = 0; k < orbit.size(); ++k) s = compose(pi, s);
      types[cl].push_back(cycle_type(chain_point_permutation(G, comps[orbit[0]], s)));
      if (!label.empty()) label += ",";
      label += partition_label(types[cl].back());
    }
    class_labels[cl] = label;
  }

  // Characters: one partition per orbit, repeated on each component.
  CharacterTable T;
  T.class_labels = class_labels;
  T.convention = "diagonal extension: sigma permutes the components and fixes the standard basis";
  std::vector<std::vector<Partition>> choices(orbits.size());
  for (size_t o = 0; o < orbits.size(); ++o)
    choices[o] = partitions(static_cast<int>(comps[orbits[o][0]].size()) + 1);
  std::vector<size_t> idx(orbits.size(), 0);
  while (true) {
    std::vector<std::string> comp_labels(nc);
    for (size_t o = 0; o < orbits.size(); ++o)
      for (int c : orbits[o]) comp_labels[c] = partition_label(choices[o][idx[o]]);
    std::string label;
    for (int c = 0; c < nc; ++c) label += (c ? "," : "") + comp_labels[c];
    std::vector<CycQ> row(ncl);
    for (int cl = 0; cl < ncl; ++cl) {
      Integer v = 1;
      for (size_t o = 0; o < orbits.size(); ++o) v *= symmetric_character(choices[o][idx[o]], types[cl][o]);
      row[cl] = CycQ(Rational(v));
    }
    T.labels.push_back(label);
    T.values.push_back(std::move(row));
    size_t o = 0;
    while (o < idx.size() && ++idx[o] == choices[o].size()) idx[o++] = 0;
    if (o == idx.size()) break;
  }
  return T;
}

CharacterTable dihedral_table(const RootDatumF& G, const TwistedCoset& C, const std::vector<int>& comp,
                              const Perm& sigma2) {
  const int a = comp[0], b = comp[1];
  const long prod = G.cartan[a][b] * G.cartan[b][a];
  const int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
  const Perm& s = G.reflections[a];
  const Perm& t = G.reflections[b];
  const Perm r = compose(s, t);
  std::map<Perm, std::pair<int, bool>> shape;  // h -> (k, h = r^k s)
  Perm rk = G.identity();
  for (int k = 0; k < m; ++k) {
    shape[rk] = {k, false};
    shape[compose(rk, s)] = {k, true};
    rk = compose(rk, r);
  }
  const Perm sigma_inv = inverse(sigma2);
  const int ncl = C.num_classes();
  std::vector<std::pair<int, bool>> cls(ncl);
  CharacterTable T;
  T.convention = "sigma centralizes the dihedral group and acts trivially on its modules";
  for (int cl = 0; cl < ncl; ++cl) {
    const Perm h = compose(C.representative(cl), sigma_inv);
    cls[cl] = shape.at(h);
    T.class_labels.push_back(word_label(G, h));
  }
  auto add = [&](const std::string& label, const std::function<CycQ(int, bool)>& f) {
    std::vector<CycQ> row;
    for (auto [k, refl] : cls) row.push_back(f(k, refl));
    T.labels.push_back(label);
    T.values.push_back(std::move(row));
  };
  add("1", [](int, bool) { return CycQ(1); });
  add("sgn", [](int, bool refl) { return CycQ(refl ? -1 : 1); });
  if (m % 2 == 0) {
    // r^k s has value chi(s) (-1)^k with chi(r) = chi(s) chi(t) = -1.
    add("eps1", [](int k, bool refl) { return CycQ((k % 2 ? -1 : 1) * (refl ? -1 : 1)); });
    add("eps2", [](int k, bool) { return CycQ(k % 2 ? -1 : 1); });
  }
  for (int j = 1; 2 * j < m; ++j)
    add("rho" + std::to_string(j), [m, j](int k, bool refl) {
      if (refl) return CycQ(0);
      return CycQ::root_of_unity(m, static_cast<long>(j) * k) + CycQ::root_of_unity(m, -static_cast<long>(j) * k);
    });
  return T;
}

CharacterTable cyclic_table(const RootDatumF& G, const TwistedCoset& C) {
  const long n = C.order();
  const Perm id = G.identity();
  auto element_order = [&](const Perm& g) {
    long k = 1;
    for (Perm x = g; x != id; x = compose(x, g)) ++k;
    return k;
  };
  int gen = -1;
  for (size_t i = 0; i < C.elements.size(); ++i)
    if (element_order(C.elements[i]) == n) {
      gen = static_cast<int>(i);
      break;
    }
  if (gen < 0) pack_required("a non-cyclic relative Weyl group");
  std::map<Perm, long> exponent;
  Perm x = id;
  for (long k = 0; k < n; ++k) {
    exponent[x] = k;
    x = compose(x, C.elements[gen]);
  }
  const Perm sigma_inv = inverse(C.sigma);
  CharacterTable T;
  T.convention = "sigma centralizes the cyclic group and acts trivially on its modules";
  std::vector<long> k_of;
  for (int cl = 0; cl < C.num_classes(); ++cl) {
    const Perm h = compose(C.representative(cl), sigma_inv);
    k_of.push_back(exponent.at(h));
    T.class_labels.push_back(word_label(G, h));
  }
  for (long j = 0; j < n; ++j) {
    T.labels.push_back(j == 0 ? "1" : "z" + std::to_string(j));
    std::vector<CycQ> row;
    for (long k : k_of) row.push_back(CycQ::root_of_unity(static_cast<int>(n), j * k));
    T.values.push_back(std::move(row));
  }
  return T;
}

}  // namespace

CharacterTable character_table(const RootDatumF& G, const TwistedCoset& C) {
  if (C.order() == 1) return trivial_table();
  // Is H a standard parabolic subgroup W_K'?
  std::vector<int> Kp;
  for (int i = 0; i < G.ss_rank; ++i)
    if (C.find(G.reflections[i]) >= 0) Kp.push_back(i);
  std::vector<Perm> gens;
  for (int i : Kp) gens.push_back(G.reflections[i]);
  const bool parabolic = !Kp.empty() &&
                         static_cast<long>(generate_group(gens, G.identity()).size()) == C.order();
  if (parabolic) {
    // Replace sigma by y*sigma (y in H) permuting the simple roots of K'.
    const Perm* sigma2 = nullptr;
    Perm candidate;
    for (const auto& y : C.elements) {
      candidate = compose(y, C.sigma);
      if (G.maps_onto(candidate, Kp, Kp)) {
        sigma2 = &candidate;
        break;
      }
    }
    if (!sigma2) throw InvariantError("twist does not normalize the parabolic subgroup");
    const auto comps = G.components(Kp);
    const bool all_a = std::all_of(comps.begin(), comps.end(),
                                   [&](const auto& c) { return is_type_a_chain(G, c); });
    if (all_a) return type_a_table(G, C, comps, *sigma2);
    const bool central = std::all_of(gens.begin(), gens.end(),
                                     [&](const Perm& g) { return commutes(g, *sigma2); });
    if (comps.size() == 1 && comps[0].size() == 2 && central) return dihedral_table(G, C, comps[0], *sigma2);
    pack_required("W_K of type other than A or rank two dihedral");
  }
  const bool central = std::all_of(C.generators.begin(), C.generators.end(),
                                   [&](const Perm& g) { return commutes(g, C.sigma); });
  if (central) return cyclic_table(G, C);
  pack_required("a twisted non-parabolic relative Weyl group");
}

RatFunc inner_product(const TwistedCoset& C, const ClassFunction& f, const ClassFunction& g) {
  RatFunc total;
  for (int c = 0; c < C.num_classes(); ++c) total += RatFunc(C.class_size[c]) * f.at(c) * g.at(c).conjugate();
  return total / RatFunc(C.order());
}

RatFunc weighted_pairing(const TwistedCoset& C, const ClassFunction& f, const ClassFunction& g,
                         const ClassFunction& weight) {
  RatFunc total;
  for (int c = 0; c < C.num_classes(); ++c)
    total += RatFunc(C.class_size[c]) * weight.at(c) * f.at(c) * g.at(c).conjugate();
  return total / RatFunc(C.order());
}

std::vector<int> class_fusion(const TwistedCoset& small, const TwistedCoset& big) {
  std::vector<int> out;
  for (int c = 0; c < small.num_classes(); ++c) {
    const Perm pi = small.representative(c);
    if (!big.contains(pi)) throw DataError("coset is not contained in the larger coset");
    out.push_back(big.classify(pi));
  }
  for (const auto& h : small.elements)
    if (big.find(h) < 0) throw DataError("group is not contained in the larger group");
  return out;
}

ClassFunction restrict_function(const TwistedCoset& big, const TwistedCoset& small, const ClassFunction& f) {
  ClassFunction out;
  for (int c : class_fusion(small, big)) out.push_back(f.at(c));
  return out;
}

ClassFunction induce_function(const TwistedCoset& small, const TwistedCoset& big, const ClassFunction& f) {
  class_fusion(small, big);
  ClassFunction out;
  for (int c = 0; c < big.num_classes(); ++c) {
    const Perm pi = big.representative(c);
    RatFunc total;
    for (const auto& g : big.elements) {
      const Perm conj = compose(compose(g, pi), inverse(g));
      if (small.contains(conj)) total += f.at(small.classify(conj));
    }
    out.push_back(total / RatFunc(small.order()));
  }
  return out;
}

}  // namespace greenfn
