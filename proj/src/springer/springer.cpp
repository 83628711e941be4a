#include "greenfn/springer.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "greenfn/errors.hpp"
#include "greenfn/phi_format.hpp"

namespace greenfn {

using json = nlohmann::json;

int UnipotentClass::find_irr(const std::string& l) const {
  auto it = std::find(a_irr.begin(), a_irr.end(), l);
  return it == a_irr.end() ? -1 : static_cast<int>(it - a_irr.begin());
}

std::string LocalSystem::label(const std::vector<UnipotentClass>& classes) const {
  const std::string& c = classes.at(cls).label;
  return chi == "1" ? c : c + "(" + chi + ")";
}

namespace {

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

bool same_set(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

int SpringerTable::dim() const { return group.rank + 2 * positive_roots_in(group, levi.K); }

QPoly SpringerTable::order() const { return levi_order(group, levi); }

int SpringerTable::find_class(const std::string& label) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].label == label) return static_cast<int>(i);
  return -1;
}

int SpringerTable::find_block(const std::string& name) const {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].name == name) return static_cast<int>(i);
  return -1;
}

int SpringerTable::regular_class() const {
  int best = 0;
  for (size_t i = 1; i < classes.size(); ++i)
    if (classes[i].dim > classes[best].dim) best = static_cast<int>(i);
  return best;
}

bool SpringerTable::in_closure(int a, int b) const {
  if (a == b) return true;
  const auto& below = classes.at(b).below;
  return std::find(below.begin(), below.end(), a) != below.end();
}

QPoly SpringerTable::centralizer_order(int cls, int a) const {
  const UnipotentClass& C = classes.at(cls);
  return C.c0_order.at(a) * CycQ(Rational(C.a_order, C.a_class_sizes.at(a)));
}

RatFunc SpringerTable::class_size(int cls, int a) const {
  return RatFunc(order(), centralizer_order(cls, a));
}

CycQ SpringerTable::y_value(int system, int cls, int a) const {
  const LocalSystem& s = systems.at(system);
  if (s.cls != cls || s.chi_index < 0) return CycQ(0);
  return classes.at(cls).a_values.at(s.chi_index).at(a);
}

std::vector<std::string> SpringerTable::assumptions() const {
  std::vector<std::string> out;
  if (!residue.empty()) out.push_back("residue: " + residue);
  for (const auto& b : blocks)
    if (b.conditional()) out.push_back("block " + b.name + " (conditional): " + b.assumption);
  return out;
}

void finalize_table(SpringerTable& T, bool reverse_ties) {
  const int nc = static_cast<int>(T.classes.size());
  if (nc == 0) throw DataError("table has no unipotent classes");
  const int dimL = T.dim();

  // Classes: unique labels, transitive acyclic closure with regular maximum
  // and trivial minimum.
  std::set<std::string> seen;
  for (const auto& C : T.classes)
    if (!seen.insert(C.label).second) throw DataError("duplicate class label " + C.label);
  std::vector<std::vector<bool>> le(nc, std::vector<bool>(nc, false));
  for (int b = 0; b < nc; ++b) {
    le[b][b] = true;
    for (int a : T.classes[b].below) {
      if (a < 0 || a >= nc) throw DataError("bad closure entry in class " + T.classes[b].label);
      le[a][b] = true;
    }
  }
  for (int k = 0; k < nc; ++k)
    for (int i = 0; i < nc; ++i)
      for (int j = 0; j < nc; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  for (int b = 0; b < nc; ++b) {
    T.classes[b].below.clear();
    for (int a = 0; a < nc; ++a) {
      if (a == b || !le[a][b]) continue;
      if (le[b][a]) throw DataError("closure order has a cycle through " + T.classes[b].label);
      if (T.classes[a].dim >= T.classes[b].dim)
        throw DataError("class " + T.classes[a].label + " in the closure of " + T.classes[b].label +
                        " without smaller dimension");
      T.classes[b].below.push_back(a);
    }
  }
  const int reg = T.regular_class();
  for (int a = 0; a < nc; ++a) {
    if (!le[a][reg]) throw DataError("regular class is not maximal for " + T.classes[a].label);
    if (T.classes[a].dim == 0)
      for (int b = 0; b < nc; ++b)
        if (!le[a][b]) throw DataError("trivial class is not minimal");
  }

  // Component groups, centralizers and characters of A(u).F.
  for (auto& C : T.classes) {
    const int nf = C.num_f_classes();
    if (nf == 0 || static_cast<int>(C.a_class_sizes.size()) != nf || static_cast<int>(C.c0_order.size()) != nf)
      throw DataError("class " + C.label + ": F-class data incomplete");
    long total = 0;
    for (long s : C.a_class_sizes) total += s;
    if (total != C.a_order) throw DataError("class " + C.label + ": twisted class sizes do not sum to |A(u)|");
    for (int a = 0; a < nf; ++a)
      if (C.dim + C.c0_order[a].degree() != dimL)
        throw DataError("class " + C.label + ": dim + deg |C0(u)^F| != dim G");
    if (static_cast<int>(C.a_irr.size()) != nf || C.a_values.size() != C.a_irr.size())
      throw DataError("class " + C.label + ": need one F-stable character of A(u) per F-class");
    for (int i = 0; i < nf; ++i) {
      if (static_cast<int>(C.a_values[i].size()) != nf)
        throw DataError("class " + C.label + ": character " + C.a_irr[i] + " has wrong length");
      for (int j = 0; j < nf; ++j) {
        CycQ sum;
        for (int a = 0; a < nf; ++a)
          sum += CycQ(Rational(C.a_class_sizes[a])) * C.a_values[i][a] * C.a_values[j][a].conjugate();
        if (sum / CycQ(Rational(C.a_order)) != CycQ(i == j ? 1 : 0))
          throw DataError("class " + C.label + ": characters of A(u) are not orthonormal");
      }
    }
  }
  {
    const auto& R = T.classes[reg];
    for (int a = 1; a < R.num_f_classes(); ++a)
      if (!(R.c0_order[a] == R.c0_order[0]))
        throw DataError("regular class: |C0(u_a)^F| depends on a");
  }

  // Blocks: cuspidal data, relative Weyl groups, character tables.
  if (T.blocks.empty()) throw DataError("table has no blocks");
  for (auto& B : T.blocks) {
    const auto& J = B.cuspidal_levi.K;
    for (int j : J)
      if (std::find(T.levi.K.begin(), T.levi.K.end(), j) == T.levi.K.end())
        throw DataError("block " + B.name + ": cuspidal Levi not contained in the group");
    B.dim_center = levi_center(T.group, J, B.cuspidal_levi.sigma).dim;
    // The Frobenius of L0 inside L is determined by that of L up to L-conjugacy.
    B.relative = relative_coset(T.group, T.levi.K, T.levi.sigma, J);
    B.cuspidal_levi = make_levi(T.group, J, compose(B.relative.sigma, inverse(T.group.phi)));
    B.characters = character_table(T.group, B.relative);
    B.systems.clear();
  }

  // Systems.
  const int ns = static_cast<int>(T.systems.size());
  for (int i = 0; i < ns; ++i) {
    LocalSystem& s = T.systems[i];
    if (s.cls < 0 || s.cls >= nc) throw DataError("system with unknown class");
    if (s.block < 0 || s.block >= static_cast<int>(T.blocks.size()))
      throw DataError("system " + s.label(T.classes) + " has unknown block");
    const UnipotentClass& C = T.classes[s.cls];
    const Block& B = T.blocks[s.block];
    const int twice = dimL - C.dim - B.dim_center;
    if (twice % 2 != 0)
      throw DataError("system " + s.label(T.classes) + ": c = " + std::to_string(twice) + "/2 is not an integer");
    if (s.c != twice / 2 && s.c != kUnsetC)
      throw DataError("system " + s.label(T.classes) + ": declared c = " + std::to_string(s.c) +
                      " but (codim - dim Z(L0))/2 = " + std::to_string(twice / 2));
    s.c = twice / 2;
    if (!s.f_stable) continue;
    s.chi_index = C.find_irr(s.chi);
    if (s.chi_index < 0)
      throw DataError("system " + s.label(T.classes) + ": character not among F-stable characters of A(u)");
    s.w_index = B.characters.find(s.w_char);
    if (s.w_index < 0)
      throw DataError("system " + s.label(T.classes) + ": no character " + s.w_char + " of the relative Weyl group");
    T.blocks[s.block].systems.push_back(i);
  }
  for (int i = 0; i < ns; ++i)
    for (int j = i + 1; j < ns; ++j)
      if (T.systems[i].cls == T.systems[j].cls && T.systems[i].chi == T.systems[j].chi)
        throw DataError("duplicate system " + T.systems[i].label(T.classes));

  for (auto& B : T.blocks) {
    if (B.systems.empty()) throw DataError("block " + B.name + " has no F-stable systems");
    std::sort(B.systems.begin(), B.systems.end(), [&](int x, int y) {
      const auto& sx = T.systems[x];
      const auto& sy = T.systems[y];
      const int dx = T.classes[sx.cls].dim, dy = T.classes[sy.cls].dim;
      if (dx != dy) return dx > dy;
      const std::string lx = sx.label(T.classes), ly = sy.label(T.classes);
      return reverse_ties ? lx > ly : lx < ly;
    });
    // The correspondence is a bijection onto Irr of the relative Weyl group.
    std::set<int> used;
    int regular = 0;
    for (int i : B.systems) {
      if (!used.insert(T.systems[i].w_index).second)
        throw DataError("block " + B.name + ": character " + T.systems[i].w_char + " used twice");
      if (T.systems[i].cls == reg) ++regular;
    }
    if (static_cast<int>(used.size()) != B.characters.size())
      throw DataError("block " + B.name + ": correspondence is not onto the relative Weyl group characters");
    if (regular > 1) throw DataError("block " + B.name + " has two systems supported on the regular class");
  }
}

// ---------------------------------------------------------------- built-ins

namespace {

QPoly gl_order(int k) {
  QPoly p(1);
  for (int j = 1; j <= k; ++j) p *= QPoly::monomial(CycQ(1), j) - QPoly(1);
  return p.shift(k * (k - 1) / 2);
}

// |C_{GL_m(q)}(u_lambda)|.
QPoly gl_centralizer(const Partition& lambda) {
  const Partition conj = conjugate_partition(lambda);
  long e = 0;
  for (int x : conj) e += static_cast<long>(x) * x;
  std::map<int, int> mult;
  for (int x : lambda) ++mult[x];
  QPoly p(1);
  for (auto [part, m] : mult) {
    e -= static_cast<long>(m) * m;
    p *= gl_order(m);
  }
  return p.shift(static_cast<int>(e));
}

bool dominated(const Partition& a, const Partition& b) {
  long sa = 0, sb = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

bool is_gl_type(const RootDatumF& G) { return G.name.rfind("GL", 0) == 0 && G.rank == G.ss_rank + 1; }

UnipotentClass trivial_a(std::string label, int dim, QPoly c0) {
  UnipotentClass C;
  C.label = std::move(label);
  C.dim = dim;
  C.a_classes = {"1"};
  C.a_class_sizes = {1};
  C.c0_order = {std::move(c0)};
  C.a_irr = {"1"};
  C.a_values = {{CycQ(1)}};
  return C;
}

Block principal_block(const RootDatumF& G, const LeviDatum& L) {
  Block B;
  B.name = "principal";
  B.cuspidal_levi = make_levi(G, {}, L.v);
  B.cuspidal = "1";
  return B;
}

SpringerTable torus_table(const RootDatumF& G, const LeviDatum& L) {
  SpringerTable T;
  T.group = G;
  T.levi = L;
  T.provenance = "built-in: maximal torus";
  T.classes.push_back(trivial_a("1", 0, torus_order(G, {}, L.sigma)));
  T.blocks.push_back(principal_block(G, L));
  LocalSystem s;
  s.cls = 0;
  s.chi = "1";
  s.w_char = "1";
  s.c = kUnsetC;
  T.systems.push_back(s);
  return T;
}

SpringerTable gl_levi_table(const RootDatumF& G, const LeviDatum& L) {
  const int n = G.rank;
  const std::vector<int> chain = G.all_simple();
  const std::vector<int> perm = chain_point_permutation(G, chain, L.sigma);
  // Blocks of consecutive points joined by K.
  std::vector<int> block_of(n, 0), block_start{0}, block_size{1};
  for (int i = 1; i < n; ++i) {
    if (std::find(L.K.begin(), L.K.end(), i - 1) == L.K.end()) {
      block_start.push_back(i);
      block_size.push_back(0);
    }
    block_of[i] = static_cast<int>(block_start.size()) - 1;
    ++block_size.back();
  }
  const auto comps = G.components(L.K);
  auto component_of_block = [&](int b) {
    for (size_t c = 0; c < comps.size(); ++c)
      if (comps[c].front() == block_start[b]) return static_cast<int>(c);
    return -1;
  };
  struct Orbit {
    int size, d, component;
    std::vector<int> components;
  };
  std::vector<Orbit> orbits;
  std::vector<bool> done(block_start.size(), false);
  for (size_t b = 0; b < block_start.size(); ++b) {
    if (done[b]) continue;
    Orbit o{block_size[b], 0, component_of_block(static_cast<int>(b)), {}};
    size_t cur = b;
    do {
      done[cur] = true;
      ++o.d;
      if (block_size[cur] >= 2) o.components.push_back(component_of_block(static_cast<int>(cur)));
      cur = block_of[perm[block_start[cur]]];
    } while (cur != b);
    orbits.push_back(o);
  }
  std::vector<int> big;  // orbits with block size >= 2
  for (size_t o = 0; o < orbits.size(); ++o)
    if (orbits[o].size >= 2) big.push_back(static_cast<int>(o));

  SpringerTable T;
  T.group = G;
  T.levi = L;
  T.provenance = "built-in: Levi subgroup of GL_n, classes by Jordan type";
  T.blocks.push_back(principal_block(G, L));

  std::vector<std::vector<Partition>> choices;
  for (int o : big) choices.push_back(partitions(orbits[o].size));
  std::vector<std::vector<Partition>> class_parts;
  std::vector<size_t> idx(big.size(), 0);
  while (true) {
    std::vector<std::string> comp_label(comps.size());
    int dim = 0;
    QPoly c0(1);
    std::vector<Partition> parts;
    for (size_t k = 0; k < big.size(); ++k) {
      const Partition& lam = choices[k][idx[k]];
      const Orbit& o = orbits[big[k]];
      parts.push_back(lam);
      long sq = 0;
      for (int x : conjugate_partition(lam)) sq += static_cast<long>(x) * x;
      dim += o.d * static_cast<int>(o.size * o.size - sq);
      for (int c : o.components) comp_label[c] = partition_label(lam);
    }
    std::vector<Partition> orbit_part(orbits.size(), Partition{1});
    for (size_t k = 0; k < big.size(); ++k) orbit_part[big[k]] = parts[k];
    for (size_t o = 0; o < orbits.size(); ++o) c0 *= gl_centralizer(orbit_part[o]).substitute_power(orbits[o].d);
    std::string label;
    for (size_t c = 0; c < comps.size(); ++c) label += (c ? "," : "") + comp_label[c];
    if (comps.empty()) label = "1";
    T.classes.push_back(trivial_a(label, dim, c0));
    class_parts.push_back(parts);
    LocalSystem s;
    s.cls = static_cast<int>(T.classes.size()) - 1;
    s.chi = "1";
    s.w_char = label;
    s.c = kUnsetC;
    T.systems.push_back(s);
    size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  for (size_t b = 0; b < T.classes.size(); ++b)
    for (size_t a = 0; a < T.classes.size(); ++a) {
      if (a == b) continue;
      bool le = true;
      for (size_t k = 0; k < big.size(); ++k)
        if (!dominated(class_parts[a][k], class_parts[b][k])) le = false;
      if (le) T.classes[b].below.push_back(static_cast<int>(a));
    }
  return T;
}

}  // namespace

SpringerTable levi_springer(const RootDatumF& G, const LeviDatum& L) {
  SpringerTable T;
  if (L.K.empty()) T = torus_table(G, L);
  else if (is_gl_type(G)) T = gl_levi_table(G, L);
  else throw DataError("data pack required: no built-in Springer table for " + L.name + " in " + G.name);
  finalize_table(T);
  return T;
}

SpringerTable gl_springer(int n) {
  if (n < 1) throw DataError("GL_n needs n >= 1");
  const RootDatumF G = make_root_datum("GL" + std::to_string(n));
  const LeviDatum L = whole_group(G);
  SpringerTable T = n == 1 ? torus_table(G, L) : gl_levi_table(G, L);
  finalize_table(T);
  return T;
}

// ---------------------------------------------------------------- packs

namespace {

constexpr const char* kSchema = "greenfn-pack/1";

template <typename T>
T field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw DataError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DataError(where + ": field '" + key + "': " + e.what());
  }
}

QPoly poly_field(const json& j, const char* key, const std::string& where) {
  const std::string text = field<std::string>(j, key, where);
  try {
    return parse_qpoly(text);
  } catch (const std::invalid_argument& e) {
    throw DataError(where + ": " + e.what());
  }
}

CycQ cyc_value(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return CycQ(Rational(v.get<long>()));
    return CycQ::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw DataError(where + ": bad character value: " + e.what());
  }
}

RootDatumF group_from_json(const json& g) {
  if (g.contains("type")) return make_root_datum(field<std::string>(g, "type", "group"));
  return build_root_datum(field<std::string>(g, "name", "group"), field<IntMat>(g, "cartan", "group"),
                          field<IntMat>(g, "simple_roots", "group"), field<IntMat>(g, "simple_coroots", "group"),
                          field<IntMat>(g, "phi", "group"));
}

json group_to_json(const RootDatumF& G) {
  try {
    const RootDatumF H = make_root_datum(G.name);
    if (H.cartan == G.cartan && H.simple_roots == G.simple_roots && H.phi_x == G.phi_x)
      return json{{"type", G.name}};
  } catch (const DataError&) {
  }
  return json{{"name", G.name},
              {"cartan", G.cartan},
              {"simple_roots", G.simple_roots},
              {"simple_coroots", G.simple_coroots},
              {"phi", G.phi_x}};
}

}  // namespace

SpringerTable load_pack(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DataError(std::string("pack is not valid JSON: ") + e.what());
  }
  if (field<std::string>(doc, "schema", "pack") != kSchema)
    throw DataError(std::string("pack schema must be ") + kSchema);
  SpringerTable T;
  T.group = group_from_json(field<json>(doc, "group", "pack"));
  T.residue = doc.value("residue", "");
  if (!T.residue.empty()) set_residue(T.group, T.residue);
  T.levi = doc.contains("levi") ? parse_levi(T.group, doc["levi"].get<std::string>()) : whole_group(T.group);
  T.provenance = doc.value("provenance", "");

  for (const auto& jc : field<json>(doc, "classes", "pack")) {
    UnipotentClass C;
    C.label = field<std::string>(jc, "label", "class");
    const std::string where = "class " + C.label;
    C.dim = field<int>(jc, "dim", where);
    const json A = jc.value("A", json{{"order", 1},
                                      {"classes", json::array({json{{"label", "1"}, {"size", 1}, {"C0", jc.value("C0", "")}}})},
                                      {"characters", json::array({json{{"label", "1"}, {"values", {1}}}})}});
    C.a_order = field<long>(A, "order", where);
    for (const auto& ja : field<json>(A, "classes", where)) {
      C.a_classes.push_back(field<std::string>(ja, "label", where));
      C.a_class_sizes.push_back(field<long>(ja, "size", where));
      C.c0_order.push_back(poly_field(ja, "C0", where));
    }
    for (const auto& jx : field<json>(A, "characters", where)) {
      C.a_irr.push_back(field<std::string>(jx, "label", where));
      std::vector<CycQ> row;
      for (const auto& v : field<json>(jx, "values", where)) row.push_back(cyc_value(v, where));
      C.a_values.push_back(std::move(row));
    }
    T.classes.push_back(std::move(C));
  }
  // Closure lists refer to labels; resolve after all classes are known.
  const auto& jclasses = doc["classes"];
  for (size_t i = 0; i < jclasses.size(); ++i)
    for (const auto& l : jclasses[i].value("below", std::vector<std::string>{})) {
      const int k = T.find_class(l);
      if (k < 0) throw DataError("class " + T.classes[i].label + ": unknown class " + l + " in closure");
      T.classes[i].below.push_back(k);
    }

  for (const auto& jb : field<json>(doc, "blocks", "pack")) {
    Block B;
    B.name = field<std::string>(jb, "name", "block");
    const std::string where = "block " + B.name;
    B.cuspidal_levi = parse_levi(T.group, field<std::string>(jb, "levi", where));
    B.cuspidal = field<std::string>(jb, "cuspidal", where);
    B.assumption = jb.value("assumption", "");
    T.blocks.push_back(std::move(B));
  }
  for (const auto& js : field<json>(doc, "systems", "pack")) {
    LocalSystem s;
    const std::string cls = field<std::string>(js, "class", "system");
    s.cls = T.find_class(cls);
    if (s.cls < 0) throw DataError("system on unknown class " + cls);
    s.chi = js.value("chi", "1");
    const std::string where = "system " + s.label(T.classes);
    s.block = T.find_block(field<std::string>(js, "block", where));
    if (s.block < 0) throw DataError(where + ": unknown block");
    s.f_stable = js.value("f_stable", true);
    s.w_char = s.f_stable ? field<std::string>(js, "W", where) : js.value("W", "");
    s.c = js.contains("c") ? field<int>(js, "c", where) : kUnsetC;
    T.systems.push_back(std::move(s));
  }
  if (doc.contains("induced"))
    for (const auto& [levi, map] : doc["induced"].items())
      for (const auto& [from, to] : map.items()) {
        const std::string target = to.get<std::string>();
        if (T.find_class(target) < 0) throw DataError("induced map: unknown class " + target);
        T.induced[levi][from] = target;
      }
  finalize_table(T);
  for (const auto& jb : doc["blocks"])
    if (jb.contains("relative_order")) {
      const int b = T.find_block(jb["name"].get<std::string>());
      if (jb["relative_order"].get<long>() != T.blocks[b].relative.order())
        throw DataError("block " + T.blocks[b].name + ": declared relative Weyl group order " +
                        std::to_string(jb["relative_order"].get<long>()) + " but the root datum gives " +
                        std::to_string(T.blocks[b].relative.order()));
    }
  // Induction degrees against every maximal torus.
  if (T.levi.K.size() == T.group.all_simple().size())
    for (const auto& L : all_levis(T.group))
      if (L.K.empty()) check_induction_degrees(T, levi_springer(T.group, L));
  return T;
}

SpringerTable load_pack_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read pack " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_pack(ss.str());
}

std::string export_pack(const SpringerTable& T) {
  json doc;
  doc["schema"] = kSchema;
  doc["group"] = group_to_json(T.group);
  if (T.levi.K.size() != T.group.all_simple().size()) doc["levi"] = T.levi.name;
  if (!T.residue.empty()) doc["residue"] = T.residue;
  doc["provenance"] = T.provenance;
  json classes = json::array();
  for (const auto& C : T.classes) {
    json jc;
    jc["label"] = C.label;
    jc["dim"] = C.dim;
    std::vector<std::string> below;
    for (int b : C.below) below.push_back(T.classes[b].label);
    jc["below"] = below;
    json A;
    A["order"] = C.a_order;
    A["classes"] = json::array();
    for (int a = 0; a < C.num_f_classes(); ++a)
      A["classes"].push_back({{"label", C.a_classes[a]}, {"size", C.a_class_sizes[a]}, {"C0", format_phi(C.c0_order[a])}});
    A["characters"] = json::array();
    for (size_t i = 0; i < C.a_irr.size(); ++i) {
      std::vector<std::string> values;
      for (const auto& v : C.a_values[i]) values.push_back(v.str());
      A["characters"].push_back({{"label", C.a_irr[i]}, {"values", values}});
    }
    jc["A"] = A;
    classes.push_back(jc);
  }
  doc["classes"] = classes;
  json blocks = json::array();
  for (const auto& B : T.blocks) {
    json jb{{"name", B.name}, {"levi", B.cuspidal_levi.name}, {"cuspidal", B.cuspidal},
            {"relative_order", B.relative.order()}};
    if (B.conditional()) jb["assumption"] = B.assumption;
    blocks.push_back(jb);
  }
  doc["blocks"] = blocks;
  json systems = json::array();
  for (const auto& s : T.systems) {
    json js{{"class", T.classes[s.cls].label}, {"chi", s.chi}, {"block", T.blocks[s.block].name}, {"c", s.c}};
    if (s.f_stable) js["W"] = s.w_char;
    else js["f_stable"] = false;
    systems.push_back(js);
  }
  doc["systems"] = systems;
  if (!T.induced.empty()) doc["induced"] = T.induced;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------- induction

std::optional<int> induced_class(const SpringerTable& G, const SpringerTable& L, int cls) {
  if (same_set(L.levi.K, G.levi.K)) return G.find_class(L.classes.at(cls).label);
  auto it = G.induced.find(L.levi.name);
  if (it != G.induced.end()) {
    auto jt = it->second.find(L.classes.at(cls).label);
    if (jt != it->second.end()) return G.find_class(jt->second);
    return std::nullopt;
  }
  if (L.levi.K.empty()) return G.regular_class();
  if (is_gl_type(G.group) && G.levi.K.size() == G.group.all_simple().size()) {
    // Sum of the Jordan types of the blocks of L.
    Partition total;
    int covered = 0;
    const std::string& label = L.classes.at(cls).label;
    if (label != "1") {
      size_t start = 0;
      while (start <= label.size()) {
        size_t end = label.find(',', start);
        if (end == std::string::npos) end = label.size();
        const Partition p = parse_partition(label.substr(start, end - start));
        for (size_t i = 0; i < p.size(); ++i) {
          if (total.size() <= i) total.push_back(0);
          total[i] += p[i];
          covered += p[i];
        }
        start = end + 1;
      }
    }
    for (int k = covered; k < G.group.rank; ++k) {
      if (total.empty()) total.push_back(0);
      total[0] += 1;
    }
    std::sort(total.rbegin(), total.rend());
    return G.find_class(partition_label(total));
  }
  return std::nullopt;
}

std::optional<int> saturated_class(const SpringerTable& G, const SpringerTable& L, int cls) {
  if (same_set(L.levi.K, G.levi.K)) return G.find_class(L.classes.at(cls).label);
  if (L.levi.K.empty()) {
    int lowest = 0;
    for (size_t c = 1; c < G.classes.size(); ++c)
      if (G.classes[c].dim < G.classes[lowest].dim) lowest = static_cast<int>(c);
    return lowest;
  }
  if (is_gl_type(G.group) && G.levi.K.size() == G.group.all_simple().size()) {
    // Union of the Jordan blocks, singleton components contributing a block of size 1.
    Partition total;
    int covered = 0;
    const std::string& label = L.classes.at(cls).label;
    if (label != "1") {
      size_t start = 0;
      while (start <= label.size()) {
        size_t end = label.find(',', start);
        if (end == std::string::npos) end = label.size();
        for (int p : parse_partition(label.substr(start, end - start))) {
          total.push_back(p);
          covered += p;
        }
        start = end + 1;
      }
    }
    for (int k = covered; k < G.group.rank; ++k) total.push_back(1);
    std::sort(total.rbegin(), total.rend());
    return G.find_class(partition_label(total));
  }
  return std::nullopt;
}

int matching_block(const SpringerTable& G, const SpringerTable& L, int b) {
  const Block& B = L.blocks.at(b);
  for (size_t i = 0; i < G.blocks.size(); ++i)
    if (same_set(G.blocks[i].cuspidal_levi.K, B.cuspidal_levi.K) && G.blocks[i].cuspidal == B.cuspidal)
      return static_cast<int>(i);
  throw DataError("no block of " + G.levi.name + " with the cuspidal datum of block " + B.name + " of " +
                  L.levi.name);
}

std::vector<std::vector<RatFunc>> induction_pairing(const SpringerTable& G, const SpringerTable& L, int b) {
  const Block& BL = L.blocks.at(b);
  const Block& BG = G.blocks.at(matching_block(G, L, b));
  std::vector<std::vector<RatFunc>> I;
  for (int i : BG.systems) {
    const ClassFunction res =
        restrict_function(BG.relative, BL.relative, BG.characters.as_class_function(G.systems[i].w_index));
    std::vector<RatFunc> row;
    for (int g : BL.systems)
      row.push_back(inner_product(BL.relative, res, BL.characters.as_class_function(L.systems[g].w_index)));
    I.push_back(std::move(row));
  }
  return I;
}

void check_induction_degrees(const SpringerTable& G, const SpringerTable& L) {
  for (size_t b = 0; b < L.blocks.size(); ++b) {
    const auto I = induction_pairing(G, L, static_cast<int>(b));
    const Block& BG = G.blocks[matching_block(G, L, static_cast<int>(b))];
    for (size_t i = 0; i < I.size(); ++i)
      for (size_t j = 0; j < I[i].size(); ++j) {
        const auto& si = G.systems[BG.systems[i]];
        const auto& sj = L.systems[L.blocks[b].systems[j]];
        if (!I[i][j].is_zero() && si.c < sj.c)
          throw DataError("induction pairing of " + si.label(G.classes) + " and " + sj.label(L.classes) +
                          " is nonzero but c decreases");
      }
  }
}

}  // namespace greenfn
