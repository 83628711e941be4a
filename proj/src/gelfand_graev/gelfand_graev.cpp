#include "greenfn/gelfand_graev.hpp"

#include "greenfn/errors.hpp"
#include "greenfn/green.hpp"

namespace greenfn {

namespace {

TwistedCoset ambient_relative(const SpringerTable& L, const LeviDatum& M, const Block& B) {
  return relative_coset(L.group, M.K, M.sigma, B.cuspidal_levi.K);
}

QPoly as_poly(const RatFunc& r, const std::string& what) {
  if (!r.is_polynomial()) throw InvariantError(what + " is not a polynomial: " + r.str());
  return r.as_polynomial();
}

}  // namespace

int regular_system(const SpringerTable& T, int block) {
  for (int s : T.blocks.at(block).systems)
    if (T.systems[s].cls == T.regular_class()) return s;
  throw DataError("block " + T.blocks[block].name + " has no system on the regular class");
}

QPoly induced_gg_norm(const LeviDatum& M, const SpringerTable& L, int system) {
  const int b = L.systems.at(system).block;
  if (regular_system(L, b) != system) throw DataError("system " + L.systems[system].label(L.classes) + " is not regular");
  const Block& B = L.blocks[b];
  const TwistedCoset& WL = B.relative;
  const TwistedCoset WG = ambient_relative(L, M, B);
  const std::vector<int> fusion = class_fusion(WL, WG);
  std::vector<long> meet(WG.num_classes(), 0);
  for (int c = 0; c < WL.num_classes(); ++c) meet[fusion[c]] += WL.class_size[c];
  const ClassFunction Z = torus_weight(L, b);
  RatFunc sum;
  for (int c = 0; c < WL.num_classes(); ++c) {
    const Rational k = Rational(WL.class_size[c] * WG.order() * meet[fusion[c]]) /
                       Rational(WL.order() * WL.order() * WG.class_size[fusion[c]]);
    sum += Z[c] * RatFunc(k);
  }
  const long zc = levi_center(L.group, L.levi.K, L.levi.sigma).component_order;
  return as_poly(sum * RatFunc(zc * zc), "induced Gelfand-Graev norm");
}

QPoly gg_norm(const SpringerTable& T, int system, int other) {
  const int b = T.systems.at(system).block;
  if (regular_system(T, b) != system || regular_system(T, T.systems.at(other).block) != other)
    throw DataError("Gelfand-Graev norms need regular systems");
  if (system != other) return QPoly();
  const CenterInfo z = levi_center(T.group, T.levi.K, T.levi.sigma);
  const LeviDatum& L0 = T.blocks[b].cuspidal_levi;
  const int dz0 = levi_center(T.group, L0.K, L0.sigma).dim;
  return z.connected_order.shift(dz0 - z.dim) * CycQ(Rational(z.component_order * z.component_order));
}

RatFunc y_norm(const SpringerTable& T, int system, int other) {
  if (regular_system(T, T.systems.at(system).block) != system ||
      regular_system(T, T.systems.at(other).block) != other)
    throw DataError("Y norms need regular systems");
  if (system != other) return RatFunc();
  const CenterInfo z = levi_center(T.group, T.levi.K, T.levi.sigma);
  return RatFunc(1).shift(-static_cast<int>(T.levi.K.size())) / RatFunc(z.connected_order);
}

MackeyCheck cuspidal_mackey_check(const LeviDatum& M, const SpringerTable& L, int system) {
  const Block& B = L.blocks.at(L.systems.at(system).block);
  if (B.cuspidal_levi.K.size() != L.levi.K.size())
    throw DataError("(" + L.levi.name + ", " + L.systems[system].label(L.classes) + ") is not a cuspidal pair");
  const TwistedCoset WG = ambient_relative(L, M, B);
  const long fixed = WG.centralizer_order(WG.classify(B.relative.sigma));
  const CenterInfo z = levi_center(L.group, L.levi.K, L.levi.sigma);
  const QPoly own = z.connected_order * CycQ(Rational(z.component_order * z.component_order));
  MackeyCheck m;
  m.lhs = own * CycQ(Rational(fixed));
  m.rhs = CycQ(Rational(fixed)) * gg_norm(L, system);
  m.prop6 = induced_gg_norm(M, L, system);
  m.equal = m.lhs == m.rhs && m.lhs == m.prop6;
  return m;
}

}  // namespace greenfn
