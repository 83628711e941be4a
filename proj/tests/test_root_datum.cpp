#include <gtest/gtest.h>

#include <numeric>

#include "greenfn/errors.hpp"
#include "greenfn/phi_format.hpp"
#include "greenfn/root_datum.hpp"

using namespace greenfn;

namespace {

QPoly P(const std::string& s) { return parse_qpoly(s); }

long sum_sizes(const TwistedCoset& C) {
  return std::accumulate(C.class_size.begin(), C.class_size.end(), 0L);
}

}  // namespace

TEST(RootDatum, RootCountsAndPairing) {
  EXPECT_EQ(make_root_datum("GL3").num_positive, 3);
  EXPECT_EQ(make_root_datum("B2").num_positive, 4);
  EXPECT_EQ(make_root_datum("G2").num_positive, 6);
  EXPECT_EQ(make_root_datum("F4").num_positive, 24);
  EXPECT_EQ(make_root_datum("E6sc").num_positive, 36);
  EXPECT_EQ(make_root_datum("D4").num_positive, 12);
  EXPECT_THROW(make_root_datum("X9"), DataError);
  EXPECT_THROW(make_root_datum("2B2"), DataError);
}

TEST(RootDatum, GroupOrders) {
  EXPECT_EQ(group_order(make_root_datum("GL2")), P("q\\Phi_{1}^{2}\\Phi_{2}"));
  EXPECT_EQ(group_order(make_root_datum("GL3")), P("q^{3}\\Phi_{1}^{3}\\Phi_{2}\\Phi_{3}"));
  EXPECT_EQ(group_order(make_root_datum("SL2")), P("q\\Phi_{1}\\Phi_{2}"));
  EXPECT_EQ(group_order(make_root_datum("GU3")), P("q^{3}(q+1)(q^{2}-1)(q^{3}+1)"));
  EXPECT_EQ(group_order(make_root_datum("G2")), P("q^{6}(q^{2}-1)(q^{6}-1)"));
  EXPECT_EQ(group_order(make_root_datum("B2")), P("q^{4}(q^{2}-1)(q^{4}-1)"));
}

TEST(RootDatum, TwistedE6Order) {
  const RootDatumF G = make_root_datum("2E6sc");
  const QPoly order = group_order(G);
  EXPECT_EQ(order, P("q^{36}(q^{2}-1)(q^{5}+1)(q^{6}-1)(q^{8}-1)(q^{9}+1)(q^{12}-1)"));
  EXPECT_EQ(order.degree(), 78);
}

TEST(RootDatum, TwistedClassesPartitionTheGroup) {
  for (const std::string name : {"GL3", "GL4", "GU3", "B2", "G2", "2A3sc", "D4", "3D4"}) {
    const RootDatumF G = make_root_datum(name);
    const TwistedCoset C = relative_coset(G, G.all_simple(), G.phi, {});
    EXPECT_EQ(sum_sizes(C), C.order()) << name;
    for (int c = 0; c < C.num_classes(); ++c) EXPECT_EQ(C.class_size[c] * C.centralizer_order(c), C.order());
    // Torus order is a class function.
    for (size_t i = 0; i < C.elements.size(); ++i)
      EXPECT_EQ(torus_order(G, {}, C.coset_element(static_cast<int>(i))),
                torus_order(G, {}, C.representative(C.class_of[i])));
  }
  EXPECT_EQ(relative_coset(make_root_datum("GL3"), {0, 1}, make_root_datum("GL3").phi, {}).num_classes(), 3);
  EXPECT_EQ(relative_coset(make_root_datum("GL4"), {0, 1, 2}, make_root_datum("GL4").phi, {}).num_classes(), 5);
}

TEST(RootDatum, RelativeWeylGroups) {
  const RootDatumF GL3 = make_root_datum("GL3");
  EXPECT_EQ(relative_coset(GL3, GL3.all_simple(), GL3.phi, {}).order(), 6);
  EXPECT_EQ(relative_coset(GL3, GL3.all_simple(), GL3.phi, GL3.all_simple()).order(), 1);
  // Enumerate N_W(W_I)/W_I for GL2 x GL2 in GL4 by brute force over S4.
  const RootDatumF GL4 = make_root_datum("GL4");
  const std::vector<int> I{0, 2};
  const auto W = generate_group(GL4.reflections, GL4.identity());
  std::vector<Perm> WI = generate_group({GL4.reflections[0], GL4.reflections[2]}, GL4.identity());
  long normalizer = 0;
  for (const auto& w : W) {
    bool normalizes = true;
    for (const auto& x : WI) {
      const Perm c = compose(compose(w, x), inverse(w));
      if (std::find(WI.begin(), WI.end(), c) == WI.end()) normalizes = false;
    }
    if (normalizes) ++normalizer;
  }
  const TwistedCoset N = relative_coset(GL4, GL4.all_simple(), GL4.phi, I);
  EXPECT_EQ(N.order(), normalizer / static_cast<long>(WI.size()));
  EXPECT_EQ(N.order(), 2);
}

TEST(RootDatum, TorusOrders) {
  const RootDatumF GL2 = make_root_datum("GL2");
  EXPECT_EQ(torus_order(GL2, {}, GL2.phi), P("(q-1)^2"));
  EXPECT_EQ(torus_order(GL2, {}, compose(GL2.reflections[0], GL2.phi)), P("q^{2}-1"));
  const RootDatumF GL3 = make_root_datum("GL3");
  EXPECT_EQ(torus_order(GL3, {}, GL3.identity()), P("(q-1)^3"));
  // A rank one lattice on which the twist is -1.
  const RootDatumF GU1 = make_root_datum("GU1");
  EXPECT_EQ(torus_order(GU1, {}, GU1.phi), P("q+1"));
  EXPECT_EQ(torus_order(GL3, GL3.all_simple(), GL3.identity()), P("q-1"));
}

TEST(RootDatum, LeviEnumeration) {
  EXPECT_EQ(all_levis(make_root_datum("GL2")).size(), 3u);
  EXPECT_EQ(all_levis(make_root_datum("GL3")).size(), 5u);
  EXPECT_EQ(all_levis(make_root_datum("GL4")).size(), 11u);
  const RootDatumF GL3 = make_root_datum("GL3");
  std::vector<std::string> names;
  for (const auto& L : all_levis(GL3)) names.push_back(L.name);
  EXPECT_NE(std::find(names.begin(), names.end(), "GL1(q^3)"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "GL2xGL1"), names.end());
  EXPECT_EQ(names.back(), "GL3");
}

TEST(RootDatum, LeviOrders) {
  const RootDatumF GL3 = make_root_datum("GL3");
  EXPECT_EQ(levi_order(GL3, parse_levi(GL3, "GL2xGL1")), P("q(q-1)^{3}(q+1)"));
  EXPECT_EQ(levi_order(GL3, parse_levi(GL3, "GL1(q^3)")), P("q^{3}-1"));
  EXPECT_EQ(levi_order(GL3, parse_levi(GL3, "GL1(q^2)xGL1")), P("(q^{2}-1)(q-1)"));
  const RootDatumF GL4 = make_root_datum("GL4");
  EXPECT_EQ(levi_order(GL4, parse_levi(GL4, "GL2(q^2)")), P("q^{2}(q^{2}-1)(q^{4}-1)"));
  EXPECT_THROW(parse_levi(GL3, "GL2xGL2"), DataError);
  EXPECT_THROW(make_levi(GL3, {0}, GL3.reflections[1]), DataError);
}

TEST(RootDatum, CentreData) {
  const RootDatumF SL2 = make_root_datum("SL2");
  CenterInfo z = levi_center(SL2, SL2.all_simple(), SL2.phi);
  EXPECT_EQ(z.component_order, 2);
  EXPECT_EQ(z.fixed_components, 2);
  EXPECT_EQ(z.dim, 0);
  EXPECT_EQ(z.connected_order, QPoly(1));
  const RootDatumF GL2 = make_root_datum("GL2");
  z = levi_center(GL2, GL2.all_simple(), GL2.phi);
  EXPECT_EQ(z.component_order, 1);
  EXPECT_EQ(z.connected_order, P("q-1"));
  RootDatumF E = make_root_datum("2E6sc");
  z = levi_center(E, E.all_simple(), E.phi);
  EXPECT_EQ(z.component_order, 3);
  EXPECT_EQ(z.fixed_components, 1);
  set_residue(E, "q=-1mod3");
  z = levi_center(E, E.all_simple(), E.phi);
  EXPECT_EQ(z.fixed_components, 3);
  EXPECT_EQ(levi_center(make_root_datum("PGL3"), {0, 1}, make_root_datum("PGL3").phi).component_order, 1);
}
