#include <gtest/gtest.h>

#include <map>

#include "greenfn/characters.hpp"
#include "greenfn/errors.hpp"
#include "greenfn/phi_format.hpp"

using namespace greenfn;

namespace {

TwistedCoset weyl_coset(const RootDatumF& G, const std::vector<int>& K, const Perm& sigma) {
  return relative_coset(G, K, sigma, {});
}

void expect_orthonormal(const TwistedCoset& C, const CharacterTable& T, const std::string& what) {
  ASSERT_EQ(T.size(), C.num_classes()) << what;
  for (int i = 0; i < T.size(); ++i)
    for (int j = 0; j < T.size(); ++j)
      EXPECT_EQ(inner_product(C, T.as_class_function(i), T.as_class_function(j)), RatFunc(i == j ? 1 : 0))
          << what << " " << T.labels[i] << " " << T.labels[j];
}

// z_rho = prod_i i^{m_i} m_i!.
Integer centralizer_size(const Partition& rho) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int r : rho) ++mult[r];
  for (auto [i, m] : mult)
    for (int k = 1; k <= m; ++k) z *= Integer(i) * k;
  return z;
}

}  // namespace

TEST(Characters, PartitionsAndLabels) {
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(partitions(7).size(), 15u);
  EXPECT_EQ(partitions(3).front(), Partition({3}));
  EXPECT_EQ(partition_label({2, 1}), "21");
  EXPECT_EQ(partition_label({12, 1}), "12.1");
  EXPECT_EQ(parse_partition("12.1"), Partition({12, 1}));
  EXPECT_EQ(parse_partition("311"), Partition({3, 1, 1}));
  EXPECT_THROW(parse_partition("13"), DataError);
  EXPECT_EQ(conjugate_partition({3, 1}), Partition({2, 1, 1}));
  EXPECT_EQ(partition_n({2, 1, 1}), 3);
}

TEST(Characters, SymmetricGroupValues) {
  EXPECT_EQ(symmetric_character({2, 1}, {2, 1}), 0);
  EXPECT_EQ(symmetric_character({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(symmetric_character({2, 1}, {3}), -1);
  EXPECT_EQ(symmetric_character({1, 1, 1}, {2, 1}), -1);
  EXPECT_EQ(symmetric_character({3, 2}, {1, 1, 1, 1, 1}), 5);
  EXPECT_EQ(symmetric_character({2, 2}, {4}), 0);
  EXPECT_EQ(symmetric_character({3, 1}, {4}), -1);
}

TEST(Characters, ColumnOrthogonalityInSymmetricGroups) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& rho : partitions(n)) {
      for (const auto& sigma : partitions(n)) {
        Integer sum = 0;
        for (const auto& lambda : partitions(n))
          sum += symmetric_character(lambda, rho) * symmetric_character(lambda, sigma);
        EXPECT_EQ(sum, rho == sigma ? centralizer_size(rho) : Integer(0));
      }
      // Sign twist: chi_{lambda'} = sgn * chi_lambda.
      int odd = 0;
      for (int r : rho) odd += (r + 1) % 2;
      for (const auto& lambda : partitions(n))
        EXPECT_EQ(symmetric_character(conjugate_partition(lambda), rho),
                  (odd % 2 ? -1 : 1) * symmetric_character(lambda, rho));
    }
}

TEST(Characters, TypeATables) {
  const RootDatumF GL3 = make_root_datum("GL3");
  const TwistedCoset W = weyl_coset(GL3, GL3.all_simple(), GL3.phi);
  const CharacterTable T = character_table(GL3, W);
  expect_orthonormal(W, T, "GL3");
  ASSERT_GE(T.find("21"), 0);
  const int refl = W.classify(GL3.reflections[0]);
  EXPECT_EQ(T.values[T.find("21")][refl], CycQ(0));
  EXPECT_EQ(T.values[T.find("111")][refl], CycQ(-1));
  EXPECT_EQ(T.values[T.find("21")][W.classify(GL3.identity())], CycQ(2));

  const RootDatumF GL5 = make_root_datum("GL5");
  const TwistedCoset W5 = weyl_coset(GL5, {0, 2, 3}, GL5.phi);
  const CharacterTable T5 = character_table(GL5, W5);
  expect_orthonormal(W5, T5, "GL2xGL3");
  EXPECT_GE(T5.find("11,21"), 0);
}

TEST(Characters, TwistedTypeA) {
  const RootDatumF GL4 = make_root_datum("GL4");
  const LeviDatum L = parse_levi(GL4, "GL2(q^2)");
  const TwistedCoset C = weyl_coset(GL4, L.K, L.sigma);
  const CharacterTable T = character_table(GL4, C);
  expect_orthonormal(C, T, "GL2(q^2)");
  EXPECT_EQ(T.labels, (std::vector<std::string>{"2,2", "11,11"}));

  const RootDatumF GL6 = make_root_datum("GL6");
  for (const auto& M : all_levis(GL6)) {
    const TwistedCoset CM = weyl_coset(GL6, M.K, M.sigma);
    expect_orthonormal(CM, character_table(GL6, CM), M.name);
  }
}

TEST(Characters, DihedralAndCyclic) {
  for (const std::string name : {"B2", "G2", "C2"}) {
    const RootDatumF G = make_root_datum(name);
    const TwistedCoset W = weyl_coset(G, G.all_simple(), G.phi);
    expect_orthonormal(W, character_table(G, W), name);
  }
  const RootDatumF GL4 = make_root_datum("GL4");
  const TwistedCoset N = relative_coset(GL4, GL4.all_simple(), GL4.phi, {0, 2});
  const CharacterTable T = character_table(GL4, N);
  expect_orthonormal(N, T, "N(GL2xGL2)");
  EXPECT_EQ(T.labels, (std::vector<std::string>{"1", "z1"}));
}

TEST(Characters, UnsupportedNeedsPack) {
  for (const std::string name : {"GU3", "2A3sc", "3D4", "F4", "D4"}) {
    const RootDatumF G = make_root_datum(name);
    const TwistedCoset W = weyl_coset(G, G.all_simple(), G.phi);
    EXPECT_THROW(character_table(G, W), DataError) << name;
  }
}

TEST(Characters, InductionAndReciprocity) {
  const RootDatumF GL2 = make_root_datum("GL2");
  const TwistedCoset W = weyl_coset(GL2, GL2.all_simple(), GL2.phi);
  const TwistedCoset one = weyl_coset(GL2, {}, GL2.phi);
  const ClassFunction ind = induce_function(one, W, {RatFunc(1)});
  EXPECT_EQ(ind[W.classify(GL2.identity())], RatFunc(2));
  EXPECT_EQ(ind[W.classify(GL2.reflections[0])], RatFunc(0));

  const RootDatumF GL4 = make_root_datum("GL4");
  const TwistedCoset big = weyl_coset(GL4, GL4.all_simple(), GL4.phi);
  const TwistedCoset small = weyl_coset(GL4, {0, 2}, GL4.phi);
  const CharacterTable TB = character_table(GL4, big), TS = character_table(GL4, small);
  for (int i = 0; i < TB.size(); ++i)
    for (int j = 0; j < TS.size(); ++j)
      EXPECT_EQ(inner_product(big, TB.as_class_function(i), induce_function(small, big, TS.as_class_function(j))),
                inner_product(small, restrict_function(big, small, TB.as_class_function(i)),
                              TS.as_class_function(j)));
  // Twisted subcoset of W(GL4): GL2(q^2) sits inside with sigma in W.
  const LeviDatum L = parse_levi(GL4, "GL2(q^2)");
  const TwistedCoset tw = weyl_coset(GL4, L.K, L.sigma);
  const CharacterTable TT = character_table(GL4, tw);
  for (int i = 0; i < TB.size(); ++i)
    for (int j = 0; j < TT.size(); ++j)
      EXPECT_EQ(inner_product(big, TB.as_class_function(i), induce_function(tw, big, TT.as_class_function(j))),
                inner_product(tw, restrict_function(big, tw, TB.as_class_function(i)), TT.as_class_function(j)));
  EXPECT_THROW(class_fusion(big, small), DataError);
}

TEST(Characters, WeightedPairing) {
  const RootDatumF GL2 = make_root_datum("GL2");
  const TwistedCoset W = weyl_coset(GL2, GL2.all_simple(), GL2.phi);
  ClassFunction Z, triv;
  for (int c = 0; c < W.num_classes(); ++c) {
    Z.emplace_back(torus_order(GL2, {}, W.representative(c)));
    triv.emplace_back(1);
  }
  EXPECT_EQ(weighted_pairing(W, triv, triv, Z), RatFunc(parse_qpoly("q(q-1)")));
}
