#include <gtest/gtest.h>

#include "greenfn/errors.hpp"
#include "greenfn/verify.hpp"

using namespace greenfn;

TEST(Verify, SplitCompositions) {
  const SpringerTable G = gl_springer(3);
  EXPECT_EQ(*split_composition(G, levi_springer(G.group, parse_levi(G.group, "T"))), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(*split_composition(G, G), (std::vector<int>{3}));
  const SpringerTable L = levi_springer(G.group, parse_levi(G.group, "GL2xGL1"));
  const auto comp = split_composition(G, L);
  ASSERT_TRUE(comp);
  EXPECT_EQ(comp->size(), 2u);
  const SpringerTable H = gl_springer(4);
  EXPECT_FALSE(split_composition(H, levi_springer(H.group, parse_levi(H.group, "GL2(q^2)"))));
}

TEST(Verify, OrthogonalityAndGreenPolynomials) {
  for (int n = 1; n <= 4; ++n) {
    const LawCheck o = orthogonality_check(gl_springer(n));
    EXPECT_TRUE(o.pass) << o.detail;
    const LawCheck g = green_polynomial_check(n);
    EXPECT_TRUE(g.pass) << g.detail;
  }
}

TEST(Verify, OracleComparison) {
  for (int n = 2; n <= 3; ++n) {
    const SpringerTable G = gl_springer(n);
    const FiniteGL Gq(n, 2);
    for (const auto& M : all_levis(G.group)) {
      const SpringerTable L = levi_springer(G.group, M);
      if (!split_composition(G, L)) continue;
      const OracleReport r = oracle_compare(TwoVarEngine(G, L), Gq);
      EXPECT_TRUE(r.pass()) << M.name << " " << oracle_report_json({r});
      EXPECT_EQ(r.entries.size(), G.classes.size() * L.classes.size());
    }
  }
  const SpringerTable H = gl_springer(4);
  const SpringerTable T = levi_springer(H.group, parse_levi(H.group, "GL2(q^2)"));
  EXPECT_THROW(oracle_compare(TwoVarEngine(H, T), FiniteGL(2, 2)), DataError);
}

TEST(Verify, Suites) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& c : gelfand_graev_checks(gl_springer(n))) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
  const SpringerTable G = gl_springer(3);
  const SpringerTable L = levi_springer(G.group, parse_levi(G.group, "GL2xGL1"));
  const auto all = run_suite(G, L, "all");
  EXPECT_EQ(all.size(), 7u);
  for (const auto& c : all) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
  EXPECT_EQ(run_suite(G, L, "support").size(), 1u);
  EXPECT_THROW(run_suite(G, L, "nonsense"), DataError);
}
