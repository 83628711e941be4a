#include <gtest/gtest.h>

#include "greenfn/errors.hpp"
#include "greenfn/gelfand_graev.hpp"
#include "greenfn/phi_format.hpp"

using namespace greenfn;

namespace {

QPoly P(const std::string& s) { return parse_qpoly(s); }

}  // namespace

TEST(GelfandGraev, GL2Values) {
  const SpringerTable G = gl_springer(2);
  const int iota = regular_system(G, 0);
  EXPECT_EQ(gg_norm(G, iota), P("q(q-1)"));
  EXPECT_EQ(y_norm(G, iota), RatFunc(1) / RatFunc(P("q(q-1)")));
  EXPECT_EQ(induced_gg_norm(G, iota), P("q(q-1)"));
  const SpringerTable T = levi_springer(G.group, parse_levi(G.group, "T"));
  EXPECT_EQ(induced_gg_norm(T, 0), P("2(q-1)^2"));
  const MackeyCheck m = cuspidal_mackey_check(whole_group(G.group), T, 0);
  EXPECT_EQ(m.lhs, P("2(q-1)^2"));
  EXPECT_TRUE(m.equal);
}

TEST(GelfandGraev, WholeGroupSpecialization) {
  for (int n = 1; n <= 5; ++n) {
    const SpringerTable G = gl_springer(n);
    EXPECT_EQ(induced_gg_norm(G, regular_system(G, 0)), gg_norm(G, regular_system(G, 0))) << n;
  }
  for (const char* type : {"GL4", "GL5"}) {
    const RootDatumF R = make_root_datum(type);
    for (const auto& M : all_levis(R)) {
      const SpringerTable L = levi_springer(R, M);
      const int iota = regular_system(L, 0);
      EXPECT_EQ(induced_gg_norm(M, L, iota), gg_norm(L, iota)) << M.name;
    }
  }
}

TEST(GelfandGraev, MackeyOnCuspidalTori) {
  for (const char* type : {"GL3", "A2", "B2", "G2", "2A2", "2A3", "3D4"}) {
    const RootDatumF R = make_root_datum(type);
    for (const auto& M : all_levis(R)) {
      if (!M.K.empty()) continue;
      const SpringerTable T = levi_springer(R, M);
      const MackeyCheck m = cuspidal_mackey_check(whole_group(R), T, 0);
      EXPECT_TRUE(m.equal) << type << " " << M.name << ": " << m.lhs.str() << " " << m.rhs.str() << " "
                           << m.prop6.str();
    }
  }
}

TEST(GelfandGraev, Rejections) {
  const SpringerTable G = gl_springer(3);
  const SpringerTable L = levi_springer(G.group, parse_levi(G.group, "GL2xGL1"));
  EXPECT_THROW(cuspidal_mackey_check(whole_group(G.group), L, regular_system(L, 0)), DataError);
  const int other = G.blocks[0].systems.back();
  EXPECT_THROW(gg_norm(G, other), DataError);
}
