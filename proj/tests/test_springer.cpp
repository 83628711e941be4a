#include <gtest/gtest.h>

#include <json.hpp>

#include "greenfn/errors.hpp"
#include "greenfn/phi_format.hpp"
#include "greenfn/springer.hpp"

using namespace greenfn;
using json = nlohmann::json;

namespace {

QPoly P(const std::string& s) { return parse_qpoly(s); }

// Number of unipotent elements, sum of all F-class sizes.
RatFunc unipotent_count(const SpringerTable& T) {
  RatFunc total;
  for (int c = 0; c < static_cast<int>(T.classes.size()); ++c)
    for (int a = 0; a < T.classes[c].num_f_classes(); ++a) total += T.class_size(c, a);
  return total;
}

}  // namespace

TEST(Springer, GL2Table) {
  const SpringerTable T = gl_springer(2);
  ASSERT_EQ(T.classes.size(), 2u);
  const int reg = T.find_class("2");
  EXPECT_EQ(T.regular_class(), reg);
  EXPECT_EQ(T.classes[reg].dim, 2);
  EXPECT_EQ(T.centralizer_order(reg, 0), P("q(q-1)"));
  EXPECT_EQ(T.systems[T.blocks[0].systems[0]].cls, reg);
  EXPECT_EQ(T.systems[T.blocks[0].systems[1]].c, 1);
}

TEST(Springer, SmallCases) {
  const SpringerTable T1 = gl_springer(1);
  EXPECT_EQ(T1.classes.size(), 1u);
  EXPECT_EQ(T1.systems.size(), 1u);
  EXPECT_EQ(T1.systems[0].c, 0);
  const SpringerTable T3 = gl_springer(3);
  const int a = T3.find_class("111"), b = T3.find_class("21"), c = T3.find_class("3");
  EXPECT_TRUE(T3.in_closure(a, b));
  EXPECT_TRUE(T3.in_closure(b, c));
  EXPECT_FALSE(T3.in_closure(c, b));
  EXPECT_THROW(gl_springer(0), DataError);
}

TEST(Springer, UnipotentCountAndCValues) {
  for (int n = 1; n <= 4; ++n) {
    const SpringerTable T = gl_springer(n);
    EXPECT_EQ(unipotent_count(T), RatFunc(QPoly::monomial(CycQ(1), n * (n - 1)))) << n;
    for (const auto& s : T.systems)
      EXPECT_EQ(s.c, partition_n(parse_partition(T.classes[s.cls].label))) << n;
  }
}

TEST(Springer, TwistedLeviTables) {
  const RootDatumF GL4 = make_root_datum("GL4");
  const SpringerTable L = levi_springer(GL4, parse_levi(GL4, "GL2(q^2)"));
  ASSERT_EQ(L.classes.size(), 2u);
  const int triv = L.find_class("11,11");
  ASSERT_GE(triv, 0);
  EXPECT_EQ(L.centralizer_order(triv, 0), P("q^{2}(q^{2}-1)(q^{4}-1)"));
  EXPECT_EQ(L.centralizer_order(L.find_class("2,2"), 0), P("q^{2}(q^{2}-1)"));
  // c = d * n(lambda) for an orbit of length d.
  for (const auto& s : L.systems) EXPECT_EQ(s.c, s.cls == triv ? 2 : 0);
  const SpringerTable T = levi_springer(GL4, parse_levi(GL4, "GL1(q^2)xGL1xGL1"));
  EXPECT_EQ(T.centralizer_order(0, 0), P("(q^{2}-1)(q-1)^2"));
  for (const auto& M : all_levis(GL4)) {
    const SpringerTable S = levi_springer(GL4, M);
    EXPECT_EQ(unipotent_count(S), RatFunc(QPoly::monomial(CycQ(1), S.dim() - GL4.rank))) << M.name;
  }
}

TEST(Springer, TorusTablesForAnyGroup) {
  const RootDatumF G2 = make_root_datum("G2");
  for (const auto& L : all_levis(G2)) {
    if (!L.K.empty()) {
      if (L.K.size() < 2) {
        EXPECT_THROW(levi_springer(G2, L), DataError);
      }
      continue;
    }
    const SpringerTable T = levi_springer(G2, L);
    EXPECT_EQ(T.centralizer_order(0, 0), torus_order(G2, {}, L.sigma));
  }
}

TEST(Springer, InducedClasses) {
  const SpringerTable G = gl_springer(4);
  const RootDatumF& GL4 = G.group;
  const SpringerTable L = levi_springer(GL4, parse_levi(GL4, "GL2xGL2"));
  EXPECT_EQ(G.classes[*induced_class(G, L, L.find_class("11,11"))].label, "22");
  EXPECT_EQ(G.classes[*induced_class(G, L, L.find_class("2,2"))].label, "4");
  EXPECT_EQ(G.classes[*induced_class(G, L, L.find_class("2,11"))].label, "31");
  const SpringerTable M = levi_springer(GL4, parse_levi(GL4, "GL2xGL1xGL1"));
  EXPECT_EQ(G.classes[*induced_class(G, M, M.find_class("11"))].label, "31");
  EXPECT_EQ(*induced_class(G, G, 2), 2);
  const SpringerTable T = levi_springer(GL4, parse_levi(GL4, "T"));
  EXPECT_EQ(*induced_class(G, T, 0), G.regular_class());
}

TEST(Springer, PackRoundTrip) {
  for (int n = 1; n <= 3; ++n) {
    const SpringerTable T = gl_springer(n);
    const std::string text = export_pack(T);
    const SpringerTable U = load_pack(text);
    EXPECT_EQ(export_pack(U), text) << n;
  }
  const RootDatumF GL4 = make_root_datum("GL4");
  const SpringerTable L = levi_springer(GL4, parse_levi(GL4, "GL2(q^2)"));
  EXPECT_EQ(export_pack(load_pack(export_pack(L))), export_pack(L));
}

TEST(Springer, PackValidation) {
  const json base = json::parse(export_pack(gl_springer(3)));
  {
    json doc = base;
    doc["systems"][0]["c"] = 7;
    EXPECT_THROW(load_pack(doc.dump()), DataError);
  }
  {
    // Moving the regular class to odd dimension makes c a half-integer.
    json doc = base;
    for (auto& c : doc["classes"])
      if (c["label"] == "21") {
        c["dim"] = 5;
        c["A"]["classes"][0]["C0"] = "q^{2}(q-1)^{2}";
      }
    for (auto& s : doc["systems"]) s.erase("c");
    try {
      load_pack(doc.dump());
      FAIL() << "accepted a half-integer c";
    } catch (const DataError& e) {
      EXPECT_NE(std::string(e.what()).find("not an integer"), std::string::npos) << e.what();
    }
  }
  {
    // Two systems on the regular class in one block.
    json doc = base;
    for (auto& c : doc["classes"])
      if (c["label"] == "3") {
        c["A"] = json::parse(R"J({"order": 2,
          "classes": [{"label": "1", "size": 1, "C0": "q^{2}(q-1)"}, {"label": "z", "size": 1, "C0": "q^{2}(q-1)"}],
          "characters": [{"label": "1", "values": [1, 1]}, {"label": "-1", "values": [1, -1]}]})J");
      }
    for (auto& s : doc["systems"])
      if (s["class"] == "21") {
        s["class"] = "3";
        s["chi"] = "-1";
        s.erase("c");
      }
    try {
      load_pack(doc.dump());
      FAIL() << "accepted two regular systems";
    } catch (const DataError& e) {
      EXPECT_NE(std::string(e.what()).find("regular"), std::string::npos) << e.what();
    }
  }
  {
    json doc = base;
    doc["systems"][1]["W"] = doc["systems"][0]["W"];
    EXPECT_THROW(load_pack(doc.dump()), DataError);
  }
  {
    json doc = base;
    doc["blocks"][0]["relative_order"] = 5;
    EXPECT_THROW(load_pack(doc.dump()), DataError);
  }
  {
    json doc = base;
    doc["classes"][0]["A"]["classes"][0]["C0"] = "q^{2}";
    EXPECT_THROW(load_pack(doc.dump()), DataError);
  }
  EXPECT_THROW(load_pack("{not json"), DataError);
  EXPECT_THROW(load_pack(R"({"schema": "other"})"), DataError);
}

TEST(Springer, InductionPairing) {
  const SpringerTable G = gl_springer(3);
  const RootDatumF& GL3 = G.group;
  const SpringerTable L = levi_springer(GL3, parse_levi(GL3, "GL2xGL1"));
  const auto I = induction_pairing(G, L, 0);
  ASSERT_EQ(I.size(), 3u);
  ASSERT_EQ(I[0].size(), 2u);
  // Restriction from S3 to S2: (3) -> (2), (21) -> (2) + (11), (111) -> (11).
  EXPECT_EQ(I[0][0], RatFunc(1));
  EXPECT_EQ(I[0][1], RatFunc(0));
  EXPECT_EQ(I[1][0], RatFunc(1));
  EXPECT_EQ(I[1][1], RatFunc(1));
  EXPECT_EQ(I[2][1], RatFunc(1));
  EXPECT_NO_THROW(check_induction_degrees(G, L));
  for (const auto& M : all_levis(make_root_datum("GL4")))
    EXPECT_NO_THROW(check_induction_degrees(gl_springer(4), levi_springer(make_root_datum("GL4"), M)));
}
