#include <gtest/gtest.h>

#include <json.hpp>
#include <map>

#include "greenfn/errors.hpp"
#include "greenfn/green.hpp"
#include "greenfn/phi_format.hpp"

using namespace greenfn;

namespace {

QPoly P(const std::string& s) { return parse_qpoly(s); }

int class_of_word(const SpringerTable& T, int block, const std::vector<int>& word) {
  const TwistedCoset& W = T.blocks[block].relative;
  return W.classify(compose(T.group.from_word(word), W.sigma));
}

// sum_u Q_w(u) conj(Q_w'(u)) / |C(u)^F| against the closed form.
void expect_orthogonality(const SpringerTable& T, const std::string& what) {
  const auto sols = solve_all(T);
  for (size_t b1 = 0; b1 < sols.size(); ++b1)
    for (size_t b2 = 0; b2 < sols.size(); ++b2) {
      const TwistedCoset& W1 = T.blocks[b1].relative;
      const TwistedCoset& W2 = T.blocks[b2].relative;
      const ClassFunction Z = torus_weight(T, static_cast<int>(b1));
      for (int w = 0; w < W1.num_classes(); ++w) {
        const auto Qw = one_var_green(T, sols[b1], w);
        for (int v = 0; v < W2.num_classes(); ++v) {
          const auto Qv = one_var_green(T, sols[b2], v);
          RatFunc sum;
          for (size_t c = 0; c < T.classes.size(); ++c)
            for (int a = 0; a < T.classes[c].num_f_classes(); ++a)
              sum += RatFunc(Qw[c][a] * Qv[c][a].conjugate(), T.centralizer_order(static_cast<int>(c), a));
          const RatFunc expected =
              (b1 == b2 && w == v) ? RatFunc(W1.centralizer_order(w)) / Z[w] : RatFunc(0);
          EXPECT_EQ(sum, expected) << what << " blocks " << b1 << "," << b2 << " classes " << w << "," << v;
        }
      }
    }
}

std::map<std::pair<std::string, std::string>, std::string> labelled_p(const SpringerTable& T) {
  std::map<std::pair<std::string, std::string>, std::string> out;
  const BlockSolution s = lusztig_shoji_solve(T, 0);
  for (size_t i = 0; i < s.basis.size(); ++i)
    for (size_t k = 0; k < s.basis.size(); ++k)
      out[{T.systems[s.basis[i]].label(T.classes), T.systems[s.basis[k]].label(T.classes)}] = s.P[i][k].str();
  return out;
}

}  // namespace

TEST(Green, GL2Values) {
  const SpringerTable T = gl_springer(2);
  const BlockSolution s = lusztig_shoji_solve(T, 0);
  const int one = T.find_class("11"), reg = T.find_class("2");
  const int w1 = class_of_word(T, 0, {}), ws = class_of_word(T, 0, {0});
  const auto Q1 = one_var_green(T, s, w1), Qs = one_var_green(T, s, ws);
  EXPECT_EQ(Q1[one][0], P("q+1"));
  EXPECT_EQ(Q1[reg][0], QPoly(1));
  EXPECT_EQ(Qs[one][0], P("1-q"));
  EXPECT_EQ(Qs[reg][0], QPoly(1));
  EXPECT_EQ(s.Lambda[0][0], RatFunc(P("q(q-1)")));
}

TEST(Green, TrivialAndRegularCases) {
  const SpringerTable T1 = gl_springer(1);
  const BlockSolution s1 = lusztig_shoji_solve(T1, 0);
  EXPECT_EQ(s1.P, (std::vector<std::vector<QPoly>>{{QPoly(1)}}));
  EXPECT_EQ(one_var_green(T1, s1, 0)[0][0], QPoly(1));
  for (int n = 2; n <= 4; ++n) {
    const SpringerTable T = gl_springer(n);
    const BlockSolution s = lusztig_shoji_solve(T, 0);
    ASSERT_EQ(T.systems[s.basis[0]].cls, T.regular_class());
    for (const auto& v : s.qt[0]) EXPECT_EQ(v, RatFunc(1));
    const int cox = class_of_word(T, 0, [&] {
      std::vector<int> w;
      for (int i = 0; i < n - 1; ++i) w.push_back(i);
      return w;
    }());
    EXPECT_EQ(one_var_green(T, s, cox)[T.regular_class()][0], QPoly(1));
  }
}

TEST(Green, Orthogonality) {
  for (int n = 1; n <= 4; ++n) expect_orthogonality(gl_springer(n), "GL" + std::to_string(n));
  const RootDatumF GL4 = make_root_datum("GL4");
  for (const auto& L : all_levis(GL4)) expect_orthogonality(levi_springer(GL4, L), L.name);
  const RootDatumF GL5 = make_root_datum("GL5");
  expect_orthogonality(levi_springer(GL5, parse_levi(GL5, "GL2(q^2)xGL1")), "GL2(q^2)xGL1");
}

TEST(Green, OrderIndependence) {
  for (int n = 3; n <= 5; ++n) {
    const SpringerTable T = gl_springer(n);
    SpringerTable R = T;
    finalize_table(R, true);
    EXPECT_EQ(labelled_p(T), labelled_p(R)) << n;
  }
}

TEST(Green, GL3Matrix) {
  const SpringerTable T = gl_springer(3);
  const BlockSolution s = lusztig_shoji_solve(T, 0);
  // Basis (3), (21), (111); modified Kostka-Foulkes entries.
  EXPECT_EQ(s.P[1][0], QPoly(1));
  EXPECT_EQ(s.P[2][1], P("q+1"));
  EXPECT_EQ(s.P[2][0], QPoly(1));
  EXPECT_EQ(s.P[0][1], QPoly());
  const auto j = nlohmann::json::parse(solution_json(T, s));
  EXPECT_EQ(j["basis"][0], "3");
}

TEST(Green, InconsistentDataRejected) {
  auto doc = nlohmann::json::parse(export_pack(gl_springer(3)));
  for (auto& c : doc["classes"])
    if (c["label"] == "21") c["A"]["classes"][0]["C0"] = "q^{4}(q-1)";
  const SpringerTable T = load_pack(doc.dump());
  EXPECT_THROW(lusztig_shoji_solve(T, 0), DataError);
}
