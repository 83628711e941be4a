#include <gtest/gtest.h>

#include <random>

#include "greenfn/phi_format.hpp"

using namespace greenfn;

namespace {

CycQ random_cycq(std::mt19937& rng) {
  static const int conductors[] = {1, 3, 4, 5, 6, 12};
  std::uniform_int_distribution<int> pick(0, 5), coeff(-4, 4), den(1, 3);
  const int n = conductors[pick(rng)];
  CycQ x;
  for (int k = 0; k < n; ++k) {
    const int c = coeff(rng);
    if (c != 0) x += CycQ::root_of_unity(n, k) * CycQ(Rational(c, den(rng)));
  }
  return x;
}

QPoly random_qpoly(std::mt19937& rng, bool rational) {
  std::uniform_int_distribution<int> deg(0, 4), coeff(-5, 5);
  std::vector<CycQ> v(deg(rng) + 1);
  for (auto& c : v) c = rational ? CycQ(coeff(rng)) : random_cycq(rng);
  return QPoly(std::move(v));
}

}  // namespace

TEST(CycQ, ConjugateExamples) {
  EXPECT_EQ(CycQ(Rational(3, 2)).conjugate(), CycQ(Rational(3, 2)));
  EXPECT_EQ(CycQ::root_of_unity(3).conjugate(), CycQ::root_of_unity(3, 2));
  EXPECT_TRUE((CycQ(1) + CycQ::root_of_unity(3) + CycQ::root_of_unity(3, 2)).is_zero());
}

TEST(CycQ, CanonicalFormAcrossConductors) {
  // zeta_4^2 = -1, zeta_6 = -zeta_3^2, zeta_12^4 = zeta_3.
  EXPECT_EQ(CycQ::root_of_unity(4, 2), CycQ(-1));
  EXPECT_EQ(CycQ::root_of_unity(6), -CycQ::root_of_unity(3, 2));
  EXPECT_EQ(CycQ::root_of_unity(12, 4), CycQ::root_of_unity(3));
  const CycQ i = CycQ::root_of_unity(4);
  const CycQ w = CycQ::root_of_unity(3);
  const CycQ mixed = i * w;
  EXPECT_EQ(mixed.conductor(), 12);
  EXPECT_EQ(mixed * i.conjugate(), w);
  EXPECT_TRUE((mixed * mixed.conjugate()).is_one());
  // sqrt(-3) = zeta_3 - zeta_3^2 squares to -3.
  const CycQ s = w - w.conjugate();
  EXPECT_EQ(s * s, CycQ(-3));
}

TEST(CycQ, RingLawsRandom) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const CycQ a = random_cycq(rng), b = random_cycq(rng), c = random_cycq(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    EXPECT_EQ((a + b).conjugate(), a.conjugate() + b.conjugate());
    EXPECT_EQ(a.conjugate().conjugate(), a);
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(CycQ, TextRoundTrip) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    const CycQ a = random_cycq(rng);
    EXPECT_EQ(CycQ::parse(a.str()), a) << a.str();
  }
  EXPECT_EQ(CycQ::root_of_unity(3).str(), "E(3)");
}

TEST(QPoly, RingLawsRandom) {
  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    const QPoly a = random_qpoly(rng, false), b = random_qpoly(rng, false),
                c = random_qpoly(rng, false);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    if (!b.is_zero()) {
      auto [quot, rem] = a.divmod(b);
      EXPECT_EQ(quot * b + rem, a);
      EXPECT_LT(rem.degree(), b.degree());
    }
  }
}

TEST(QPoly, EvalMatchesSubstitution) {
  const QPoly p = QPoly::from_integers({-2, 2, 7});
  EXPECT_EQ(p.eval(CycQ(3)), CycQ(-2 + 6 + 63));
  EXPECT_EQ(p.eval(CycQ(Rational(1, 2))), CycQ(Rational(-2 + 1) + Rational(7, 4)));
}

TEST(RatFunc, ReducesAndInverts) {
  const QPoly q = QPoly::q();
  const RatFunc r(q * q - QPoly(1), q - QPoly(1));
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r.as_polynomial(), q + QPoly(1));
  const RatFunc s = RatFunc(QPoly(1)) / RatFunc(q * (q - QPoly(1)));
  EXPECT_EQ(s * RatFunc(q * q - q), RatFunc(1));
  EXPECT_EQ(s.shift(1), RatFunc(QPoly(1), q - QPoly(1)));
}

TEST(PhiFactorization, Examples) {
  const QPoly q = QPoly::q();
  EXPECT_EQ(format_phi(q + QPoly(1)), "\\Phi_{2}");
  EXPECT_EQ(format_phi(q * q + q + QPoly(1)), "\\Phi_{3}");
  const QPoly p = (QPoly(4) * q + QPoly(1)) * q * (q + QPoly(1));
  auto f = phi_factorize(p);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->q_power, 1);
  ASSERT_EQ(f->phis.size(), 1u);
  EXPECT_EQ(f->phis[0], std::make_pair(2, 1));
  EXPECT_EQ(f->residual, QPoly(4) * q + QPoly(1));
  EXPECT_EQ(format_phi(p), "(4q+1)q\\Phi_{2}");
}

TEST(PhiFactorization, RefusesNonRational) {
  const QPoly p = QPoly::q() + QPoly(CycQ::root_of_unity(3));
  EXPECT_FALSE(phi_factorize(p));
  EXPECT_EQ(format_phi(p), p.str());
}

TEST(PhiFactorization, ReassembleRandomProducts) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> idx(1, 30), mult(0, 3), qp(0, 3);
  for (int t = 0; t < 60; ++t) {
    QPoly p = random_qpoly(rng, true);
    if (p.is_zero()) continue;
    p = p.shift(qp(rng));
    for (int k = 0; k < 3; ++k) p *= pow(QPoly::cyclotomic(idx(rng)), mult(rng));
    auto f = phi_factorize(p);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->reassemble(), p);
    for (auto [n, m] : f->phis) {
      EXPECT_TRUE(p.divisible_by(pow(QPoly::cyclotomic(n), m)));
      EXPECT_FALSE(f->residual.divisible_by(QPoly::cyclotomic(n)));
    }
    EXPECT_EQ(parse_qpoly(format_phi(p)), p) << format_phi(p);
  }
}

// Entries in the layout of the reference table for 2E6 (q = -1 mod 3).
TEST(PhiFormat, ReferenceTableStringsRoundTrip) {
  const std::vector<std::string> golden = {
      "1",
      "(4q+1)/3",
      "(7q^{2}+2q-2)q/3",
      "\\Phi_{2}^{4}\\Phi_{3}\\Phi_{4}\\Phi_{6}^{2}\\Phi_{8}\\Phi_{10}\\Phi_{12}\\Phi_{18}",
      "(4q+1)q^{4}\\Phi_{2}^{2}/3",
      "\\Phi_{2}\\Phi_{3}",
      "3q+1",
      "2q\\Phi_{2}/3",
      "3q\\Phi_{2}\\Phi_{6}",
      "(-2q-1)\\Phi_{2}",
      "(8q^{3}+2q^{2}+4q-2)q\\Phi_{2}",
      "-q\\Phi_{2}",
      "q^{3}\\Phi_{2}^{2}\\Phi_{6}",
  };
  for (const auto& s : golden) {
    const QPoly p = parse_qpoly(s);
    EXPECT_EQ(format_phi(p), s);
  }
  EXPECT_EQ(parse_qpoly("(4q+1)/3"), (QPoly(4) * QPoly::q() + QPoly(1)) * CycQ(Rational(1, 3)));
}

TEST(PhiFormat, ParserRejectsGarbage) {
  EXPECT_THROW(parse_qpoly("q+"), std::invalid_argument);
  EXPECT_THROW(parse_qpoly("\\Phi_{0}"), std::invalid_argument);
  EXPECT_THROW(parse_qpoly("(q"), std::invalid_argument);
  EXPECT_THROW(parse_qpoly("1/0"), std::invalid_argument);
}
