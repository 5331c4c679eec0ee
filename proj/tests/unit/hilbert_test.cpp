#include <gtest/gtest.h>

#include "hlv/hilbert/hilbert.hpp"
#include "hlv/kernel/kernel.hpp"

namespace hlv {
namespace {

const Poly z = Poly::variable(Var::z);
const Poly w = Poly::variable(Var::w);
const Poly q = Poly::variable(Var::q);
const Poly t = Poly::variable(Var::t);
const Poly T = Poly::variable(Var::T);
const Poly u = Poly::variable(Var::u);
const Poly one(1);

TEST(Hilbert, PhiExamples) {
  EXPECT_EQ(phi_lambda({1}).poly, one);
  EXPECT_EQ(phi_lambda({2, 1}).poly, one + z + w);
  EXPECT_EQ(phi_lambda({3}).poly, one + z + z * z);
  EXPECT_TRUE(phi_lambda({}).poly.is_zero());
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      EXPECT_EQ(phi_lambda(lambda).poly.evaluate(Var::z, 1).evaluate(Var::w, 1), Poly(n));
    }
  }
}

// Independent expansion of the Göttsche product as a polynomial in T.
Poly goettsche_by_polynomials(int n_max) {
  auto trunc = [&](const Poly& p) { return p.truncated(Var::T, static_cast<unsigned>(n_max)); };
  Poly out(1);
  for (int n = 1; n <= n_max; ++n) {
    const Poly tn = T.pow(static_cast<unsigned>(n));
    const Poly num = one + t.pow(static_cast<unsigned>(2 * n + 1)) * q.pow(static_cast<unsigned>(n)) * tn;
    out = trunc(out * num * num);
    for (const Poly& a : {q.pow(static_cast<unsigned>(n - 1)) * t.pow(static_cast<unsigned>(2 * n)),
                          t.pow(static_cast<unsigned>(2 * n + 2)) * q.pow(static_cast<unsigned>(n + 1))}) {
      Poly geo(1);
      Poly power(1);
      for (int j = 1; j * n <= n_max; ++j) {
        power = power * a * tn;
        geo += power;
      }
      out = trunc(out * geo);
    }
  }
  return out;
}

TEST(Hilbert, GoettscheSeries) {
  const TruncatedSeries g = goettsche_series(5);
  EXPECT_EQ(g[0], RationalFunction(1));
  EXPECT_EQ(g[1], RationalFunction(q * q * t.pow(4) + Poly(2) * q * t.pow(3) + t * t));
  EXPECT_EQ(g[1].num().substitute(Var::t, Poly(-1)), (q - one).pow(2));
  const auto coeffs = goettsche_by_polynomials(5).coefficients_in(Var::T);
  for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(g[n], RationalFunction(coeffs[n])) << n;
  // E-polynomials of the Hilbert schemes are palindromic of degree 2n.
  for (unsigned n = 1; n <= 4; ++n) {
    const RationalFunction e = g[n].num().substitute(Var::t, Poly(-1));
    const RationalFunction qq = RationalFunction::variable(Var::q);
    EXPECT_EQ(qq.pow(static_cast<int>(2 * n)) * e.substitute(Var::q, qq.inverse()), e) << n;
  }
}

TEST(Hilbert, MixedHodgeOfHilbertSchemes) {
  const TruncatedSeries g = goettsche_series(4);
  for (int n = 1; n <= 4; ++n) {
    const MultiPartition mu({n == 1 ? Partition{1} : Partition{n - 1, 1}});
    EXPECT_EQ(RationalFunction(conjectural_mhp(mu, 1)), g[static_cast<unsigned>(n)]) << n;
    EXPECT_EQ(e_polynomial(mu, 1), g[static_cast<unsigned>(n)].num().substitute(Var::t, Poly(-1))) << n;
  }
}

TEST(Hilbert, IdentityLowDegrees) {
  const HilbertReport r = hilbert_identity_check(1, 1);
  ASSERT_EQ(r.full.size(), 2u);
  EXPECT_EQ(r.full[0].lhs, RationalFunction(1));
  EXPECT_EQ(r.full[0].rhs, RationalFunction(1));
  EXPECT_EQ(r.full[1].lhs, RationalFunction((z - w).pow(2)));
  EXPECT_EQ(r.full[1].rhs, RationalFunction((z - w).pow(2)));
  EXPECT_TRUE(r.specialized_holds);
}

TEST(Hilbert, IdentityHolds) {
  const HilbertReport r = hilbert_identity_check(6, 5);
  EXPECT_EQ(r.specialized.size(), 7u);
  EXPECT_TRUE(r.specialized_holds);
  EXPECT_EQ(r.full.size(), 6u);
  EXPECT_TRUE(r.full_holds);
}

TEST(Hilbert, Bernoulli) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(3), 0);
  EXPECT_EQ(bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(bernoulli(6), Rational(1, 42));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
}

TEST(Hilbert, Eisenstein) {
  const TruncatedSeries g2 = eisenstein_G(2, 3);
  EXPECT_EQ(g2[0], RationalFunction(Rational(-1, 24)));
  EXPECT_EQ(g2[1], RationalFunction(1));
  EXPECT_EQ(g2[2], RationalFunction(3));
  EXPECT_EQ(g2[3], RationalFunction(4));
  const TruncatedSeries g4 = eisenstein_G(4, 2);
  EXPECT_EQ(g4[0], RationalFunction(Rational(1, 240)));
  EXPECT_EQ(g4[2], RationalFunction(9));
  EXPECT_THROW(eisenstein_G(3, 2), std::invalid_argument);
  EXPECT_THROW(eisenstein_G(0, 2), std::invalid_argument);
}

TEST(Hilbert, Quasimodular) {
  const QuasimodularReport r1 = quasimodular_check(1, 4);
  EXPECT_TRUE(r1.normalization_holds);
  // (e^{u/2} - e^{-u/2})² = u² + u⁴/12 + ...
  EXPECT_EQ(r1.degrees[1].lhs, RationalFunction(u * u + Poly(Rational(1, 12)) * u.pow(4)));
  EXPECT_TRUE(r1.holds);
  const QuasimodularReport r = quasimodular_check(5, 8);
  EXPECT_TRUE(r.normalization_holds);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.degrees.size(), 6u);
}

}  // namespace
}  // namespace hlv
