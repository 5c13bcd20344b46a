#include <doctest.h>

#include "conjlim/charpoly.hpp"
#include "conjlim/catalog.hpp"
#include "conjlim/error.hpp"
#include "conjlim/pfqf.hpp"
#include "test_util.hpp"

using namespace conjlim;
using testutil::E;

namespace {

MonicPoly quartic(long a3, long a2, long a1, long a0) {
  return MonicPoly{4, {Rational(a3), Rational(a2), Rational(a1), Rational(a0)}};
}

// (x^2 - l2)(x^2 + t2) expanded
MonicPoly so31_member(const Rational& l2, const Rational& t2) {
  return MonicPoly{4, {Rational(0), t2 - l2, Rational(0), -(l2 * t2)}};
}

// (x - t)((x - t)^2 - s)(x + 3t) expanded
MonicPoly h2xr_member(const Rational& t, const Rational& s) {
  const Rational a2 = Rational(-6) * t * t - s;
  const Rational a1 = Rational(8) * t * t * t - Rational(2) * s * t;
  const Rational a0 = Rational(-3) * t * t * t * t + Rational(3) * s * t * t;
  return MonicPoly{4, {Rational(0), a2, a1, a0}};
}

}  // namespace

TEST_CASE("characteristic polynomials of simple matrices") {
  CHECK(char_poly(RatMatrix::identity(2)) == MonicPoly{2, {Rational(-2), Rational(1)}});
  CHECK(char_poly(RatMatrix(4, 4)) ==
        MonicPoly{4, {Rational(0), Rational(0), Rational(0), Rational(0)}});
  std::vector<Rational> d{1, 2, 3};
  CHECK(char_poly(RatMatrix::diagonal(d)) ==
        MonicPoly{3, {Rational(-6), Rational(11), Rational(-6)}});
  CHECK_THROWS_AS(char_poly(RatMatrix(2, 3)), Error);
}

TEST_CASE("char poly is a conjugation invariant") {
  SampleRng rng(kDefaultSeed + 11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.next(2, 4));
    const RatMatrix m = testutil::random_matrix(rng, n);
    const auto [g, ginv] = testutil::random_invertible(rng, n);
    CHECK(char_poly(g * m * ginv) == char_poly(m));
  }
}

TEST_CASE("so31 membership is the closed coefficient condition") {
  CHECK(in_char_so31(quartic(0, 0, 0, 0)));          // x^4
  CHECK(in_char_so31(quartic(0, 3, 0, -4)));         // (x^2-1)(x^2+4)
  CHECK_FALSE(in_char_so31(quartic(0, -6, 8, -3)));  // (x-1)^3(x+3): a_1 != 0
  CHECK_FALSE(in_char_so31(quartic(0, -2, 0, 1)));   // (x^2-1)^2 needs theta^2 < 0
  CHECK_THROWS_AS(in_char_so31(MonicPoly{3, {Rational(0), Rational(0), Rational(0)}}), Error);
}

TEST_CASE("so31 membership against a brute-force parameter grid") {
  // every grid instance of (x^2-l^2)(x^2+t^2) must pass; pushing the
  // constant term positive leaves the family
  for (long ln = 0; ln <= 4; ++ln)
    for (long ld = 1; ld <= 2; ++ld)
      for (long tn = 0; tn <= 4; ++tn)
        for (long td = 1; td <= 2; ++td) {
          const Rational l(ln, ld), t(tn, td);
          const MonicPoly p = so31_member(l * l, t * t);
          CHECK(in_char_so31(p));
          if (!(l * l * t * t).is_zero()) {
            MonicPoly off = p;
            off.coeffs[3] = (l * l * t * t);  // a_0 > 0 is unreachable with real l, t
            CHECK_FALSE(in_char_so31(off));
          }
        }
}

TEST_CASE("h2xr membership: displayed members and non-members") {
  CHECK(in_char_h2xr(h2xr_member(Rational(0), Rational(1))));  // x^2(x^2-1)
  CHECK(h2xr_member(Rational(0), Rational(1)) == quartic(0, -1, 0, 0));
  CHECK(in_char_h2xr(h2xr_member(Rational(1), Rational(0))));  // (x-1)^3(x+3)
  CHECK(h2xr_member(Rational(1), Rational(0)) == quartic(0, -6, 8, -3));
  CHECK(in_char_h2xr(quartic(0, 0, 0, 0)));
  CHECK_FALSE(in_char_h2xr(quartic(0, 3, 0, -4)));  // (x^2-1)(x^2+4)
  CHECK_FALSE(in_char_h2xr(quartic(1, 0, 0, 0)));   // trace obstruction
  CHECK_THROWS_AS(in_char_h2xr(MonicPoly{2, {Rational(0), Rational(0)}}), Error);
}

TEST_CASE("h2xr membership on a parameter grid, negative s included") {
  for (long tn = -3; tn <= 3; ++tn)
    for (long sn = -4; sn <= 4; ++sn)
      for (long sd = 1; sd <= 2; ++sd) CHECK(in_char_h2xr(h2xr_member(Rational(tn), Rational(sn, sd))));
}

TEST_CASE("h2xr membership can require an irrational parameter") {
  // t = sqrt(2), s = 8 gives rational coefficients (0, -20, 0, 36)
  CHECK(in_char_h2xr(quartic(0, -20, 0, 36)));
}

TEST_CASE("obstruction witness report") {
  const auto rep = obstruction_witness(kDefaultSeed, 1000);
  std::vector<Rational> d{1, 1, 1, -3};
  CHECK(rep.witness == RatMatrix::diagonal(d));
  CHECK(rep.witness_poly == quartic(0, -6, 8, -3));
  CHECK(rep.witness_in_h2xr);
  CHECK_FALSE(rep.witness_in_so31);
  CHECK(rep.samples == 1000);
  CHECK(rep.all_samples_odd_free);
  CHECK(rep.pass());
}

TEST_CASE("even-dimensional so(p,q) has even characteristic polynomials") {
  SampleRng rng(kDefaultSeed + 12);
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {1, 3}, {3, 1}, {4, 0}}) {
    const auto fam = make_orthogonal(p, q);
    for (int trial = 0; trial < 20; ++trial) {
      RatMatrix y(fam.n, fam.n);
      for (const auto& b : fam.algebra.basis()) y += rng.rational(5, 3) * b;
      const MonicPoly cp = char_poly(y);
      for (int k = 1; k < fam.n; k += 2) CHECK(cp.coeff_of(k).is_zero());
    }
  }
}

TEST_CASE("hyperbolic chart limits keep their polynomials in the ambient family") {
  SampleRng rng(kDefaultSeed + 13);
  const SignatureSequence root{{{1, 3}}};
  for (const auto& node : enumerate_limits(root, Mode::Geometry)) {
    const auto algebra = isom_algebra(node);
    for (int trial = 0; trial < 20; ++trial) {
      RatMatrix y(4, 4);
      for (const auto& b : algebra.basis()) y += rng.rational(4, 2) * b;
      CHECK(in_char_so31(char_poly(y)));
    }
  }
}
