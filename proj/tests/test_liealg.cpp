#include <doctest.h>

#include "conjlim/catalog.hpp"
#include "conjlim/error.hpp"
#include "conjlim/liealg.hpp"
#include "test_util.hpp"

using namespace conjlim;
using testutil::E;

namespace {

MatrixSubspace so13() {
  std::vector<Rational> d{-1, 1, 1, 1};
  return form_algebra(RatMatrix::diagonal(d));
}

}  // namespace

TEST_CASE("bracket basics") {
  CHECK(bracket(E(2, 0, 1), E(2, 1, 0)) == E(2, 0, 0) - E(2, 1, 1));
  const RatMatrix a = E(3, 0, 1) + E(3, 2, 0);
  CHECK(bracket(a, a).is_zero());
  std::vector<Rational> d{1, -1};
  CHECK(bracket(RatMatrix::diagonal(d), E(2, 0, 1)) == Rational(2) * E(2, 0, 1));
  CHECK_THROWS_AS(bracket(E(2, 0, 1), E(3, 0, 1)), Error);
}

TEST_CASE("jacobi identity on random triples") {
  SampleRng rng(kDefaultSeed + 2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.next(1, 4));
    const RatMatrix a = testutil::random_matrix(rng, n);
    const RatMatrix b = testutil::random_matrix(rng, n);
    const RatMatrix c = testutil::random_matrix(rng, n);
    const RatMatrix j =
        bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    CHECK(j.is_zero());
  }
}

TEST_CASE("is_subalgebra") {
  // so(3): antisymmetric 3x3
  const auto so3 = MatrixSubspace::echelonize(
      3, {E(3, 0, 1) - E(3, 1, 0), E(3, 0, 2) - E(3, 2, 0), E(3, 1, 2) - E(3, 2, 1)});
  CHECK(is_subalgebra(so3));
  const auto not_closed = MatrixSubspace::echelonize(2, {E(2, 0, 1), E(2, 1, 0)});
  CHECK_FALSE(is_subalgebra(not_closed));
  CHECK(is_subalgebra(MatrixSubspace::zero(2)));
}

TEST_CASE("centralizer of a regular direction in gl_2 is the diagonal") {
  std::vector<Rational> w{1, -1};
  const auto z = centralizer_in(MatrixSubspace::full(2), DiagonalDirection(w));
  CHECK(z.dim() == 2);
  CHECK(z.contains(E(2, 0, 0)));
  CHECK(z.contains(E(2, 1, 1)));
}

TEST_CASE("centralizer with the zero direction is the identity map") {
  SampleRng rng(kDefaultSeed + 3);
  const auto s = testutil::random_subspace(rng, 3, 4);
  CHECK(centralizer_in(s, DiagonalDirection::zero(3)) == s);
}

TEST_CASE("centralizer of diag(0,0,0,1) in so(1,3) is the so(1,2) block") {
  std::vector<Rational> w{0, 0, 0, 1};
  const auto z = centralizer_in(so13(), DiagonalDirection(w));
  CHECK(z.dim() == 3);
  // so(1,2) block: form diag(-1,1,1) on coordinates 0..2
  CHECK(z.contains(E(4, 0, 1) + E(4, 1, 0)));
  CHECK(z.contains(E(4, 0, 2) + E(4, 2, 0)));
  CHECK(z.contains(E(4, 1, 2) - E(4, 2, 1)));
}

TEST_CASE("centralizer agrees with the weight-zero intersection route") {
  SampleRng rng(kDefaultSeed + 4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.next(1, 4));
    const auto s = testutil::random_subspace(rng, n, static_cast<int>(rng.next(1, 5)));
    const auto x = testutil::random_direction(rng, n);
    std::vector<std::pair<int, int>> zero_coords;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (x.weight(i, j).is_zero()) zero_coords.emplace_back(i, j);
    CHECK(centralizer_in(s, x) == intersect(s, MatrixSubspace::coordinate(n, zero_coords)));
  }
}

TEST_CASE("normalizer dimensions") {
  CHECK(normalizer_dim(MatrixSubspace::full(3)) == 9);
  CHECK(normalizer_dim(MatrixSubspace::zero(3)) == 9);
  CHECK(normalizer_dim(so13()) == 7);  // so(1,3) plus the scalar line
  CHECK_THROWS_AS(normalizer_dim(MatrixSubspace::echelonize(2, {E(2, 0, 1), E(2, 1, 0)})), Error);
}

TEST_CASE("normalizer dimension dominates the algebra dimension") {
  const std::vector<MatrixSubspace> algebras{
      so13(), make_symplectic(2).algebra, make_gl_complex(2).algebra,
      MatrixSubspace::echelonize(2, {RatMatrix::unit(2, 0, 1)}), MatrixSubspace::zero(3)};
  for (const auto& s : algebras) CHECK(normalizer_dim(s) >= s.dim());
}

TEST_CASE("weight decomposition splits and sums back") {
  std::vector<Rational> w{1, -1};
  const auto parts = weight_decompose(E(2, 0, 1) + E(2, 1, 0), DiagonalDirection(w));
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(Rational(2)) == E(2, 0, 1));
  CHECK(parts.at(Rational(-2)) == E(2, 1, 0));

  SampleRng rng(kDefaultSeed + 5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.next(1, 4));
    const RatMatrix m = testutil::random_matrix(rng, n);
    const auto x = testutil::random_direction(rng, n);
    RatMatrix total(n, n);
    for (const auto& [lambda, part] : weight_decompose(m, x)) {
      total += part;
      // simultaneous eigenvector: [diag(x), part] = lambda * part
      CHECK(bracket(x.as_matrix(), part) == lambda * part);
    }
    CHECK(total == m);
  }
}

TEST_CASE("weight decomposition under the zero direction is trivial") {
  const RatMatrix m = E(3, 0, 1) + E(3, 2, 2);
  const auto parts = weight_decompose(m, DiagonalDirection::zero(3));
  REQUIRE(parts.size() == 1);
  CHECK(parts.at(Rational(0)) == m);
}

TEST_CASE("helix element splits into shear and rotation weights") {
  std::vector<Rational> w{-1, 1, 0, 0};
  const RatMatrix m = E(4, 0, 1) + E(4, 2, 3) - E(4, 3, 2);
  const auto parts = weight_decompose(m, DiagonalDirection(w));
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(Rational(-2)) == E(4, 0, 1));
  CHECK(parts.at(Rational(0)) == E(4, 2, 3) - E(4, 3, 2));
}

TEST_CASE("weight classes partition all coordinates") {
  std::vector<Rational> w{1, 1, 0};
  const auto dec = weight_classes(DiagonalDirection(w));
  std::size_t total = 0;
  for (const auto& [lambda, coords] : dec.classes) total += coords.size();
  CHECK(total == 9);
  CHECK(dec.classes.at(Rational(0)).size() == 5);
  CHECK(dec.classes.at(Rational(1)).size() == 2);
  CHECK(dec.classes.at(Rational(-1)).size() == 2);
}
