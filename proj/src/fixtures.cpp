#include "conjlim/fixtures.hpp"

#include <sstream>

#include "conjlim/charpoly.hpp"
#include "conjlim/pfqf.hpp"

namespace conjlim {

namespace {

RatMatrix conjugate(const RatMatrix& g, const RatMatrix& m, const RatMatrix& ginv) {
  return g * m * ginv;
}

FixtureResult euclidean_degeneration(int n) {
  // so of the definite form on R^{n+1} flattened along diag(1,...,1,0):
  // the limit is the antisymmetric n-block with a free last column.
  const int amb = n + 1;
  std::vector<RatMatrix> so_gens;
  for (int i = 0; i < amb; ++i)
    for (int j = i + 1; j < amb; ++j)
      so_gens.push_back(RatMatrix::unit(amb, i, j) - RatMatrix::unit(amb, j, i));
  const MatrixSubspace so = MatrixSubspace::echelonize(amb, so_gens);

  std::vector<Rational> w(static_cast<std::size_t>(amb), Rational(1));
  w.back() = Rational(0);
  const MatrixSubspace limit = grassmann_limit(so, DiagonalDirection(w));

  std::vector<RatMatrix> expected_gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      expected_gens.push_back(RatMatrix::unit(amb, i, j) - RatMatrix::unit(amb, j, i));
  for (int i = 0; i < n; ++i) expected_gens.push_back(RatMatrix::unit(amb, i, n));
  const MatrixSubspace expected = MatrixSubspace::echelonize(amb, expected_gens);

  FixtureResult res{"euclidean-degeneration-n" + std::to_string(n), limit == expected, ""};
  std::ostringstream os;
  os << "dim " << limit.dim() << (res.pass ? " == " : " != ") << "euclidean isometry algebra";
  res.detail = os.str();
  return res;
}

FixtureResult boost_to_parabolic() {
  const MatrixSubspace boost =
      MatrixSubspace::echelonize(2, {RatMatrix::unit(2, 0, 1) + RatMatrix::unit(2, 1, 0)});
  std::vector<Rational> w{1, -1};
  const MatrixSubspace limit = grassmann_limit(boost, DiagonalDirection(w));
  const MatrixSubspace expected = MatrixSubspace::echelonize(2, {RatMatrix::unit(2, 0, 1)});
  return {"boost-to-parabolic", limit == expected, "one-parameter boost degenerates to the shear"};
}

FixtureResult shear_to_diagonal() {
  // span{E_01 - 2 E_22} in gl_3 under diag(-1,1,0)
  const RatMatrix gen = RatMatrix::unit(3, 0, 1) - Rational(2) * RatMatrix::unit(3, 2, 2);
  const MatrixSubspace s = MatrixSubspace::echelonize(3, {gen});
  std::vector<Rational> w{-1, 1, 0};
  const MatrixSubspace limit = grassmann_limit(s, DiagonalDirection(w));
  const MatrixSubspace expected = MatrixSubspace::echelonize(3, {RatMatrix::unit(3, 2, 2)});
  return {"shear-to-diagonal", limit == expected,
          "the non-diagonalizable generator limits onto its diagonal part"};
}

FixtureResult helix_decouples() {
  // span{E_01 + (E_23 - E_32)} under diag(-1,1,0,0)
  const RatMatrix gen = RatMatrix::unit(4, 0, 1) + RatMatrix::unit(4, 2, 3) - RatMatrix::unit(4, 3, 2);
  const MatrixSubspace s = MatrixSubspace::echelonize(4, {gen});
  std::vector<Rational> w{-1, 1, 0, 0};
  const MatrixSubspace limit = grassmann_limit(s, DiagonalDirection(w));
  const MatrixSubspace expected =
      MatrixSubspace::echelonize(4, {RatMatrix::unit(4, 2, 3) - RatMatrix::unit(4, 3, 2)});
  return {"helix-decouples", limit == expected, "the shear factor dies, the rotation block survives"};
}

FixtureResult translation_block_stable() {
  const MatrixSubspace s = MatrixSubspace::echelonize(4, {RatMatrix::unit(4, 2, 3)});
  std::vector<Rational> w{1, -1, 0, 0};
  const MatrixSubspace limit = grassmann_limit(s, DiagonalDirection(w));
  return {"translation-block-stable", limit == s, "weight-zero translation block is fixed"};
}

FixtureResult shear_family_alpha2() {
  // two-parameter diagonal/shear group in gl_5, alpha = 2
  const Rational alpha(2);
  const RatMatrix gs = RatMatrix::unit(5, 0, 0) + RatMatrix::unit(5, 2, 3);
  const RatMatrix gt = RatMatrix::unit(5, 1, 1) + RatMatrix::unit(5, 2, 4);

  const RatMatrix g1 = RatMatrix::identity(5) + alpha * RatMatrix::unit(5, 3, 4);
  const RatMatrix g1inv = RatMatrix::identity(5) - alpha * RatMatrix::unit(5, 3, 4);
  const MatrixSubspace pre = MatrixSubspace::echelonize(
      5, {conjugate(g1, gs, g1inv), conjugate(g1, gt, g1inv)});

  std::vector<Rational> w{0, 0, 0, 1, -1};
  const MatrixSubspace limit = grassmann_limit(pre, DiagonalDirection(w));

  const RatMatrix g2 = RatMatrix::identity(5) + RatMatrix::unit(5, 4, 3);
  const RatMatrix g2inv = RatMatrix::identity(5) - RatMatrix::unit(5, 4, 3);
  std::vector<RatMatrix> back;
  for (const auto& b : limit.basis()) back.push_back(conjugate(g2, b, g2inv));
  const MatrixSubspace result = MatrixSubspace::echelonize(5, back);

  const MatrixSubspace expected = MatrixSubspace::echelonize(
      5, {RatMatrix::unit(5, 0, 0) + alpha * RatMatrix::unit(5, 1, 1),
          RatMatrix::unit(5, 2, 3) - RatMatrix::unit(5, 2, 4)});
  return {"shear-family-alpha2", result == expected,
          "limit matches the displayed two-parameter block form"};
}

FixtureResult charpoly_witness(std::uint64_t seed) {
  const ObstructionReport rep = obstruction_witness(seed);
  std::ostringstream os;
  os << "witness " << rep.witness.str() << ", char " << rep.witness_poly.str()
     << "; h2xr=" << (rep.witness_in_h2xr ? "yes" : "no")
     << " so31=" << (rep.witness_in_so31 ? "yes" : "no") << "; " << rep.samples
     << " samples odd-free=" << (rep.all_samples_odd_free ? "yes" : "no");
  return {"charpoly-obstruction", rep.pass(), os.str()};
}

}  // namespace

std::vector<FixtureResult> run_regression_fixtures(std::uint64_t seed) {
  std::vector<FixtureResult> out;
  for (int n = 2; n <= 5; ++n) out.push_back(euclidean_degeneration(n));
  out.push_back(boost_to_parabolic());
  out.push_back(shear_to_diagonal());
  out.push_back(helix_decouples());
  out.push_back(translation_block_stable());
  out.push_back(shear_family_alpha2());

  const ThurstonReport t = thurston_subalgebra_checks();
  out.push_back({"nil-embedding", t.nil_contained && t.nil_subalgebra,
                 "three-parameter nilpotent algebra inside X((1,0)(2)(1))"});
  {
    std::ostringstream os;
    os << "evaluation rank " << t.sol_evaluation_rank << " at the base point";
    out.push_back({"sol-simple-transitivity",
                   t.sol_contained && t.sol_subalgebra && t.sol_evaluation_rank == 3, os.str()});
  }
  {
    std::ostringstream os;
    os << "centralizer dim " << t.halfpipe_centralizer_dim << ", scalar-block shaped="
       << (t.halfpipe_centralizer_scalar_block ? "yes" : "no");
    out.push_back({"halfpipe-centralizer",
                   t.halfpipe_centralizer_dim <= 1 && t.halfpipe_centralizer_scalar_block,
                   os.str()});
  }
  out.push_back(charpoly_witness(seed));
  return out;
}

std::vector<FixtureResult> run_agreement_sweep(int max_n) {
  std::vector<SymmetricFamily> families;
  for (int p = 0; p <= max_n; ++p)
    for (int q = 0; p + q <= std::min(max_n, 5) && q <= max_n; ++q)
      if (p + q >= 1) families.push_back(make_orthogonal(p, q));
  for (int p = 1; p <= max_n; ++p)
    for (int q = p; p + q <= max_n; ++q) families.push_back(make_gl_sum(p, q));
  for (int m = 1; 2 * m <= max_n; ++m) families.push_back(make_gl_complex(m));
  for (int m = 1; 2 * m <= max_n; ++m) families.push_back(make_symplectic(m));

  std::vector<FixtureResult> out;
  for (const auto& fam : families) {
    int checked = 0;
    bool ok = true;
    std::string first_failure;
    for (const auto& dir : enumerate_directions(fam)) {
      const MatrixSubspace oracle = grassmann_limit(dir.algebra_w, dir.x);
      const MatrixSubspace closed = closed_form_limit(dir.algebra_w, dir.x);
      const BlockForm block = predicted_block_form(fam, dir);
      ++checked;
      if (oracle != closed || oracle != block.span || oracle.dim() != dir.algebra_w.dim()) {
        ok = false;
        first_failure = block.describe();
        break;
      }
    }
    std::ostringstream os;
    os << checked << " directions";
    if (!ok) os << "; first failure at " << first_failure;
    out.push_back({"agreement-" + fam.name(), ok, os.str()});
  }
  return out;
}

}  // namespace conjlim
