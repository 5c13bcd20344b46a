#include <doctest.h>

#include <set>

#include "conjlim/error.hpp"
#include "conjlim/pfqf.hpp"
#include "test_util.hpp"

using namespace conjlim;
using testutil::E;

namespace {

SignatureSequence seq(std::vector<std::pair<int, int>> sigs) { return SignatureSequence{std::move(sigs)}; }

std::set<std::string> labels(const std::vector<SignatureSequence>& v) {
  std::set<std::string> out;
  for (const auto& s : v) out.insert(s.label());
  return out;
}

}  // namespace

TEST_CASE("canonicalize follows the reversal rules") {
  CHECK(canonicalize(seq({{0, 1}, {2, 0}}), Mode::Group) == seq({{1, 0}, {2, 0}}));
  CHECK(canonicalize(seq({{1, 2}, {0, 1}}), Mode::Geometry) == seq({{1, 2}, {1, 0}}));
  CHECK(canonicalize(seq({{1, 2}}), Mode::Group) == seq({{2, 1}}));
  CHECK(canonicalize(seq({{1, 2}}), Mode::Geometry) == seq({{1, 2}}));
  const auto s = canonicalize(seq({{1, 2}, {0, 1}, {1, 1}}), Mode::Geometry);
  CHECK(canonicalize(s, Mode::Geometry) == s);
  CHECK_THROWS_AS(canonicalize(seq({{0, 0}}), Mode::Group), Error);
}

TEST_CASE("labels abbreviate definite blocks past the first") {
  CHECK(seq({{1, 3}}).label() == "X(1,3)");
  CHECK(seq({{1, 0}, {3, 0}}).label() == "X((1,0)(3))");
  CHECK(seq({{1, 2}, {1, 0}}).label() == "X((1,2)(1))");
  CHECK(seq({{1, 0}, {1, 1}}).label() == "X((1,0)(1,1))");
  CHECK(seq({{2, 1}}).label("O") == "O(2,1)");
}

TEST_CASE("isom algebra dimensions and content") {
  CHECK(isom_algebra(seq({{1, 3}})).dim() == 6);
  CHECK(isom_dim(seq({{1, 3}})) == 6);
  CHECK(isom_dim(seq({{1, 0}, {3, 0}})) == 6);
  CHECK(isom_dim(seq({{1, 1}, {2, 0}})) == 6);

  // Euclidean: so(3) block on 1..3 plus the translation strip
  const auto eucl = isom_algebra(seq({{1, 0}, {3, 0}}));
  CHECK(eucl.dim() == 6);
  CHECK(eucl.contains(E(4, 1, 2) - E(4, 2, 1)));
  CHECK(eucl.contains(E(4, 3, 0)));
  CHECK_FALSE(eucl.contains(E(4, 0, 3)));
  CHECK(is_subalgebra(eucl));
}

TEST_CASE("hyperbolic plane limit classes") {
  const auto limits = enumerate_limits(seq({{1, 2}}), Mode::Geometry);
  CHECK(labels(limits) ==
        std::set<std::string>{"X(1,2)", "X((1,0)(2))", "X((1,1)(1))", "X((1,0)(1)(1))"});
}

TEST_CASE("hyperbolic 3-space limit classes match the chart") {
  const auto limits = enumerate_limits(seq({{1, 3}}), Mode::Geometry);
  CHECK(labels(limits) == std::set<std::string>{
                              "X(1,3)", "X((1,0)(3))", "X((1,2)(1))", "X((1,1)(2))",
                              "X((1,0)(1)(2))", "X((1,0)(2)(1))", "X((1,1)(1)(1))",
                              "X((1,0)(1)(1)(1))"});
}

TEST_CASE("a point has no degenerations") {
  const auto limits = enumerate_limits(seq({{1, 0}}), Mode::Geometry);
  REQUIRE(limits.size() == 1);
  CHECK(limits[0] == seq({{1, 0}}));
}

TEST_CASE("geometry mode needs a nonempty domain") {
  CHECK_THROWS_AS(enumerate_limits(seq({{0, 2}}), Mode::Geometry), Error);
}

TEST_CASE("geometry limits inject into group limits") {
  for (const auto& root : {seq({{1, 2}}), seq({{1, 3}}), seq({{2, 2}})}) {
    const auto group = enumerate_limits(root, Mode::Group);
    std::set<SignatureSequence> group_set(group.begin(), group.end());
    for (const auto& lim : enumerate_limits(root, Mode::Geometry))
      CHECK(group_set.count(canonicalize(lim, Mode::Group)) == 1);
  }
}

TEST_CASE("group-mode classes agree with the catalog enumeration") {
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {1, 3}}) {
    const auto fam = make_orthogonal(p, q);
    std::set<SignatureSequence> from_catalog;
    for (const auto& dir : enumerate_directions(fam))
      from_catalog.insert(canonicalize(signature_of(fam, dir), Mode::Group));
    const auto from_compositions = enumerate_limits(seq({{p, q}}), Mode::Group);
    CHECK(from_catalog ==
          std::set<SignatureSequence>(from_compositions.begin(), from_compositions.end()));
  }
}

TEST_CASE("O(2,2) has twelve group-level limit classes") {
  CHECK(enumerate_limits(seq({{2, 2}}), Mode::Group).size() == 12);
}

TEST_CASE("hyperbolic node counts follow the composition formula") {
  // first block (1, j); the leftover (0, q-j) forces definite tail
  // blocks, one per composition part, so the total is 2^q
  for (int q = 1; q <= 5; ++q) {
    const auto limits = enumerate_limits(seq({{1, q}}), Mode::Geometry);
    CHECK(static_cast<int>(limits.size()) == (1 << q));
  }
}

TEST_CASE("iterated orthogonal limits land on enumerated classes") {
  // a second degeneration of a limit is itself a limit of the family:
  // combine the two directions lexicographically and look the result up
  SampleRng rng(kDefaultSeed + 20);
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {1, 3}, {2, 2}}) {
    const auto fam = make_orthogonal(p, q);
    const auto classes = enumerate_limits(seq({{p, q}}), Mode::Group);
    const std::set<SignatureSequence> class_set(classes.begin(), classes.end());
    for (const auto& dir : enumerate_directions(fam)) {
      const auto first = grassmann_limit(dir.algebra_w, dir.x);
      const auto y = testutil::random_direction(rng, fam.n, 2);
      const auto second = grassmann_limit(first, y);
      // z = N x + y with N beyond the spread of y refines x by y
      std::vector<Rational> z;
      for (int i = 0; i < fam.n; ++i)
        z.push_back(Rational(5) * dir.x.weights()[static_cast<std::size_t>(i)] +
                    y.weights()[static_cast<std::size_t>(i)]);
      const DiagonalDirection zdir{z};
      CHECK(grassmann_limit(dir.algebra_w, zdir) == second);
      // signature of the combined degeneration appears among the classes
      std::map<Rational, std::vector<int>> by_value;
      for (int i = 0; i < fam.n; ++i) by_value[z[static_cast<std::size_t>(i)]].push_back(i);
      SignatureSequence sig;
      for (const auto& [value, coords] : by_value) {
        int pc = 0, qc = 0;
        for (int c : coords) (dir.form_w.at(c, c).sign() < 0 ? pc : qc)++;
        sig.sigs.emplace_back(pc, qc);
      }
      CHECK(class_set.count(canonicalize(sig, Mode::Group)) == 1);
    }
  }
}

TEST_CASE("posets: single node, covers, determinism") {
  const auto trivial = build_poset(seq({{1, 0}}), Mode::Geometry);
  CHECK(trivial.nodes.size() == 1);
  CHECK(trivial.edges.empty());

  const auto h2 = build_poset(seq({{1, 2}}), Mode::Geometry);
  CHECK(h2.nodes.size() == 4);
  CHECK(to_dot(h2) == to_dot(build_poset(seq({{1, 2}}), Mode::Geometry)));
}

TEST_CASE("witness for the half-pipe degeneration") {
  const auto w = geometry_limit_witness_full(seq({{1, 3}}), seq({{1, 2}, {1, 0}}));
  std::vector<Rational> expected{0, 0, 0, 1};
  CHECK(w.x == DiagonalDirection(expected));
  CHECK(verify_geometry_edge(seq({{1, 3}}), seq({{1, 2}, {1, 0}})));
}

TEST_CASE("witness is trivial on the diagonal") {
  const auto w = geometry_limit_witness(seq({{1, 2}}), seq({{1, 2}}));
  CHECK(w.is_zero());
  CHECK(verify_geometry_edge(seq({{1, 2}}), seq({{1, 2}})));
}

TEST_CASE("witness splits the euclidean fiber") {
  CHECK(verify_geometry_edge(seq({{1, 0}, {3, 0}}), seq({{1, 0}, {1, 0}, {2, 0}})));
  CHECK(verify_geometry_edge(seq({{1, 0}, {3, 0}}), seq({{1, 0}, {2, 0}, {1, 0}})));
}

TEST_CASE("witness handles reversed refinements") {
  // splitting (1,3) into (1,1)+(2,0)-reversed exercises the flip path
  CHECK(verify_geometry_edge(seq({{1, 3}}), seq({{1, 1}, {2, 0}})));
  CHECK(verify_geometry_edge(seq({{2, 3}}), seq({{1, 1}, {2, 1}})));
  CHECK(verify_geometry_edge(seq({{2, 1}}), seq({{1, 0}, {1, 1}})));
}

TEST_CASE("witness refuses non-refinements") {
  CHECK_THROWS_AS(geometry_limit_witness(seq({{1, 2}}), seq({{1, 0}, {1, 1}})), Error);
  CHECK_THROWS_AS(geometry_limit_witness(seq({{1, 1}}), seq({{1, 2}})), Error);
}

TEST_CASE("witnesses verify across the whole reachability relation") {
  // not only covers: every reachable pair must carry a working witness
  for (const auto& root : {seq({{2, 2}}), seq({{1, 4}}), seq({{2, 3}})}) {
    const auto nodes = enumerate_limits(root, Mode::Geometry);
    for (const auto& v : nodes) CHECK(verify_geometry_edge(root, v));
    // second hop: every limit of a limit, from a mid-size intermediate
    for (const auto& u : nodes) {
      if (u.block_count() != 2) continue;
      for (const auto& v : enumerate_limits(u, Mode::Geometry)) CHECK(verify_geometry_edge(u, v));
    }
  }
}

TEST_CASE("every chart edge verifies and increases the normalizer") {
  const std::vector<LimitPoset> posets{
      build_poset(seq({{1, 3}}), Mode::Geometry),
      build_poset({seq({{3, 0}}), seq({{1, 2}}), seq({{2, 1}})}, Mode::Geometry)};
  for (const auto& poset : posets)
    for (const auto& [u, v] : poset.edges) {
      const auto& from = poset.nodes[static_cast<std::size_t>(u)];
      const auto& to = poset.nodes[static_cast<std::size_t>(v)];
      CHECK(verify_geometry_edge(from, to));
      CHECK(normalizer_dim(isom_algebra(from)) < normalizer_dim(isom_algebra(to)));
    }
}

TEST_CASE("thurston checks") {
  const auto rep = thurston_subalgebra_checks();
  CHECK(rep.nil_contained);
  CHECK(rep.nil_subalgebra);
  CHECK(rep.sol_contained);
  CHECK(rep.sol_subalgebra);
  CHECK(rep.sol_evaluation_rank == 3);
  CHECK(rep.halfpipe_centralizer_dim <= 1);
  CHECK(rep.halfpipe_centralizer_scalar_block);
}
