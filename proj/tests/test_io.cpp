#include <doctest.h>

#include "conjlim/error.hpp"
#include "conjlim/io.hpp"
#include "test_util.hpp"

using namespace conjlim;
using testutil::E;

TEST_CASE("matrix json round trip with rational entries") {
  RatMatrix m(2, 2);
  m.at(0, 1) = Rational(1, 2);
  m.at(1, 0) = Rational(-3);
  const auto j = matrix_to_json(m);
  CHECK(j.dump() == R"([["0","1/2"],["-3","0"]])");
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_from_json(nlohmann::json::parse(R"([[1,0],[0,1]])")) == RatMatrix::identity(2));
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"([["x"]])")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"([[1],[1,2]])")), ParseError);
}

TEST_CASE("limit report serialization carries both engines") {
  const auto fam = make_gl_complex(1);
  std::vector<Rational> w{1, -1};
  const auto rep = verify_limit(fam.algebra, DiagonalDirection(w), true);
  const auto j = report_to_json(rep);
  CHECK(j["agree"] == true);
  CHECK(j["dims"]["input"] == 2);
  CHECK(j["dims"]["oracle"] == 2);
  CHECK(j.contains("closed_form_limit"));
  CHECK(j["direction"].dump() == R"(["1","-1"])");
}

TEST_CASE("family specs parse") {
  const auto o = parse_spec("O(1,3)");
  CHECK(o.is_family);
  CHECK(o.kind == FamilyKind::Orthogonal);
  CHECK(o.p == 1);
  CHECK(o.q == 3);
  CHECK(o.make_family().algebra.dim() == 6);

  const auto g = parse_spec("GLpGLq(2,3)");
  CHECK(g.kind == FamilyKind::GlSum);
  CHECK(g.p == 2);
  CHECK(g.q == 3);

  const auto c = parse_spec("GLC(2)");
  CHECK(c.kind == FamilyKind::GlComplex);
  CHECK(c.m == 2);

  const auto sp = parse_spec("Sp(4)");
  CHECK(sp.kind == FamilyKind::Symplectic);
  CHECK(sp.m == 2);
  CHECK_THROWS_AS(parse_spec("Sp(3)"), ParseError);
}

TEST_CASE("signature specs parse with and without abbreviations") {
  CHECK(parse_spec("X(1,3)").seq == SignatureSequence{{{1, 3}}});
  CHECK(parse_spec("X((1,0)(3))").seq == SignatureSequence{{{1, 0}, {3, 0}}});
  CHECK(parse_spec("X((1,2)(1))").seq == SignatureSequence{{{1, 2}, {1, 0}}});
  CHECK(parse_spec("X((1,0)(1,1))").seq == SignatureSequence{{{1, 0}, {1, 1}}});
  CHECK(parse_spec("X(1,0)").seq == SignatureSequence{{{1, 0}}});
  CHECK_THROWS_AS(parse_spec("X()"), ParseError);
  CHECK_THROWS_AS(parse_spec("Y(1,2)"), ParseError);
  CHECK_THROWS_AS(parse_spec("X(1,2)x"), ParseError);
  CHECK_THROWS_AS(parse_spec("X((0,0))"), Error);
}

TEST_CASE("weight lists parse") {
  const auto w = parse_weights("0,0,0,1");
  CHECK(w.size() == 4);
  CHECK(w[3] == Rational(1));
  const auto halves = parse_weights("1/2,-1/2");
  CHECK(halves[0] == Rational(1, 2));
  CHECK(halves[1] == Rational(-1, 2));
  CHECK_THROWS_AS(parse_weights("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_weights(""), ParseError);
}

TEST_CASE("label round trip through the parser") {
  for (const auto& text : {"X(1,3)", "X((1,0)(3))", "X((1,2)(1))", "X((1,0)(1,1))",
                           "X((1,0)(1)(1)(1))"}) {
    CHECK(parse_spec(text).seq.label() == text);
  }
}
