#include "conjlim/io.hpp"

#include <cctype>

#include "conjlim/error.hpp"

namespace conjlim {

nlohmann::json matrix_to_json(const RatMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix literal must be a non-empty array");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_array() ||
        static_cast<int>(j[static_cast<std::size_t>(i)].size()) != cols)
      throw ParseError("matrix literal rows must have equal length");
    for (int c = 0; c < cols; ++c) {
      const auto& cell = j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (cell.is_string())
        m.at(i, c) = Rational::parse(cell.get<std::string>());
      else if (cell.is_number_integer())
        m.at(i, c) = Rational(cell.get<long>());
      else
        throw ParseError("matrix entries must be strings like \"p/q\" or integers");
    }
  }
  return m;
}

nlohmann::json subspace_to_json(const MatrixSubspace& s) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : s.basis()) basis.push_back(matrix_to_json(b));
  return basis;
}

nlohmann::json direction_to_json(const DiagonalDirection& x) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& v : x.weights()) w.push_back(v.str());
  return w;
}

nlohmann::json report_to_json(const LimitReport& report) {
  nlohmann::json j;
  j["input_basis"] = subspace_to_json(report.input);
  j["direction"] = direction_to_json(report.direction);
  j["oracle_limit"] = subspace_to_json(report.oracle_limit);
  if (report.closed_form) j["closed_form_limit"] = subspace_to_json(*report.closed_form);
  j["agree"] = report.agree;
  j["dims"] = {{"input", report.input.dim()}, {"oracle", report.oracle_limit.dim()}};
  j["dim_preserved"] = report.dim_preserved;
  j["input_subalgebra"] = report.input_subalgebra;
  j["oracle_subalgebra"] = report.oracle_subalgebra;
  return j;
}

SymmetricFamily ParsedSpec::make_family() const {
  if (!is_family) throw Error("spec names a signature sequence, not a family");
  switch (kind) {
    case FamilyKind::Orthogonal: return make_orthogonal(p, q);
    case FamilyKind::GlSum: return make_gl_sum(p, q);
    case FamilyKind::GlComplex: return make_gl_complex(m);
    case FamilyKind::Symplectic: return make_symplectic(m);
  }
  throw Error("unknown family kind");
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  void expect(char c, const std::string& what) {
    if (peek() != c) throw ParseError("expected '" + std::string(1, c) + "' in " + what);
    ++pos;
  }
  int integer(const std::string& what) {
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number in " + what);
    return std::stoi(text.substr(start, pos - start));
  }
};

std::pair<int, int> parse_pair(Cursor& cur, const std::string& what) {
  cur.expect('(', what);
  const int p = cur.integer(what);
  int q = 0;
  if (cur.peek() == ',') {
    ++cur.pos;
    q = cur.integer(what);
  }
  cur.expect(')', what);
  return {p, q};
}

}  // namespace

ParsedSpec parse_spec(const std::string& text) {
  ParsedSpec spec;
  Cursor cur{text};
  auto starts_with = [&](const std::string& prefix) {
    if (text.rfind(prefix, 0) != 0) return false;
    cur.pos = prefix.size();
    return true;
  };
  if (starts_with("GLpGLq")) {
    const auto [p, q] = parse_pair(cur, text);
    if (!cur.done()) throw ParseError("trailing characters in '" + text + "'");
    spec.is_family = true;
    spec.kind = FamilyKind::GlSum;
    spec.p = p;
    spec.q = q;
    return spec;
  }
  if (starts_with("GLC")) {
    cur.expect('(', text);
    spec.m = cur.integer(text);
    cur.expect(')', text);
    if (!cur.done()) throw ParseError("trailing characters in '" + text + "'");
    spec.is_family = true;
    spec.kind = FamilyKind::GlComplex;
    return spec;
  }
  if (starts_with("Sp")) {
    cur.expect('(', text);
    const int two_m = cur.integer(text);
    cur.expect(')', text);
    if (!cur.done()) throw ParseError("trailing characters in '" + text + "'");
    if (two_m < 2 || two_m % 2 != 0) throw ParseError("Sp needs an even ambient dimension >= 2");
    spec.is_family = true;
    spec.kind = FamilyKind::Symplectic;
    spec.m = two_m / 2;
    return spec;
  }
  if (starts_with("O")) {
    const auto [p, q] = parse_pair(cur, text);
    if (!cur.done()) throw ParseError("trailing characters in '" + text + "'");
    spec.is_family = true;
    spec.kind = FamilyKind::Orthogonal;
    spec.p = p;
    spec.q = q;
    return spec;
  }
  if (starts_with("X")) {
    cur.expect('(', text);
    if (cur.peek() == '(') {
      while (cur.peek() == '(') {
        const auto [p, q] = parse_pair(cur, text);
        spec.seq.sigs.emplace_back(p, q);
      }
    } else {
      const int p = cur.integer(text);
      int q = 0;
      if (cur.peek() == ',') {
        ++cur.pos;
        q = cur.integer(text);
      }
      spec.seq.sigs.emplace_back(p, q);
    }
    cur.expect(')', text);
    if (!cur.done()) throw ParseError("trailing characters in '" + text + "'");
    validate(spec.seq);
    return spec;
  }
  throw ParseError("unrecognized spec '" + text + "'");
}

std::vector<Rational> parse_weights(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(Rational::parse(text.substr(start, comma - start)));
    start = comma + 1;
    if (comma == text.size()) break;
  }
  if (out.empty()) throw ParseError("empty weight list");
  return out;
}

}  // namespace conjlim
