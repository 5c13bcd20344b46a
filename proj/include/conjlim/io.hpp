#ifndef CONJLIM_IO_HPP
#define CONJLIM_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "conjlim/error.hpp"
#include "conjlim/limits.hpp"
#include "conjlim/pfqf.hpp"

namespace conjlim {

/// Matrix literal: row-major nested lists with entries "p/q" or "p".
nlohmann::json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json subspace_to_json(const MatrixSubspace& s);
nlohmann::json direction_to_json(const DiagonalDirection& x);
nlohmann::json report_to_json(const LimitReport& report);

/// Accepted specs: "O(p,q)", "GLpGLq(p,q)", "GLC(m)", "Sp(2m)",
/// "X(p,q)", "X((p0,q0)(p1)...)" with (p) short for (p,0).
struct ParsedSpec {
  bool is_family = false;
  FamilyKind kind = FamilyKind::Orthogonal;
  int p = 0, q = 0, m = 0;
  SignatureSequence seq;  // for X(...) specs

  SymmetricFamily make_family() const;
};

ParsedSpec parse_spec(const std::string& text);

/// Comma-separated rational weights, e.g. "0,0,0,1" or "1/2,-1/2".
std::vector<Rational> parse_weights(const std::string& text);

}  // namespace conjlim

#endif
