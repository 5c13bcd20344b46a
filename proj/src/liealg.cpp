#include "conjlim/liealg.hpp"

#include "conjlim/error.hpp"

namespace conjlim {

DiagonalDirection::DiagonalDirection(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error("direction needs at least one weight");
}

DiagonalDirection DiagonalDirection::zero(int n) {
  if (n <= 0) throw Error("direction needs positive dimension");
  return DiagonalDirection(std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
}

bool DiagonalDirection::is_zero() const {
  for (const auto& w : weights_)
    if (!w.is_zero()) return false;
  return true;
}

WeightDecomposition weight_classes(const DiagonalDirection& x) {
  WeightDecomposition d{x, {}};
  const int n = x.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.classes[x.weight(i, j)].emplace_back(i, j);
  return d;
}

RatMatrix bracket(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw Error("bracket: dimension mismatch");
  return a * b - b * a;
}

bool is_subalgebra(const MatrixSubspace& s) {
  const auto& basis = s.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!s.contains(bracket(basis[i], basis[j]))) return false;
  return true;
}

MatrixSubspace centralizer_in(const MatrixSubspace& s, const DiagonalDirection& x) {
  if (s.ambient() != x.n()) throw Error("centralizer_in: dimension mismatch");
  const int n = s.ambient();
  const RatMatrix xm = x.as_matrix();
  // Y = sum c_r b_r with [X, Y] = 0: one equation per matrix entry.
  std::vector<RatMatrix> bx;
  bx.reserve(s.basis().size());
  for (const auto& b : s.basis()) bx.push_back(bracket(xm, b));
  std::vector<RatVector> equations;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVector eq(s.basis().size(), Rational(0));
      bool nonzero = false;
      for (std::size_t r = 0; r < bx.size(); ++r) {
        eq[r] = bx[r].at(i, j);
        nonzero = nonzero || !eq[r].is_zero();
      }
      if (nonzero) equations.push_back(std::move(eq));
    }
  const auto coeffs = nullspace(equations, s.dim());
  std::vector<RatMatrix> gens;
  for (const auto& c : coeffs) {
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < c.size(); ++r) {
      if (c[r].is_zero()) continue;
      m += c[r] * s.basis()[r];
    }
    gens.push_back(std::move(m));
  }
  return MatrixSubspace::echelonize(n, gens);
}

int normalizer_dim(const MatrixSubspace& s) {
  if (!is_subalgebra(s)) throw Error("normalizer_dim: input is not a subalgebra");
  const int n = s.ambient();
  const int d = n * n;
  if (s.dim() == 0) return d;

  // Complement coordinates of s: non-pivot positions of its echelon basis.
  std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
  for (int p : s.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;

  // Residual of m mod s, read off on the complement coordinates.
  auto reduce_mod = [&](RatMatrix m) {
    RatVector v = m.entries();
    for (int r = 0; r < s.dim(); ++r) {
      const std::size_t p = static_cast<std::size_t>(s.pivots()[static_cast<std::size_t>(r)]);
      const Rational coeff = v[p];
      if (coeff.is_zero()) continue;
      const auto& row = s.basis()[static_cast<std::size_t>(r)].entries();
      for (std::size_t j = p; j < v.size(); ++j)
        if (!row[j].is_zero()) v[j] -= coeff * row[j];
    }
    RatVector residual;
    residual.reserve(static_cast<std::size_t>(d - s.dim()));
    for (int k = 0; k < d; ++k)
      if (!is_pivot[static_cast<std::size_t>(k)]) residual.push_back(v[static_cast<std::size_t>(k)]);
    return residual;
  };

  // Linear map Y -> ( [Y, b_r] mod s )_r on the n^2 coordinates of Y.
  std::vector<RatVector> columns;  // one entry per Y coordinate, stacked residuals
  columns.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RatMatrix e = RatMatrix::unit(n, i, j);
      RatVector stacked;
      for (const auto& b : s.basis()) {
        RatVector res = reduce_mod(bracket(e, b));
        stacked.insert(stacked.end(), res.begin(), res.end());
      }
      columns.push_back(std::move(stacked));
    }
  // rank of the map = rank of the column collection.
  std::vector<RatVector> rows = columns;
  const int rank = static_cast<int>(rref(rows).size());
  return d - rank;
}

std::map<Rational, RatMatrix> weight_decompose(const RatMatrix& m, const DiagonalDirection& x) {
  if (!m.is_square() || m.rows() != x.n()) throw Error("weight_decompose: dimension mismatch");
  const int n = m.rows();
  std::map<Rational, RatMatrix> parts;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m.at(i, j).is_zero()) continue;
      const Rational w = x.weight(i, j);
      auto it = parts.find(w);
      if (it == parts.end()) it = parts.emplace(w, RatMatrix(n, n)).first;
      it->second.at(i, j) = m.at(i, j);
    }
  return parts;
}

}  // namespace conjlim
