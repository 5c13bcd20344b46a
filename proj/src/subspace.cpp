#include "conjlim/subspace.hpp"

#include <algorithm>

#include "conjlim/error.hpp"

namespace conjlim {

std::vector<int> rref(std::vector<RatVector>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const std::size_t dim = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != dim) throw Error("rref: inconsistent row lengths");

  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivoteq = rank;
    while (pivoteq < rows.size() && rows[pivoteq][col].is_zero()) ++pivoteq;
    if (pivoteq == rows.size()) continue;
    std::swap(rows[rank], rows[pivoteq]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (std::size_t j = col; j < dim; ++j) rows[rank][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank) continue;
      const Rational factor = rows[i][col];
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < dim; ++j) rows[i][j] -= factor * rows[rank][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

std::vector<RatVector> nullspace(const std::vector<RatVector>& equations, int dim) {
  std::vector<RatVector> rows = equations;
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != dim) throw Error("nullspace: equation length mismatch");
  const std::vector<int> pivots = rref(rows);
  std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<RatVector> basis;
  for (int freecol = 0; freecol < dim; ++freecol) {
    if (is_pivot[static_cast<std::size_t>(freecol)]) continue;
    RatVector v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(freecol)] = Rational(1);
    for (std::size_t r = 0; r < rows.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -rows[r][static_cast<std::size_t>(freecol)];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

RatVector flatten(const RatMatrix& m) { return m.entries(); }

RatMatrix unflatten(int n, const RatVector& v) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<std::size_t>(i) * n + j];
  return m;
}

}  // namespace

MatrixSubspace MatrixSubspace::zero(int ambient_n) {
  if (ambient_n <= 0) throw Error("subspace ambient dimension must be positive");
  return MatrixSubspace(ambient_n, {}, {});
}

MatrixSubspace MatrixSubspace::full(int ambient_n) {
  std::vector<RatMatrix> gens;
  for (int i = 0; i < ambient_n; ++i)
    for (int j = 0; j < ambient_n; ++j) gens.push_back(RatMatrix::unit(ambient_n, i, j));
  return echelonize(ambient_n, gens);
}

MatrixSubspace MatrixSubspace::echelonize(int ambient_n, const std::vector<RatMatrix>& generators) {
  if (ambient_n <= 0) throw Error("subspace ambient dimension must be positive");
  std::vector<RatVector> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != ambient_n)
      throw Error("echelonize: generator dimension mismatch");
    rows.push_back(flatten(g));
  }
  std::vector<int> pivots = rref(rows);
  std::vector<RatMatrix> basis;
  basis.reserve(rows.size());
  for (const auto& r : rows) basis.push_back(unflatten(ambient_n, r));
  return MatrixSubspace(ambient_n, std::move(basis), std::move(pivots));
}

MatrixSubspace MatrixSubspace::echelonize(const std::vector<RatMatrix>& generators) {
  if (generators.empty())
    throw Error("echelonize: ambient dimension unknown for empty generator list");
  return echelonize(generators[0].rows(), generators);
}

MatrixSubspace MatrixSubspace::coordinate(int ambient_n,
                                          const std::vector<std::pair<int, int>>& coords) {
  std::vector<RatMatrix> gens;
  gens.reserve(coords.size());
  for (const auto& [i, j] : coords) gens.push_back(RatMatrix::unit(ambient_n, i, j));
  return echelonize(ambient_n, gens);
}

bool MatrixSubspace::contains(const RatMatrix& m) const {
  if (!m.is_square() || m.rows() != n_) throw Error("contains: dimension mismatch");
  RatVector v = flatten(m);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const std::size_t p = static_cast<std::size_t>(pivots_[r]);
    const Rational coeff = v[p];
    if (coeff.is_zero()) continue;
    const RatVector row = flatten(basis_[r]);
    for (std::size_t j = p; j < v.size(); ++j)
      if (!row[j].is_zero()) v[j] -= coeff * row[j];
  }
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

bool MatrixSubspace::contains(const MatrixSubspace& other) const {
  if (other.n_ != n_) throw Error("contains: ambient mismatch");
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

MatrixSubspace sum(const MatrixSubspace& a, const MatrixSubspace& b) {
  if (a.ambient() != b.ambient()) throw Error("sum: ambient mismatch");
  std::vector<RatMatrix> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return MatrixSubspace::echelonize(a.ambient(), gens);
}

// Zassenhaus: rows [x|x] for x in a, [y|0] for y in b; after elimination
// rows with vanishing left half carry an intersection basis on the right.
MatrixSubspace intersect(const MatrixSubspace& a, const MatrixSubspace& b) {
  if (a.ambient() != b.ambient()) throw Error("intersect: ambient mismatch");
  const int n = a.ambient();
  const std::size_t d = static_cast<std::size_t>(n) * n;
  std::vector<RatVector> rows;
  for (const auto& x : a.basis()) {
    RatVector r(2 * d, Rational(0));
    const auto& e = x.entries();
    for (std::size_t k = 0; k < d; ++k) {
      r[k] = e[k];
      r[d + k] = e[k];
    }
    rows.push_back(std::move(r));
  }
  for (const auto& y : b.basis()) {
    RatVector r(2 * d, Rational(0));
    const auto& e = y.entries();
    for (std::size_t k = 0; k < d; ++k) r[k] = e[k];
    rows.push_back(std::move(r));
  }
  rref(rows);
  std::vector<RatMatrix> gens;
  for (const auto& r : rows) {
    bool left_zero = true;
    for (std::size_t k = 0; k < d && left_zero; ++k) left_zero = r[k].is_zero();
    if (!left_zero) continue;
    RatVector right(r.begin() + static_cast<long>(d), r.end());
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = right[static_cast<std::size_t>(i) * n + j];
    gens.push_back(std::move(m));
  }
  return MatrixSubspace::echelonize(n, gens);
}

}  // namespace conjlim
