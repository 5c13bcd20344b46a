#ifndef CONJLIM_SUBSPACE_HPP
#define CONJLIM_SUBSPACE_HPP

#include <utility>
#include <vector>

#include "conjlim/matrix.hpp"

namespace conjlim {

using RatVector = std::vector<Rational>;

/// Reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each surviving row (strictly increasing).
std::vector<int> rref(std::vector<RatVector>& rows);

/// Basis of { x : rows * x = 0 } where each element of `rows` is one
/// linear equation on `dim` unknowns.
std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, int dim);

/// Linear subspace of the space of n x n matrices, stored as a reduced
/// echelon basis over the row-major flattening. The echelon form is
/// canonical, so two subspaces are equal iff their bases are equal.
class MatrixSubspace {
 public:
  static MatrixSubspace zero(int ambient_n);
  static MatrixSubspace full(int ambient_n);
  static MatrixSubspace echelonize(int ambient_n, const std::vector<RatMatrix>& generators);
  /// Infers the ambient dimension from the first generator.
  static MatrixSubspace echelonize(const std::vector<RatMatrix>& generators);
  /// Span of the unit matrices E_ij over the listed coordinates.
  static MatrixSubspace coordinate(int ambient_n, const std::vector<std::pair<int, int>>& coords);

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<RatMatrix>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const RatMatrix& m) const;
  bool contains(const MatrixSubspace& other) const;

  friend bool operator==(const MatrixSubspace& a, const MatrixSubspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const MatrixSubspace& a, const MatrixSubspace& b) { return !(a == b); }

 private:
  MatrixSubspace(int n, std::vector<RatMatrix> basis, std::vector<int> pivots)
      : n_(n), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  int n_ = 0;
  std::vector<RatMatrix> basis_;
  std::vector<int> pivots_;
};

MatrixSubspace sum(const MatrixSubspace& a, const MatrixSubspace& b);
MatrixSubspace intersect(const MatrixSubspace& a, const MatrixSubspace& b);

}  // namespace conjlim

#endif
