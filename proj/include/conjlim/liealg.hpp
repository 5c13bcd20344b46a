#ifndef CONJLIM_LIEALG_HPP
#define CONJLIM_LIEALG_HPP

#include <map>
#include <utility>
#include <vector>

#include "conjlim/subspace.hpp"

namespace conjlim {

/// Diagonal matrix of rational weights; the conjugating one-parameter
/// direction. Conjugation by exp(tX) scales entry (i,j) by
/// e^{t(d_i - d_j)} as t -> +infinity.
class DiagonalDirection {
 public:
  explicit DiagonalDirection(std::vector<Rational> weights);
  static DiagonalDirection zero(int n);

  int n() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  Rational weight(int i, int j) const { return weights_[static_cast<std::size_t>(i)] - weights_[static_cast<std::size_t>(j)]; }
  bool is_zero() const;
  RatMatrix as_matrix() const { return RatMatrix::diagonal(weights_); }

  friend bool operator==(const DiagonalDirection& a, const DiagonalDirection& b) {
    return a.weights_ == b.weights_;
  }

 private:
  std::vector<Rational> weights_;
};

/// Partition of the n^2 matrix coordinates by weight d_i - d_j.
struct WeightDecomposition {
  DiagonalDirection direction;
  std::map<Rational, std::vector<std::pair<int, int>>> classes;
};

WeightDecomposition weight_classes(const DiagonalDirection& x);

/// Commutator ab - ba.
RatMatrix bracket(const RatMatrix& a, const RatMatrix& b);

/// True iff the bracket of every basis pair stays in s.
bool is_subalgebra(const MatrixSubspace& s);

/// { Y in s : [X, Y] = 0 }, solved as a kernel in the coefficient space
/// of s (independent of the weight-zero coordinate route).
MatrixSubspace centralizer_in(const MatrixSubspace& s, const DiagonalDirection& x);

/// dim { Y in gl_n : [Y, s] subset s }. Requires s to be a subalgebra.
int normalizer_dim(const MatrixSubspace& s);

/// Splits m into its weight components; the pieces sum back to m.
std::map<Rational, RatMatrix> weight_decompose(const RatMatrix& m, const DiagonalDirection& x);

}  // namespace conjlim

#endif
