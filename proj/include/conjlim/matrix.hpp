#ifndef CONJLIM_MATRIX_HPP
#define CONJLIM_MATRIX_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "conjlim/rational.hpp"

namespace conjlim {

/// Dense matrix with exact rational entries, row-major storage.
/// Entry (i,j) of an n x n matrix flattens to coordinate i*n + j
/// (0-indexed); that convention is shared by every module.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);

  static RatMatrix identity(int n);
  /// E_ij: single 1 at (i,j), 0-indexed.
  static RatMatrix unit(int n, int i, int j);
  static RatMatrix diagonal(const std::vector<Rational>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  Rational trace() const;
  RatMatrix transpose() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& c);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& c) { return a *= c; }
  friend RatMatrix operator*(const Rational& c, RatMatrix a) { return a *= c; }
  RatMatrix operator-() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

/// Conjugate m by the permutation sending old index order[k] to new
/// position k: result(k,l) = m(order[k], order[l]).
RatMatrix apply_permutation(const RatMatrix& m, const std::vector<int>& order);

}  // namespace conjlim

#endif
