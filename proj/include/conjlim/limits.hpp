#ifndef CONJLIM_LIMITS_HPP
#define CONJLIM_LIMITS_HPP

#include <optional>

#include "conjlim/liealg.hpp"

namespace conjlim {

/// Result of running the limit engines on one (algebra, direction) pair.
struct LimitReport {
  MatrixSubspace input;
  DiagonalDirection direction;
  MatrixSubspace oracle_limit;
  std::optional<MatrixSubspace> closed_form;  // only for symmetric-family inputs
  bool agree = true;                          // engines returned the same subspace
  bool dim_preserved = false;
  bool input_subalgebra = false;
  bool oracle_subalgebra = false;
};

/// lim_{t->+inf} Ad(exp(tX)) s as a point of the Grassmannian, computed
/// exactly as the leading-weight space: coordinates are processed in
/// decreasing weight order (ties broken by the row-major pivot order)
/// and each echelon row is truncated to the weight class of its pivot.
MatrixSubspace grassmann_limit(const MatrixSubspace& s, const DiagonalDirection& x);

/// Z_h(X) + full positive-weight coordinate space. Valid for the Lie
/// algebra of a symmetric subgroup with x in its 'b'; refuses other
/// inputs through the dimension-balance check
/// dim Z_h(X) + #{(i,j) : d_i > d_j} = dim h.
MatrixSubspace closed_form_limit(const MatrixSubspace& family_algebra, const DiagonalDirection& x);

/// Runs the oracle, and the closed form as well when `symmetric_family`
/// is set; checks dimension preservation and closure under brackets.
LimitReport verify_limit(const MatrixSubspace& s, const DiagonalDirection& x, bool symmetric_family);

}  // namespace conjlim

#endif
