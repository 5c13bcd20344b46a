#include "conjlim/limits.hpp"

#include <algorithm>
#include <numeric>

#include "conjlim/error.hpp"

namespace conjlim {

MatrixSubspace grassmann_limit(const MatrixSubspace& s, const DiagonalDirection& x) {
  if (s.ambient() != x.n()) throw Error("grassmann_limit: dimension mismatch");
  const int n = s.ambient();
  const int d = n * n;
  if (s.dim() == 0) return s;

  // Flat coordinate -> weight, and the processing order: weight
  // descending, row-major within a weight class.
  std::vector<Rational> weight_of(static_cast<std::size_t>(d));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) weight_of[static_cast<std::size_t>(i) * n + j] = x.weight(i, j);
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weight_of[static_cast<std::size_t>(a)] > weight_of[static_cast<std::size_t>(b)];
  });

  std::vector<RatVector> rows;
  rows.reserve(static_cast<std::size_t>(s.dim()));
  for (const auto& b : s.basis()) {
    const auto& e = b.entries();
    RatVector r(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) r[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
    rows.push_back(std::move(r));
  }
  const std::vector<int> pivots = rref(rows);

  // Keep only the pivot's weight class in each row.
  std::vector<RatMatrix> leading;
  leading.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Rational lead_weight = weight_of[static_cast<std::size_t>(order[static_cast<std::size_t>(pivots[r])])];
    RatMatrix m(n, n);
    for (int k = 0; k < d; ++k) {
      const int flat = order[static_cast<std::size_t>(k)];
      if (weight_of[static_cast<std::size_t>(flat)] != lead_weight) continue;
      m.at(flat / n, flat % n) = rows[r][static_cast<std::size_t>(k)];
    }
    leading.push_back(std::move(m));
  }
  return MatrixSubspace::echelonize(n, leading);
}

MatrixSubspace closed_form_limit(const MatrixSubspace& family_algebra, const DiagonalDirection& x) {
  if (family_algebra.ambient() != x.n()) throw Error("closed_form_limit: dimension mismatch");
  const int n = family_algebra.ambient();
  const MatrixSubspace z = centralizer_in(family_algebra, x);
  std::vector<std::pair<int, int>> positive;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x.weight(i, j).sign() > 0) positive.emplace_back(i, j);
  if (z.dim() + static_cast<int>(positive.size()) != family_algebra.dim())
    throw Error("closed_form_limit: dimension balance violated (direction not in this family's b)");
  if (positive.empty()) return z;
  return sum(z, MatrixSubspace::coordinate(n, positive));
}

LimitReport verify_limit(const MatrixSubspace& s, const DiagonalDirection& x, bool symmetric_family) {
  LimitReport report{s, x, grassmann_limit(s, x), std::nullopt};
  report.dim_preserved = report.oracle_limit.dim() == s.dim();
  report.input_subalgebra = is_subalgebra(s);
  report.oracle_subalgebra = is_subalgebra(report.oracle_limit);
  if (symmetric_family) {
    report.closed_form = closed_form_limit(s, x);
    report.agree = (*report.closed_form == report.oracle_limit);
  }
  return report;
}

}  // namespace conjlim
