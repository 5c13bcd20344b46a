#include "conjlim/matrix.hpp"

#include <ostream>
#include <sstream>

#include "conjlim/error.hpp"

namespace conjlim {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::unit(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw Error("unit matrix index out of range");
  RatMatrix m(n, n);
  m.at(i, j) = Rational(1);
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
  const int n = static_cast<int>(d.size());
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Rational RatMatrix::trace() const {
  if (!is_square()) throw Error("trace of non-square matrix");
  Rational t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {
void require_same_shape(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix shape mismatch");
}
}  // namespace

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix m(*this);
  for (auto& e : m.entries_) e = -e;
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return a.entries_ == b.entries_;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return os << m.str(); }

RatMatrix apply_permutation(const RatMatrix& m, const std::vector<int>& order) {
  if (!m.is_square() || static_cast<int>(order.size()) != m.rows())
    throw Error("permutation size mismatch");
  RatMatrix out(m.rows(), m.cols());
  for (int k = 0; k < m.rows(); ++k)
    for (int l = 0; l < m.cols(); ++l) out.at(k, l) = m.at(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(l)]);
  return out;
}

}  // namespace conjlim
