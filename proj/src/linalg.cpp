#include "holo/linalg.hpp"

#include <algorithm>

namespace holo {

namespace {

std::size_t leading_index(const QVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return i;
  return v.size();
}

}  // namespace

QVector RowReducer::reduce(QVector v) const {
  if (v.size() != cols_) throw DimensionMismatch("RowReducer::reduce: wrong row length");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    const Rational f = v[p];
    const QVector& r = rows_[k];
    for (std::size_t j = p; j < cols_; ++j)
      if (sgn(r[j]) != 0) v[j] -= f * r[j];
  }
  return v;
}

bool RowReducer::insert(QVector row) {
  QVector v = reduce(std::move(row));
  const std::size_t p = leading_index(v);
  if (p == cols_) return false;
  const Rational inv = 1 / v[p];
  for (std::size_t j = p; j < cols_; ++j) v[j] *= inv;
  for (auto& r : rows_) {
    if (sgn(r[p]) == 0) continue;
    const Rational f = r[p];
    for (std::size_t j = p; j < cols_; ++j)
      if (sgn(v[j]) != 0) r[j] -= f * v[j];
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

std::vector<QVector> RowReducer::nullspace() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    QVector x(cols_);
    x[f] = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) x[pivots_[k]] = -rows_[k][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const QMatrix& m) {
  RowReducer rr(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rr.insert(m.row(r));
  return rr.rank();
}

std::vector<QVector> nullspace(const QMatrix& m) {
  RowReducer rr(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rr.insert(m.row(r));
  return rr.nullspace();
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length");
  const std::size_t n = a.cols();
  RowReducer rr(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    QVector row = a.row(r);
    row.push_back(b[r]);
    rr.insert(std::move(row));
  }
  QVector x(n);
  for (std::size_t k = 0; k < rr.rank(); ++k) {
    const std::size_t p = rr.pivots()[k];
    if (p == n) return std::nullopt;
    x[p] = rr.rows()[k][n];
  }
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (!m.square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RowReducer rr(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    QVector row = m.row(r);
    row.resize(2 * n);
    row[n + r] = 1;
    rr.insert(std::move(row));
  }
  if (rr.rank() < n || rr.pivots()[n - 1] >= n) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.rows()[r][n + c];
  return inv;
}

Rational determinant(QMatrix m) {
  if (!m.square()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m(piv, c)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<QVector>& vectors) {
  RowReducer rr(ambient);
  for (const auto& v : vectors) rr.insert(v);
  Subspace s(ambient);
  s.basis_ = rr.rows();
  s.pivots_ = rr.pivots();
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<QVector> units;
  for (std::size_t i = 0; i < ambient; ++i) units.push_back(unit_vector(ambient, i));
  return span(ambient, units);
}

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("Subspace::contains: wrong vector length");
  QVector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(r[p]) == 0) continue;
    const Rational f = r[p];
    for (std::size_t j = p; j < ambient_; ++j)
      if (sgn(basis_[k][j]) != 0) r[j] -= f * basis_[k][j];
  }
  return holo::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const QVector& v) { return contains(v); });
}

QVector Subspace::coordinates(const QVector& v) const {
  if (!contains(v)) throw std::invalid_argument("Subspace::coordinates: vector not in subspace");
  QVector c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace::sum: ambient mismatch");
  std::vector<QVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace::intersect: ambient mismatch");
  // (A^perp + B^perp)^perp
  return orthogonal_complement().sum(other.orthogonal_complement()).orthogonal_complement();
}

Subspace Subspace::orthogonal_complement() const {
  RowReducer rr(ambient_);
  for (const auto& b : basis_) rr.insert(b);
  return span(ambient_, rr.nullspace());
}

Subspace Subspace::orthogonal_complement(const QMatrix& gram) const {
  if (gram.rows() != ambient_ || gram.cols() != ambient_)
    throw DimensionMismatch("Subspace::orthogonal_complement: Gram size");
  RowReducer rr(ambient_);
  const QMatrix gt = gram.transpose();
  for (const auto& b : basis_) rr.insert(gt * b);
  return span(ambient_, rr.nullspace());
}

Subspace Subspace::image(const QMatrix& m) const {
  if (m.cols() != ambient_) throw DimensionMismatch("Subspace::image: matrix width");
  std::vector<QVector> imgs;
  for (const auto& b : basis_) imgs.push_back(m * b);
  return span(m.rows(), imgs);
}

bool Subspace::invariant_under(const QMatrix& m) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](const QVector& b) { return contains(m * b); });
}

Rational restricted_gram_determinant(const Subspace& s, const QMatrix& gram) {
  const auto& b = s.basis();
  QMatrix g(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const QVector gb = gram * b[i];
    for (std::size_t j = 0; j < b.size(); ++j) g(j, i) = dot(b[j], gb);
  }
  return determinant(g);
}

}  // namespace holo
