#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

/// Accumulates rows and keeps them in reduced row echelon form.
///
/// Rows are inserted one at a time, so large sparse linear systems never need
/// to be materialized; the reduced form holds at most `cols` rows.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  /// Returns true when `row` was independent of the rows seen so far.
  bool insert(QVector row);

  /// Reduces `v` against the current rows; zero result means v is in the row space.
  QVector reduce(QVector v) const;

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<QVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Basis of {x : row . x = 0 for every inserted row}.
  std::vector<QVector> nullspace() const;

 private:
  std::size_t cols_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const QMatrix& m);
std::vector<QVector> nullspace(const QMatrix& m);
/// One solution of a x = b (free variables set to zero), or nullopt.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);
std::optional<QMatrix> inverse(const QMatrix& m);
Rational determinant(QMatrix m);

/// Linear subspace of Q^d stored by its reduced echelon basis, so equal
/// subspaces have identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<QVector>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }
  const std::vector<QVector>& basis() const { return basis_; }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in basis(); throws if v is not in the subspace.
  QVector coordinates(const QVector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Complement with respect to the standard dot product.
  Subspace orthogonal_complement() const;
  /// Complement with respect to the bilinear form x^T gram y.
  Subspace orthogonal_complement(const QMatrix& gram) const;
  /// Image under a linear map.
  Subspace image(const QMatrix& m) const;
  /// True when m maps the subspace into itself.
  bool invariant_under(const QMatrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Gram determinant of the form restricted to the subspace (basis as given).
Rational restricted_gram_determinant(const Subspace& s, const QMatrix& gram);

}  // namespace holo
