#pragma once

// The Lie algebra so(V)_Rp of eta-skew endomorphisms of V preserving the
// isotropic line R p.  An element is a triple (a, A, X) with a scalar, A a
// skew n x n matrix and X in E, embedded in the (p, e, q) basis as
//
//   [ a  -X^T   0 ]
//   [ 0   A     X ]
//   [ 0   0    -a ]

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "holo/linalg.hpp"
#include "holo/rational.hpp"

namespace holo {

struct LieTriple {
  Rational a;
  QMatrix A;
  QVector X;

  static LieTriple zero(std::size_t n);
  static LieTriple dilation(std::size_t n, const Rational& a = 1);
  static LieTriple rotation(const QMatrix& A);
  static LieTriple translation(const QVector& X);

  std::size_t n() const { return X.size(); }
  /// Throws if A is not skew or sizes disagree.
  void validate() const;
  bool is_zero() const;

  friend bool operator==(const LieTriple& u, const LieTriple& v) {
    return u.a == v.a && u.A == v.A && u.X == v.X;
  }
};

LieTriple operator+(const LieTriple& u, const LieTriple& v);
LieTriple operator-(const LieTriple& u, const LieTriple& v);
LieTriple operator*(const Rational& s, const LieTriple& u);

/// dim so(V)_Rp = 1 + n(n-1)/2 + n.
std::size_t algebra_dimension(std::size_t n);
std::size_t skew_dimension(std::size_t n);

// Skew matrices <-> coordinates A(j, i), i < j, in row-major order of (i, j).
QVector skew_coordinates(const QMatrix& A);
QMatrix skew_from_coordinates(std::size_t n, const QVector& c);
/// Rotation generator of the (e_i, e_j) plane taking e_i to e_j (0-based i < j).
QMatrix skew_generator(std::size_t n, std::size_t i, std::size_t j);

// Triples <-> coordinates (a, skew coordinates of A, X).
QVector triple_coordinates(const LieTriple& t);
LieTriple triple_from_coordinates(std::size_t n, const QVector& c);

QMatrix embed_matrix(const LieTriple& t);
/// Inverse of embed_matrix; throws if m is not of the embedded form.
LieTriple extract_triple(const QMatrix& m);

/// (0, [A1,A2], (a1 I + A1) X2 - (a2 I + A2) X1)
LieTriple bracket(const LieTriple& u, const LieTriple& v);

/// A bracket-closed subspace of so(V)_Rp with a canonical (reduced echelon) basis.
class Subalgebra {
 public:
  explicit Subalgebra(std::size_t n);

  /// Wraps the span of `elements` and verifies bracket closure; throws
  /// std::invalid_argument if the span is not closed.
  static Subalgebra from_span(std::size_t n, std::span<const LieTriple> elements);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return space_.dim(); }
  const std::vector<LieTriple>& basis() const { return basis_; }
  const Subspace& coordinates() const { return space_; }

  bool contains(const LieTriple& t) const;
  bool is_bracket_closed() const;

  friend bool operator==(const Subalgebra& a, const Subalgebra& b) { return a.space_ == b.space_; }

 private:
  friend Subalgebra lie_closure(std::size_t, std::span<const LieTriple>);
  void assign(Subspace s);

  std::size_t n_;
  Subspace space_;
  std::vector<LieTriple> basis_;
};

/// Smallest subalgebra containing the generators.
Subalgebra lie_closure(std::size_t n, std::span<const LieTriple> gens);

/// The whole algebra (A + K) x N.
Subalgebra full_algebra(std::size_t n);

struct ProjectedParts {
  Subspace pr_a;        // subspace of R (dimension 0 or 1)
  Subspace pr_k;        // subspace of so(E), skew coordinates
  Subspace n_part;      // X-projection of the algebra, subspace of E
  Subspace pure_n;      // {X : (0, 0, X) in g}
};

ProjectedParts project_parts(const Subalgebra& g);

/// Subspace of so(E) spanned by skew matrices, as skew coordinates.
Subspace skew_span(std::size_t n, std::span<const QMatrix> mats);
std::vector<QMatrix> skew_basis(std::size_t n, const Subspace& s);

struct CompactSplit {
  std::vector<QMatrix> commutant;  // B'
  std::vector<QMatrix> center;     // z(B)
};

/// B = B' + z(B) for a bracket-closed B in so(E); throws std::invalid_argument
/// if B is not closed or the sum is not direct.
CompactSplit center_and_commutant(std::size_t n, std::span<const QMatrix> B);

// Group elements (exact) in the (p, e, q) basis.
QMatrix dilation_element(std::size_t n, const Rational& a);  // diag(a, I, 1/a)
QMatrix rotation_element(const QMatrix& f);                  // diag(1, f, 1)
QMatrix translation_element(const QVector& X);               // N-matrix
/// Rational rotation (I - S)(I + S)^{-1} for skew S.
QMatrix cayley_rotation(const QMatrix& S);

Eigen::MatrixXd to_eigen(const QMatrix& m);
Eigen::VectorXd to_eigen(const QVector& v);

/// exp(s * embed_matrix(t)) in double precision.
Eigen::MatrixXd exp(const LieTriple& t, double s = 1.0);

}  // namespace holo
