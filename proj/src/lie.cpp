#include "holo/lie.hpp"

#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace holo {

LieTriple LieTriple::zero(std::size_t n) { return {0, QMatrix(n, n), zeros(n)}; }

LieTriple LieTriple::dilation(std::size_t n, const Rational& a) { return {a, QMatrix(n, n), zeros(n)}; }

LieTriple LieTriple::rotation(const QMatrix& A) {
  LieTriple t{0, A, zeros(A.rows())};
  t.validate();
  return t;
}

LieTriple LieTriple::translation(const QVector& X) { return {0, QMatrix(X.size(), X.size()), X}; }

void LieTriple::validate() const {
  if (A.rows() != X.size() || A.cols() != X.size()) {
    throw DimensionMismatch("LieTriple: A is " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                            " but X has length " + std::to_string(X.size()));
  }
  if (!A.is_skew()) throw std::invalid_argument("LieTriple: A is not skew-symmetric");
}

bool LieTriple::is_zero() const { return sgn(a) == 0 && A.is_zero() && holo::is_zero(X); }

LieTriple operator+(const LieTriple& u, const LieTriple& v) { return {u.a + v.a, u.A + v.A, add(u.X, v.X)}; }
LieTriple operator-(const LieTriple& u, const LieTriple& v) { return {u.a - v.a, u.A - v.A, sub(u.X, v.X)}; }
LieTriple operator*(const Rational& s, const LieTriple& u) { return {s * u.a, s * u.A, scale(s, u.X)}; }

std::size_t skew_dimension(std::size_t n) { return n * (n - 1) / 2; }
std::size_t algebra_dimension(std::size_t n) { return 1 + skew_dimension(n) + n; }

QVector skew_coordinates(const QMatrix& A) {
  const std::size_t n = A.rows();
  QVector c;
  c.reserve(skew_dimension(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c.push_back(A(j, i));
  return c;
}

QMatrix skew_from_coordinates(std::size_t n, const QVector& c) {
  if (c.size() != skew_dimension(n)) throw DimensionMismatch("skew_from_coordinates: length");
  QMatrix A(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      A(j, i) = c[k];
      A(i, j) = -c[k];
    }
  return A;
}

QMatrix skew_generator(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix A(n, n);
  A(j, i) = 1;
  A(i, j) = -1;
  return A;
}

QVector triple_coordinates(const LieTriple& t) {
  QVector c;
  c.reserve(algebra_dimension(t.n()));
  c.push_back(t.a);
  const QVector k = skew_coordinates(t.A);
  c.insert(c.end(), k.begin(), k.end());
  c.insert(c.end(), t.X.begin(), t.X.end());
  return c;
}

LieTriple triple_from_coordinates(std::size_t n, const QVector& c) {
  if (c.size() != algebra_dimension(n)) throw DimensionMismatch("triple_from_coordinates: length");
  const std::size_t m = skew_dimension(n);
  QVector k(c.begin() + 1, c.begin() + 1 + static_cast<std::ptrdiff_t>(m));
  QVector x(c.begin() + 1 + static_cast<std::ptrdiff_t>(m), c.end());
  return {c[0], skew_from_coordinates(n, k), std::move(x)};
}

QMatrix embed_matrix(const LieTriple& t) {
  t.validate();
  const std::size_t n = t.n();
  QMatrix m(n + 2, n + 2);
  m(0, 0) = t.a;
  m(n + 1, n + 1) = -t.a;
  for (std::size_t i = 0; i < n; ++i) {
    m(0, i + 1) = -t.X[i];
    m(i + 1, n + 1) = t.X[i];
  }
  m.set_block(1, 1, t.A);
  return m;
}

LieTriple extract_triple(const QMatrix& m) {
  if (!m.square() || m.rows() < 3) throw DimensionMismatch("extract_triple: expected (n+2)x(n+2) matrix");
  const std::size_t n = m.rows() - 2;
  LieTriple t{m(0, 0), m.block(1, 1, n, n), m.block(1, n + 1, n, 1).col(0)};
  bool ok = m(n + 1, n + 1) == -t.a && sgn(m(0, n + 1)) == 0 && t.A.is_skew();
  for (std::size_t i = 0; i < n + 1 && ok; ++i) ok = sgn(m(i + 1, 0)) == 0 && sgn(m(n + 1, i)) == 0;
  for (std::size_t i = 0; i < n && ok; ++i) ok = m(0, i + 1) == -t.X[i];
  if (!ok) throw std::invalid_argument("extract_triple: matrix is not in so(V)_Rp form");
  return t;
}

LieTriple bracket(const LieTriple& u, const LieTriple& v) {
  if (u.n() != v.n()) throw DimensionMismatch("bracket: dimension mismatch");
  LieTriple r;
  r.a = 0;
  r.A = commutator(u.A, v.A);
  // (a1 I + A1) X2 - (a2 I + A2) X1
  r.X = sub(add(scale(u.a, v.X), u.A * v.X), add(scale(v.a, u.X), v.A * u.X));
  return r;
}

Subalgebra::Subalgebra(std::size_t n) : n_(n), space_(algebra_dimension(n)) {}

void Subalgebra::assign(Subspace s) {
  space_ = std::move(s);
  basis_.clear();
  for (const auto& c : space_.basis()) basis_.push_back(triple_from_coordinates(n_, c));
}

Subalgebra Subalgebra::from_span(std::size_t n, std::span<const LieTriple> elements) {
  std::vector<QVector> coords;
  for (const auto& e : elements) {
    if (e.n() != n) throw DimensionMismatch("Subalgebra::from_span: element of wrong dimension");
    e.validate();
    coords.push_back(triple_coordinates(e));
  }
  Subalgebra g(n);
  g.assign(Subspace::span(algebra_dimension(n), coords));
  if (!g.is_bracket_closed()) throw std::invalid_argument("Subalgebra::from_span: span is not closed under bracket");
  return g;
}

bool Subalgebra::contains(const LieTriple& t) const {
  if (t.n() != n_) throw DimensionMismatch("Subalgebra::contains: dimension mismatch");
  return space_.contains(triple_coordinates(t));
}

bool Subalgebra::is_bracket_closed() const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (!contains(bracket(basis_[i], basis_[j]))) return false;
  return true;
}

Subalgebra lie_closure(std::size_t n, std::span<const LieTriple> gens) {
  const std::size_t d = algebra_dimension(n);
  RowReducer rr(d);
  std::vector<LieTriple> elems;
  for (const auto& g : gens) {
    if (g.n() != n) throw DimensionMismatch("lie_closure: generator of wrong dimension");
    g.validate();
    if (rr.insert(triple_coordinates(g))) elems.push_back(g);
  }
  // Brackets of every new element with all earlier ones; the span grows
  // monotonically so at most d rounds are needed.
  std::size_t done = 0;
  for (std::size_t round = 0; round <= d && done < elems.size(); ++round) {
    const std::size_t end = elems.size();
    for (std::size_t i = done; i < end; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        LieTriple b = bracket(elems[j], elems[i]);
        if (rr.insert(triple_coordinates(b))) elems.push_back(std::move(b));
      }
    }
    done = end;
  }
  Subalgebra g(n);
  g.assign(Subspace::span(d, rr.rows()));
  return g;
}

Subalgebra full_algebra(std::size_t n) {
  std::vector<LieTriple> gens{LieTriple::dilation(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(LieTriple::rotation(skew_generator(n, i, j)));
  for (std::size_t i = 0; i < n; ++i) gens.push_back(LieTriple::translation(unit_vector(n, i)));
  return Subalgebra::from_span(n, gens);
}

ProjectedParts project_parts(const Subalgebra& g) {
  const std::size_t n = g.n();
  const std::size_t m = skew_dimension(n);
  std::vector<QVector> as, ks, xs;
  for (const auto& t : g.basis()) {
    as.push_back({t.a});
    ks.push_back(skew_coordinates(t.A));
    xs.push_back(t.X);
  }
  ProjectedParts parts{Subspace::span(1, as), Subspace::span(m, ks), Subspace::span(n, xs), Subspace(n)};

  // pure_N: combinations sum c_k t_k with vanishing a- and A-parts.
  const std::size_t k = g.dim();
  RowReducer rr(k);
  for (std::size_t r = 0; r < 1 + m; ++r) {
    QVector row(k);
    for (std::size_t c = 0; c < k; ++c) row[c] = r == 0 ? as[c][0] : ks[c][r - 1];
    rr.insert(std::move(row));
  }
  std::vector<QVector> pure;
  for (const auto& c : rr.nullspace()) {
    QVector x = zeros(n);
    for (std::size_t i = 0; i < k; ++i)
      if (sgn(c[i]) != 0) x = add(x, scale(c[i], xs[i]));
    pure.push_back(std::move(x));
  }
  parts.pure_n = Subspace::span(n, pure);
  return parts;
}

Subspace skew_span(std::size_t n, std::span<const QMatrix> mats) {
  std::vector<QVector> coords;
  for (const auto& A : mats) {
    if (A.rows() != n || !A.is_skew()) throw std::invalid_argument("skew_span: expected skew n x n matrices");
    coords.push_back(skew_coordinates(A));
  }
  return Subspace::span(skew_dimension(n), coords);
}

std::vector<QMatrix> skew_basis(std::size_t n, const Subspace& s) {
  std::vector<QMatrix> out;
  for (const auto& c : s.basis()) out.push_back(skew_from_coordinates(n, c));
  return out;
}

CompactSplit center_and_commutant(std::size_t n, std::span<const QMatrix> B) {
  const Subspace b = skew_span(n, B);
  const auto basis = skew_basis(n, b);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!b.contains(skew_coordinates(commutator(basis[i], basis[j]))))
        throw std::invalid_argument("center_and_commutant: B is not closed under bracket");

  // B' = span of brackets, closed under further brackets.
  RowReducer rr(skew_dimension(n));
  std::vector<QMatrix> derived;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      QMatrix c = commutator(basis[i], basis[j]);
      if (rr.insert(skew_coordinates(c))) derived.push_back(std::move(c));
    }
  for (std::size_t i = 0; i < derived.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      QMatrix c = commutator(derived[j], derived[i]);
      if (rr.insert(skew_coordinates(c))) derived.push_back(std::move(c));
    }
  const Subspace commutant = Subspace::span(skew_dimension(n), rr.rows());

  // z(B): sum c_k b_k with [sum c_k b_k, b_j] = 0 for all j.
  const std::size_t k = basis.size();
  RowReducer eq(k);
  for (const auto& bj : basis) {
    std::vector<QVector> cols;
    for (const auto& bk : basis) cols.push_back(skew_coordinates(commutator(bk, bj)));
    for (std::size_t r = 0; r < skew_dimension(n); ++r) {
      QVector row(k);
      for (std::size_t c = 0; c < k; ++c) row[c] = cols[c][r];
      eq.insert(std::move(row));
    }
  }
  std::vector<QVector> center_coords;
  for (const auto& c : eq.nullspace()) {
    QVector v = zeros(skew_dimension(n));
    for (std::size_t i = 0; i < k; ++i)
      if (sgn(c[i]) != 0) v = add(v, scale(c[i], b.basis()[i]));
    center_coords.push_back(std::move(v));
  }
  const Subspace center = Subspace::span(skew_dimension(n), center_coords);

  if (commutant.dim() + center.dim() != b.dim() || !commutant.intersect(center).is_zero())
    throw std::invalid_argument("center_and_commutant: B is not the direct sum of B' and z(B)");
  return {skew_basis(n, commutant), skew_basis(n, center)};
}

QMatrix dilation_element(std::size_t n, const Rational& a) {
  if (sgn(a) <= 0) throw std::invalid_argument("dilation_element: a must be positive");
  QMatrix g = QMatrix::identity(n + 2);
  g(0, 0) = a;
  g(n + 1, n + 1) = 1 / a;
  return g;
}

QMatrix rotation_element(const QMatrix& f) {
  const std::size_t n = f.rows();
  QMatrix g = QMatrix::identity(n + 2);
  g.set_block(1, 1, f);
  return g;
}

QMatrix translation_element(const QVector& X) {
  const std::size_t n = X.size();
  QMatrix g = QMatrix::identity(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    g(0, i + 1) = -X[i];
    g(i + 1, n + 1) = X[i];
  }
  g(0, n + 1) = -dot(X, X) / 2;
  return g;
}

QMatrix cayley_rotation(const QMatrix& S) {
  if (!S.is_skew()) throw std::invalid_argument("cayley_rotation: S must be skew");
  const QMatrix I = QMatrix::identity(S.rows());
  const auto inv = inverse(I + S);
  return (I - S) * *inv;  // I + S is invertible for skew S
}

Eigen::MatrixXd to_eigen(const QMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).get_d();
  return out;
}

Eigen::VectorXd to_eigen(const QVector& v) {
  Eigen::VectorXd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].get_d();
  return out;
}

Eigen::MatrixXd exp(const LieTriple& t, double s) {
  const Eigen::MatrixXd m = s * to_eigen(embed_matrix(t));
  return m.exp();
}

}  // namespace holo
