#pragma once

// Minkowski space V of dimension n+2 in the null basis p, e_1..e_n, q with
//   eta(p, q) = 1, eta(e_i, e_j) = delta_ij, all other pairings zero.
// Vectors are coordinate arrays of length n+2 ordered (p, e_1..e_n, q).

#include <cstddef>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

/// Number of the form r + s*sqrt(2) with rational r, s.
struct Sqrt2Rational {
  Rational rational;
  Rational sqrt2;

  friend bool operator==(const Sqrt2Rational& a, const Sqrt2Rational& b) {
    return a.rational == b.rational && a.sqrt2 == b.sqrt2;
  }
  double to_double() const;
  int sign() const;
};

Sqrt2Rational operator+(const Sqrt2Rational& a, const Sqrt2Rational& b);
Sqrt2Rational operator-(const Sqrt2Rational& a, const Sqrt2Rational& b);
Sqrt2Rational operator*(const Sqrt2Rational& a, const Sqrt2Rational& b);

/// Coordinates in the orthonormal basis e_0, e_1..e_n, e_{n+1} with
/// e_0 = (p - q)/sqrt2, e_{n+1} = (p + q)/sqrt2.
using OrthonormalVector = std::vector<Sqrt2Rational>;

class MinkowskiSpace {
 public:
  explicit MinkowskiSpace(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return n_ + 2; }

  std::size_t p_index() const { return 0; }
  std::size_t e_index(std::size_t i) const;  // i in 1..n
  std::size_t q_index() const { return n_ + 1; }

  QVector p() const;
  QVector q() const;
  QVector e(std::size_t i) const;  // i in 1..n

  /// Gram matrix in the (p, e, q) basis.
  const QMatrix& gram() const { return gram_; }
  /// Gram matrix diag(-1, 1, ..., 1) in the orthonormal basis.
  QMatrix orthonormal_gram() const;

  Rational eta(const QVector& x, const QVector& y) const;
  Sqrt2Rational eta_orthonormal(const OrthonormalVector& x, const OrthonormalVector& y) const;

  OrthonormalVector to_orthonormal(const QVector& x) const;
  /// Inverse of to_orthonormal; throws if the result is not rational.
  QVector from_orthonormal(const OrthonormalVector& x) const;

  bool on_light_cone(const QVector& x) const;
  bool on_light_cone(const std::vector<double>& x, double tol = 1e-9) const;

  /// E-part Y of the isotropic line R v written as R(-|Y|^2/2 p + Y + q).
  QVector chart_of_line(const QVector& v) const;
  /// -|Y|^2/2 p + Y + q.
  QVector line_of_chart(const QVector& y) const;

  /// Splits x into (p-coefficient, E-part, q-coefficient).
  Rational p_coord(const QVector& x) const { return x.at(0); }
  Rational q_coord(const QVector& x) const { return x.at(n_ + 1); }
  QVector e_part(const QVector& x) const;
  QVector assemble(const Rational& xp, const QVector& alpha, const Rational& xq) const;

  void check(const QVector& x) const;

 private:
  std::size_t n_;
  QMatrix gram_;
};

}  // namespace holo
