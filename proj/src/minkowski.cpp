#include "holo/minkowski.hpp"

#include <cmath>
#include <stdexcept>

namespace holo {

double Sqrt2Rational::to_double() const { return rational.get_d() + sqrt2.get_d() * std::sqrt(2.0); }

int Sqrt2Rational::sign() const {
  // sign of r + s sqrt2, compared exactly through squares
  const int sr = sgn(rational), ss = sgn(sqrt2);
  if (ss == 0) return sr;
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  const Rational lhs = rational * rational;
  const Rational rhs = 2 * sqrt2 * sqrt2;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sr : ss;
}

Sqrt2Rational operator+(const Sqrt2Rational& a, const Sqrt2Rational& b) {
  return {a.rational + b.rational, a.sqrt2 + b.sqrt2};
}

Sqrt2Rational operator-(const Sqrt2Rational& a, const Sqrt2Rational& b) {
  return {a.rational - b.rational, a.sqrt2 - b.sqrt2};
}

Sqrt2Rational operator*(const Sqrt2Rational& a, const Sqrt2Rational& b) {
  return {a.rational * b.rational + 2 * a.sqrt2 * b.sqrt2, a.rational * b.sqrt2 + a.sqrt2 * b.rational};
}

MinkowskiSpace::MinkowskiSpace(std::size_t n) : n_(n), gram_(n + 2, n + 2) {
  if (n == 0) throw std::invalid_argument("MinkowskiSpace: n must be positive");
  gram_(0, n + 1) = 1;
  gram_(n + 1, 0) = 1;
  for (std::size_t i = 1; i <= n; ++i) gram_(i, i) = 1;
}

std::size_t MinkowskiSpace::e_index(std::size_t i) const {
  if (i < 1 || i > n_) throw std::out_of_range("MinkowskiSpace::e_index");
  return i;
}

QVector MinkowskiSpace::p() const { return unit_vector(dim(), 0); }
QVector MinkowskiSpace::q() const { return unit_vector(dim(), n_ + 1); }
QVector MinkowskiSpace::e(std::size_t i) const { return unit_vector(dim(), e_index(i)); }

QMatrix MinkowskiSpace::orthonormal_gram() const {
  QMatrix g = QMatrix::identity(dim());
  g(0, 0) = -1;
  return g;
}

void MinkowskiSpace::check(const QVector& x) const {
  if (x.size() != dim()) {
    throw DimensionMismatch("vector has " + std::to_string(x.size()) + " coordinates, expected " +
                            std::to_string(dim()));
  }
}

Rational MinkowskiSpace::eta(const QVector& x, const QVector& y) const {
  check(x);
  check(y);
  Rational s = x[0] * y[n_ + 1] + x[n_ + 1] * y[0];
  for (std::size_t i = 1; i <= n_; ++i) s += x[i] * y[i];
  return s;
}

Sqrt2Rational MinkowskiSpace::eta_orthonormal(const OrthonormalVector& x, const OrthonormalVector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("eta_orthonormal: wrong length");
  Sqrt2Rational s{0, 0};
  s = s - x[0] * y[0];
  for (std::size_t i = 1; i < dim(); ++i) s = s + x[i] * y[i];
  return s;
}

OrthonormalVector MinkowskiSpace::to_orthonormal(const QVector& x) const {
  check(x);
  // x_p p + x_q q = (sqrt2/2)(x_p - x_q) e_0 + (sqrt2/2)(x_p + x_q) e_{n+1}
  OrthonormalVector o(dim());
  const Rational half(1, 2);
  o[0] = {0, half * (x[0] - x[n_ + 1])};
  for (std::size_t i = 1; i <= n_; ++i) o[i] = {x[i], 0};
  o[n_ + 1] = {0, half * (x[0] + x[n_ + 1])};
  return o;
}

QVector MinkowskiSpace::from_orthonormal(const OrthonormalVector& o) const {
  if (o.size() != dim()) throw DimensionMismatch("from_orthonormal: wrong length");
  // p = (e_0 + e_{n+1})/sqrt2, q = (e_{n+1} - e_0)/sqrt2
  // x_p = (o_0 + o_{n+1})/sqrt2, x_q = (o_{n+1} - o_0)/sqrt2; 1/sqrt2 = sqrt2/2
  auto div_sqrt2 = [](const Sqrt2Rational& v) {
    // (r + s sqrt2) / sqrt2 = s + (r/2) sqrt2
    return Sqrt2Rational{v.sqrt2, v.rational / 2};
  };
  const Sqrt2Rational xp = div_sqrt2(o[0] + o[n_ + 1]);
  const Sqrt2Rational xq = div_sqrt2(o[n_ + 1] - o[0]);
  QVector x(dim());
  auto rational_of = [](const Sqrt2Rational& v) {
    if (sgn(v.sqrt2) != 0) throw std::invalid_argument("from_orthonormal: irrational coordinate");
    return v.rational;
  };
  x[0] = rational_of(xp);
  x[n_ + 1] = rational_of(xq);
  for (std::size_t i = 1; i <= n_; ++i) x[i] = rational_of(o[i]);
  return x;
}

bool MinkowskiSpace::on_light_cone(const QVector& x) const { return sgn(eta(x, x)) == 0; }

bool MinkowskiSpace::on_light_cone(const std::vector<double>& x, double tol) const {
  if (x.size() != dim()) throw DimensionMismatch("on_light_cone: wrong length");
  double s = 2.0 * x[0] * x[n_ + 1];
  for (std::size_t i = 1; i <= n_; ++i) s += x[i] * x[i];
  return std::abs(s) <= tol;
}

QVector MinkowskiSpace::e_part(const QVector& x) const {
  check(x);
  return QVector(x.begin() + 1, x.begin() + static_cast<std::ptrdiff_t>(n_ + 1));
}

QVector MinkowskiSpace::assemble(const Rational& xp, const QVector& alpha, const Rational& xq) const {
  if (alpha.size() != n_) throw DimensionMismatch("assemble: E-part length");
  QVector x(dim());
  x[0] = xp;
  for (std::size_t i = 0; i < n_; ++i) x[i + 1] = alpha[i];
  x[n_ + 1] = xq;
  return x;
}

QVector MinkowskiSpace::chart_of_line(const QVector& v) const {
  if (!on_light_cone(v)) throw std::invalid_argument("chart_of_line: vector is not isotropic");
  if (sgn(v[n_ + 1]) == 0) throw std::invalid_argument("chart_of_line: line is R p (the deleted pole)");
  return scale(1 / v[n_ + 1], e_part(v));
}

QVector MinkowskiSpace::line_of_chart(const QVector& y) const {
  if (y.size() != n_) throw DimensionMismatch("line_of_chart: E-vector length");
  return assemble(-dot(y, y) / 2, y, 1);
}

}  // namespace holo
