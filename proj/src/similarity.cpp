#include "holo/similarity.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "holo/minkowski.hpp"

namespace holo {

using Eigen::Index;

SimTransform SimTransform::identity(std::size_t n) {
  const auto k = static_cast<Index>(n);
  return {1.0, Eigen::MatrixXd::Identity(k, k), Eigen::VectorXd::Zero(k)};
}

SimTransform SimTransform::compose(const SimTransform& o) const {
  return {lambda * o.lambda, R * o.R, lambda * (R * o.t) + t};
}

SimTransform SimTransform::inverse() const {
  const Eigen::MatrixXd Rt = R.transpose();
  return {1.0 / lambda, Rt, -(Rt * t) / lambda};
}

double sim_distance(const SimTransform& a, const SimTransform& b) {
  if (a.n() != b.n()) throw DimensionMismatch("sim_distance: dimension mismatch");
  double d = std::abs(a.lambda - b.lambda);
  if (a.n() > 0) {
    d = std::max(d, (a.R - b.R).cwiseAbs().maxCoeff());
    d = std::max(d, (a.t - b.t).cwiseAbs().maxCoeff());
  }
  return d;
}

Eigen::MatrixXd dilation_matrix(std::size_t n, double a) {
  if (!(a > 0)) throw std::invalid_argument("dilation_matrix: a must be positive");
  const auto k = static_cast<Index>(n);
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(k + 2, k + 2);
  g(0, 0) = a;
  g(k + 1, k + 1) = 1.0 / a;
  return g;
}

Eigen::MatrixXd rotation_matrix(const Eigen::MatrixXd& f) {
  const Index k = f.rows();
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(k + 2, k + 2);
  g.block(1, 1, k, k) = f;
  return g;
}

Eigen::MatrixXd translation_matrix(const Eigen::VectorXd& X) {
  const Index k = X.size();
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(k + 2, k + 2);
  g.block(0, 1, 1, k) = -X.transpose();
  g.block(1, k + 1, k, 1) = X;
  g(0, k + 1) = -0.5 * X.squaredNorm();
  return g;
}

Eigen::MatrixXd gram_matrix(std::size_t n) { return to_eigen(MinkowskiSpace(n).gram()); }

double eta_orthogonality_defect(const Eigen::MatrixXd& g) {
  const Eigen::MatrixXd G = gram_matrix(static_cast<std::size_t>(g.rows()) - 2);
  return (g.transpose() * G * g - G).cwiseAbs().maxCoeff();
}

bool fixes_line_p(const QMatrix& g) {
  if (!g.square() || g.rows() < 3) return false;
  for (std::size_t i = 1; i < g.rows(); ++i)
    if (sgn(g(i, 0)) != 0) return false;
  return sgn(g(0, 0)) != 0;
}

bool fixes_line_p(const Eigen::MatrixXd& g, double tol) {
  if (g.rows() != g.cols() || g.rows() < 3) return false;
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  return g.col(0).tail(g.rows() - 1).cwiseAbs().maxCoeff() <= tol * scale && std::abs(g(0, 0)) > tol;
}

QVector boundary_action(const QMatrix& g, const QVector& Y) {
  if (!fixes_line_p(g)) throw std::invalid_argument("boundary_action: g does not preserve the line R p");
  const MinkowskiSpace V(Y.size());
  if (g.rows() != V.dim()) throw DimensionMismatch("boundary_action: matrix/point dimension mismatch");
  const QVector image = g * V.line_of_chart(Y);
  if (sgn(V.q_coord(image)) == 0) throw std::logic_error("boundary_action: image line is R p");
  return V.chart_of_line(image);
}

Eigen::VectorXd boundary_action(const Eigen::MatrixXd& g, const Eigen::VectorXd& Y) {
  const Index n = Y.size();
  if (g.rows() != n + 2 || g.cols() != n + 2) throw DimensionMismatch("boundary_action: matrix/point dimension mismatch");
  Eigen::VectorXd line(n + 2);
  line(0) = -0.5 * Y.squaredNorm();
  line.segment(1, n) = Y;
  line(n + 1) = 1.0;
  const Eigen::VectorXd image = g * line;
  if (std::abs(image(n + 1)) < 1e-300) throw std::logic_error("boundary_action: image line is R p");
  return image.segment(1, n) / image(n + 1);
}

SimTransform extract_sim(const Eigen::MatrixXd& g, double tol) {
  if (!fixes_line_p(g, tol)) throw std::invalid_argument("extract_sim: g does not preserve the line R p");
  const Index n = g.rows() - 2;
  SimTransform s;
  s.t = boundary_action(g, Eigen::VectorXd::Zero(n));
  Eigen::MatrixXd L(n, n);
  for (Index i = 0; i < n; ++i) L.col(i) = boundary_action(g, Eigen::VectorXd::Unit(n, i)) - s.t;
  s.lambda = n > 0 ? L.colwise().norm().mean() : 1.0;
  if (!(s.lambda > 0)) throw std::invalid_argument("extract_sim: degenerate linear part");
  s.R = L / s.lambda;
  if (n > 0) {
    const double defect = (s.R.transpose() * s.R - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (defect > tol || s.R.determinant() <= 0) {
      throw std::invalid_argument("extract_sim: linear part is not a positive multiple of a rotation (defect " +
                                  std::to_string(defect) + ")");
    }
  }
  return s;
}

double flow_check(const LieTriple& t, const Eigen::VectorXd& Y, double h) {
  const Eigen::VectorXd plus = boundary_action(exp(t, h), Y);
  const Eigen::VectorXd minus = boundary_action(exp(t, -h), Y);
  const Eigen::VectorXd derivative = (plus - minus) / (2.0 * h);
  const Eigen::VectorXd field = t.a.get_d() * Y + to_eigen(t.A) * Y + to_eigen(t.X);
  return (derivative - field).norm();
}

ScrewGroup ScrewGroup::dilation(const QMatrix& Z) {
  ScrewGroup s;
  s.variant = Variant::ScrewDilation;
  s.n = Z.rows();
  s.Z = Z;
  s.validate();
  return s;
}

ScrewGroup ScrewGroup::isometry(std::vector<QVector> U, std::vector<QMatrix> Zs) {
  ScrewGroup s;
  s.variant = Variant::ScrewIsometry;
  s.n = U.empty() ? (Zs.empty() ? 0 : Zs.front().rows()) : U.front().size();
  s.U = std::move(U);
  s.Zs = std::move(Zs);
  s.validate();
  return s;
}

void ScrewGroup::validate() const {
  if (variant == Variant::ScrewDilation) {
    if (Z.rows() != n || !Z.is_skew()) throw std::invalid_argument("ScrewGroup: Z must be a skew n x n matrix");
    return;
  }
  if (U.size() != Zs.size()) throw std::invalid_argument("ScrewGroup: need one generator per basis vector of U");
  if (Subspace::span(n, U).dim() != U.size()) throw std::invalid_argument("ScrewGroup: U basis is dependent");
  for (const auto& Z : Zs)
    if (Z.rows() != n || !Z.is_skew()) throw std::invalid_argument("ScrewGroup: generators must be skew n x n");
  for (std::size_t i = 0; i < Zs.size(); ++i) {
    for (const auto& u : U)
      if (!is_zero(Zs[i] * u)) throw std::invalid_argument("ScrewGroup: Psi(U) must act trivially on U");
    for (std::size_t j = i + 1; j < Zs.size(); ++j)
      if (!commutator(Zs[i], Zs[j]).is_zero()) throw std::invalid_argument("ScrewGroup: generators do not commute");
  }
}

ScrewElement screw_element(const ScrewGroup& s, double a) {
  if (s.variant != ScrewGroup::Variant::ScrewDilation)
    throw std::invalid_argument("screw_element: scalar parameter needs a screw dilation group");
  if (!(a > 0)) throw std::invalid_argument("screw_element: a must be positive");
  const Eigen::MatrixXd phi = (std::log(a) * to_eigen(s.Z)).exp();
  const auto k = static_cast<Index>(s.n);
  ScrewElement e;
  e.matrix = dilation_matrix(s.n, a) * rotation_matrix(phi);
  e.sim = {a, phi, Eigen::VectorXd::Zero(k)};
  return e;
}

ScrewElement screw_element(const ScrewGroup& s, const QVector& u) {
  if (s.variant != ScrewGroup::Variant::ScrewIsometry)
    throw std::invalid_argument("screw_element: vector parameter needs a screw isometry group");
  if (u.size() != s.n) throw DimensionMismatch("screw_element: u has wrong length");
  const auto c = solve(QMatrix::from_columns(s.U, s.n), u);
  if (!c) throw std::invalid_argument("screw_element: u is not in U");
  QMatrix gen(s.n, s.n);
  for (std::size_t j = 0; j < s.Zs.size(); ++j) gen += (*c)[j] * s.Zs[j];
  const Eigen::MatrixXd psi = to_eigen(gen).exp();
  const Eigen::VectorXd uu = to_eigen(u);
  ScrewElement e;
  e.matrix = translation_matrix(uu) * rotation_matrix(psi);
  e.sim = {1.0, psi, uu};
  return e;
}

}  // namespace holo
