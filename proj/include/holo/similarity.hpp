#pragma once

// SO(V)_Rp acting on E = boundary minus the point R p, i.e. as similarities
// v -> lambda R v + t.  The chart sends Y in E to the isotropic line through
// -|Y|^2/2 p + Y + q.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "holo/lie.hpp"
#include "holo/rational.hpp"

namespace holo {

struct SimTransform {
  double lambda = 1.0;
  Eigen::MatrixXd R;
  Eigen::VectorXd t;

  static SimTransform identity(std::size_t n);

  std::size_t n() const { return static_cast<std::size_t>(t.size()); }
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const { return lambda * (R * v) + t; }
  /// (this o other)(v) = this(other(v)).
  SimTransform compose(const SimTransform& other) const;
  SimTransform inverse() const;
};

/// Largest absolute difference between the components of two similarities.
double sim_distance(const SimTransform& a, const SimTransform& b);

// Group matrices in double precision, (p, e, q) basis.
Eigen::MatrixXd dilation_matrix(std::size_t n, double a);
Eigen::MatrixXd rotation_matrix(const Eigen::MatrixXd& f);
Eigen::MatrixXd translation_matrix(const Eigen::VectorXd& X);

/// Gram matrix of eta as doubles.
Eigen::MatrixXd gram_matrix(std::size_t n);
/// max |g^T G g - G|.
double eta_orthogonality_defect(const Eigen::MatrixXd& g);

bool fixes_line_p(const QMatrix& g);
bool fixes_line_p(const Eigen::MatrixXd& g, double tol = 1e-9);

/// chart(g . line(Y)), exact.
QVector boundary_action(const QMatrix& g, const QVector& Y);
Eigen::VectorXd boundary_action(const Eigen::MatrixXd& g, const Eigen::VectorXd& Y);

/// Similarity induced by g, read off from the images of 0 and e_1..e_n.
/// Throws std::invalid_argument if g moves R p or the linear part is not a
/// positive multiple of a rotation within tol.
SimTransform extract_sim(const Eigen::MatrixXd& g, double tol = 1e-9);

/// Distance between the central-difference derivative of
/// s -> boundary_action(exp(s t), Y) at s = 0 and the affine field a Y + A Y + X.
double flow_check(const LieTriple& t, const Eigen::VectorXd& Y, double h = 1e-4);

/// A^Phi (screw dilations) or U^Psi (screw isometries).
struct ScrewGroup {
  enum class Variant { ScrewDilation, ScrewIsometry };

  Variant variant = Variant::ScrewDilation;
  std::size_t n = 0;
  /// ScrewDilation: Phi(a) = exp(log(a) Z).
  QMatrix Z;
  /// ScrewIsometry: basis u_j of U and dPsi(u_j) = Zs[j]; Psi(sum c_j u_j) = exp(sum c_j Zs[j]).
  std::vector<QVector> U;
  std::vector<QMatrix> Zs;

  static ScrewGroup dilation(const QMatrix& Z);
  static ScrewGroup isometry(std::vector<QVector> U, std::vector<QMatrix> Zs);

  /// Skew generators; for U^Psi they commute pairwise and annihilate U (exact).
  void validate() const;
};

struct ScrewElement {
  Eigen::MatrixXd matrix;
  SimTransform sim;
};

/// Element Phi(a) a of A^Phi; a > 0.
ScrewElement screw_element(const ScrewGroup& s, double a);
/// Element Psi(u) u of U^Psi; u must lie in U.
ScrewElement screw_element(const ScrewGroup& s, const QVector& u);

}  // namespace holo
