#pragma once

// The hyperboloid L^{n+1} = {eta(x, x) = -1, x0 > 0} in V, written in the
// (p, e, q) basis as x p + alpha + y q, and transport between its points.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "holo/lie.hpp"
#include "holo/rational.hpp"

namespace holo {

struct HPoint {
  Rational x;
  QVector alpha;
  Rational y;

  std::size_t n() const { return alpha.size(); }
  QVector vector() const;
  static HPoint from_vector(const QVector& v);
};

/// eta(v, v) = -1 and x0 > 0, exactly.
bool on_hyperboloid(const QVector& v);
bool on_hyperboloid(const HPoint& h);

/// Throws std::invalid_argument unless the point lies on L^{n+1}.
void check_hyperboloid(const HPoint& h);

/// Random rational point: alpha and x drawn from small rationals, y solved.
HPoint random_hyperboloid_point(std::size_t n, std::mt19937_64& rng);

struct TransitiveGroupSpec {
  enum class Variant { Full, AHN, AphiHN, AN, AphiN };

  Variant variant = Variant::AN;
  std::size_t n = 0;
  /// Lie algebra of H (skew n x n), for AHN / AphiHN.
  std::vector<QMatrix> H;
  /// dPhi(1), for AphiHN / AphiN.
  std::optional<QMatrix> Z;

  /// Shapes per variant; for the A^Phi variants every H generator must
  /// commute with Z exactly.
  void validate() const;
  /// Lie algebra of the group inside so(V)_Rp; throws for Full.
  Subalgebra algebra() const;
};

std::string to_string(TransitiveGroupSpec::Variant v);
TransitiveGroupSpec::Variant variant_from_string(const std::string& s);

struct Transport {
  /// Exact element; set on the rational path (every variant except A^Phi).
  std::optional<QMatrix> exact;
  Eigen::MatrixXd matrix;
  /// Factors: g = A(a) * [Phi(a)] * N(X).
  QVector X;
  Rational a;
  std::optional<Eigen::MatrixXd> screw;
  /// max |g v - w|.
  double residual = 0.0;
};

/// Element of the group described by spec taking v to w.  Exact results are
/// verified exactly (eta-orthogonal, g v = w); float results to tol.
Transport transport(const HPoint& v, const HPoint& w, const TransitiveGroupSpec& spec, double tol = 1e-9);

/// Lie algebras used by the simple-transitivity checks.
Subalgebra an_algebra(std::size_t n);
Subalgebra aphi_n_algebra(const QMatrix& Z);
Subalgebra kn_algebra(std::size_t n);

struct SimpleTransitivityReport {
  std::size_t dimension = 0;
  std::size_t expected_dimension = 0;
  std::size_t samples = 0;
  std::size_t min_rank = 0;
  std::size_t max_rank = 0;
  bool dimension_ok = false;
  /// The evaluation map xi -> xi v is injective at every sample.
  bool free = false;
  /// ... and onto the tangent space at every sample.
  bool locally_transitive = false;
  /// transport() succeeded between consecutive samples (group specs only).
  std::optional<bool> transport_ok;

  bool simply_transitive() const {
    return dimension_ok && free && locally_transitive && transport_ok.value_or(true);
  }
};

/// Rank of xi -> embed(xi) v at p - q/2 and at random rational points.
SimpleTransitivityReport simply_transitive_check(const Subalgebra& g, std::size_t samples, std::mt19937_64& rng);
SimpleTransitivityReport simply_transitive_check(const TransitiveGroupSpec& spec, std::size_t samples,
                                                 std::mt19937_64& rng);

struct KNWitness {
  HPoint v;  // p/2 - q
  HPoint w;  // p - q/2
  Rational invariant_v;
  Rational invariant_w;
  std::size_t trials = 0;
  /// The q-coefficient was preserved by every sampled element of K x| N.
  bool invariant_preserved = false;
  bool obstructs() const { return invariant_preserved && invariant_v != invariant_w; }
};

/// No element of K x| N takes p/2 - q to p - q/2: the q-coefficient is
/// invariant.  Checked on `trials` random exact elements.
KNWitness nontransitivity_witness_kn(std::size_t n, std::mt19937_64& rng, std::size_t trials = 100);

/// p - q/2; throws std::logic_error if a generator of so(E) does not fix it.
HPoint stabilizer_point(std::size_t n);

}  // namespace holo
