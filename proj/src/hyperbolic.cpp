#include "holo/hyperbolic.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "holo/classify.hpp"
#include "holo/minkowski.hpp"
#include "holo/similarity.hpp"

namespace holo {

namespace {

Rational random_rational(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

std::size_t evaluation_rank(const Subalgebra& g, const QVector& v) {
  std::vector<QVector> images;
  for (const auto& t : g.basis()) images.push_back(embed_matrix(t) * v);
  if (images.empty()) return 0;
  return Subspace::span(v.size(), images).dim();
}

}  // namespace

QVector HPoint::vector() const {
  QVector v;
  v.reserve(alpha.size() + 2);
  v.push_back(x);
  v.insert(v.end(), alpha.begin(), alpha.end());
  v.push_back(y);
  return v;
}

HPoint HPoint::from_vector(const QVector& v) {
  if (v.size() < 3) throw DimensionMismatch("HPoint: vector needs at least 3 coordinates");
  return {v.front(), QVector(v.begin() + 1, v.end() - 1), v.back()};
}

bool on_hyperboloid(const QVector& v) {
  if (v.size() < 3) return false;
  const HPoint h = HPoint::from_vector(v);
  // x0 = (x - y) / sqrt 2
  return 2 * h.x * h.y + dot(h.alpha, h.alpha) == -1 && h.x > h.y;
}

bool on_hyperboloid(const HPoint& h) { return on_hyperboloid(h.vector()); }

void check_hyperboloid(const HPoint& h) {
  if (!on_hyperboloid(h)) throw std::invalid_argument("point is not on the hyperboloid L^{n+1}");
  if (sgn(h.x) == 0 || sgn(h.y) == 0) throw std::logic_error("hyperboloid point with x = 0 or y = 0");
}

HPoint random_hyperboloid_point(std::size_t n, std::mt19937_64& rng) {
  HPoint h;
  h.alpha.resize(n);
  for (auto& c : h.alpha) c = random_rational(rng, 3);
  do {
    h.x = random_rational(rng, 4);
  } while (sgn(h.x) <= 0);
  h.y = -(1 + dot(h.alpha, h.alpha)) / (2 * h.x);
  return h;
}

std::string to_string(TransitiveGroupSpec::Variant v) {
  using V = TransitiveGroupSpec::Variant;
  switch (v) {
    case V::Full:
      return "full";
    case V::AHN:
      return "AxH|N";
    case V::AphiHN:
      return "AphixH|N";
    case V::AN:
      return "A|N";
    case V::AphiN:
      return "Aphi|N";
  }
  return "?";
}

TransitiveGroupSpec::Variant variant_from_string(const std::string& s) {
  using V = TransitiveGroupSpec::Variant;
  for (V v : {V::Full, V::AHN, V::AphiHN, V::AN, V::AphiN})
    if (s == to_string(v)) return v;
  throw std::invalid_argument("unknown group variant '" + s + "' (expected full, AxH|N, AphixH|N, A|N, Aphi|N)");
}

void TransitiveGroupSpec::validate() const {
  if (n == 0) throw std::invalid_argument("TransitiveGroupSpec: n must be positive");
  const bool uses_h = variant == Variant::AHN || variant == Variant::AphiHN;
  const bool uses_z = variant == Variant::AphiHN || variant == Variant::AphiN;
  if (!uses_h && !H.empty()) throw std::invalid_argument("TransitiveGroupSpec: H is only allowed for AxH|N and AphixH|N");
  if (uses_z != Z.has_value()) throw std::invalid_argument("TransitiveGroupSpec: Z is required exactly for the A^Phi variants");
  for (const auto& h : H)
    if (h.rows() != n || !h.is_skew()) throw std::invalid_argument("TransitiveGroupSpec: H generators must be skew n x n");
  if (Z) {
    if (Z->rows() != n || !Z->is_skew()) throw std::invalid_argument("TransitiveGroupSpec: Z must be skew n x n");
    for (const auto& h : H)
      if (!commutator(h, *Z).is_zero()) throw std::invalid_argument("TransitiveGroupSpec: H must commute with Z");
  }
}

Subalgebra TransitiveGroupSpec::algebra() const {
  validate();
  if (variant == Variant::Full) throw std::invalid_argument("the full group is not inside so(V)_Rp");
  std::vector<LieTriple> gens;
  gens.push_back(Z ? LieTriple{1, *Z, zeros(n)} : LieTriple::dilation(n));
  for (const auto& h : H) gens.push_back(LieTriple::rotation(h));
  for (std::size_t i = 0; i < n; ++i) gens.push_back(LieTriple::translation(unit_vector(n, i)));
  return lie_closure(n, gens);
}

Transport transport(const HPoint& v, const HPoint& w, const TransitiveGroupSpec& spec, double tol) {
  spec.validate();
  if (v.n() != spec.n || w.n() != spec.n) throw DimensionMismatch("transport: point dimension does not match spec");
  check_hyperboloid(v);
  check_hyperboloid(w);
  const std::size_t n = spec.n;

  Transport t;
  t.a = v.y / w.y;  // both negative
  const QVector target = w.vector();
  const bool screw = spec.variant == TransitiveGroupSpec::Variant::AphiHN ||
                     spec.variant == TransitiveGroupSpec::Variant::AphiN;

  if (!screw) {
    // N(X) (x, alpha, y) has e-part alpha + y X.
    t.X = scale(1 / v.y, sub(w.alpha, v.alpha));
    const QMatrix g = dilation_element(n, t.a) * translation_element(t.X);
    const QMatrix G = MinkowskiSpace(n).gram();
    if (!(g.transpose() * G * g == G)) throw std::logic_error("transport: result is not eta-orthogonal");
    if (!(g * v.vector() == target)) throw std::logic_error("transport: g v != w");
    t.exact = g;
    t.matrix = to_eigen(g);
    t.residual = 0.0;
    return t;
  }

  // A^Phi: g = A(a) K(Phi(a)) N(X), Phi(a) (alpha + y X) = beta.
  const double a = t.a.get_d();
  const Eigen::MatrixXd phi = (std::log(a) * to_eigen(*spec.Z)).exp();
  const Eigen::VectorXd Xd = (phi.transpose() * to_eigen(w.alpha) - to_eigen(v.alpha)) / v.y.get_d();
  t.X.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.X[i] = Rational(Xd(static_cast<Eigen::Index>(i)));
  t.screw = phi;
  t.matrix = dilation_matrix(n, a) * rotation_matrix(phi) * translation_matrix(Xd);
  const Eigen::VectorXd image = t.matrix * to_eigen(v.vector());
  t.residual = (image - to_eigen(target)).cwiseAbs().maxCoeff();
  const double scale_w = std::max(1.0, to_eigen(target).cwiseAbs().maxCoeff());
  if (t.residual > tol * scale_w || eta_orthogonality_defect(t.matrix) > tol * std::max(1.0, t.matrix.cwiseAbs().maxCoeff())) {
    throw std::runtime_error("transport: screw element misses the target (residual " + std::to_string(t.residual) + ")");
  }
  return t;
}

Subalgebra an_algebra(std::size_t n) {
  TransitiveGroupSpec s{TransitiveGroupSpec::Variant::AN, n, {}, std::nullopt};
  return s.algebra();
}

Subalgebra aphi_n_algebra(const QMatrix& Z) {
  TransitiveGroupSpec s{TransitiveGroupSpec::Variant::AphiN, Z.rows(), {}, Z};
  return s.algebra();
}

Subalgebra kn_algebra(std::size_t n) {
  std::vector<LieTriple> gens;
  for (const auto& b : catalog_b(CatalogB::SOn, n)) gens.push_back(LieTriple::rotation(b));
  for (std::size_t i = 0; i < n; ++i) gens.push_back(LieTriple::translation(unit_vector(n, i)));
  return Subalgebra::from_span(n, gens);
}

SimpleTransitivityReport simply_transitive_check(const Subalgebra& g, std::size_t samples, std::mt19937_64& rng) {
  const std::size_t n = g.n();
  SimpleTransitivityReport r;
  r.dimension = g.dim();
  r.expected_dimension = n + 1;
  r.dimension_ok = r.dimension == r.expected_dimension;
  std::vector<HPoint> points{stabilizer_point(n)};
  while (points.size() < std::max<std::size_t>(samples, 1)) points.push_back(random_hyperboloid_point(n, rng));
  r.samples = points.size();
  r.min_rank = g.dim() + n + 2;
  for (const auto& h : points) {
    const std::size_t rk = evaluation_rank(g, h.vector());
    r.min_rank = std::min(r.min_rank, rk);
    r.max_rank = std::max(r.max_rank, rk);
  }
  r.free = r.min_rank == g.dim() && r.max_rank == g.dim();
  // tangent space of L^{n+1} has dimension n + 1
  r.locally_transitive = r.min_rank == n + 1;
  return r;
}

SimpleTransitivityReport simply_transitive_check(const TransitiveGroupSpec& spec, std::size_t samples,
                                                 std::mt19937_64& rng) {
  SimpleTransitivityReport r = simply_transitive_check(spec.algebra(), samples, rng);
  bool ok = true;
  for (std::size_t i = 0; i < std::max<std::size_t>(samples, 1) && ok; ++i) {
    const HPoint v = random_hyperboloid_point(spec.n, rng);
    const HPoint w = random_hyperboloid_point(spec.n, rng);
    try {
      transport(v, w, spec);
    } catch (const std::exception&) {
      ok = false;
    }
  }
  r.transport_ok = ok;
  return r;
}

KNWitness nontransitivity_witness_kn(std::size_t n, std::mt19937_64& rng, std::size_t trials) {
  KNWitness k;
  k.v = {Rational(1, 2), zeros(n), Rational(-1)};
  k.w = {Rational(1), zeros(n), Rational(-1, 2)};
  check_hyperboloid(k.v);
  check_hyperboloid(k.w);
  k.invariant_v = k.v.y;
  k.invariant_w = k.w.y;
  k.trials = trials;
  k.invariant_preserved = true;
  for (std::size_t i = 0; i < trials; ++i) {
    QVector X(n);
    for (auto& c : X) c = random_rational(rng, 3);
    const QMatrix g = rotation_element(random_rotation(n, rng)) * translation_element(X);
    const QVector image = g * k.v.vector();
    if (image.back() != k.invariant_v) k.invariant_preserved = false;
  }
  return k;
}

HPoint stabilizer_point(std::size_t n) {
  HPoint h{Rational(1), zeros(n), Rational(-1, 2)};
  check_hyperboloid(h);
  const QVector v = h.vector();
  for (const auto& b : catalog_b(CatalogB::SOn, n))
    if (!is_zero(embed_matrix(LieTriple::rotation(b)) * v)) throw std::logic_error("stabilizer_point: not fixed by K");
  return h;
}

}  // namespace holo
