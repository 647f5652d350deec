#include "holo/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "holo/classify.hpp"
#include "holo/hyperbolic.hpp"
#include "holo/invariant.hpp"
#include "holo/lie.hpp"
#include "holo/minkowski.hpp"
#include "holo/similarity.hpp"

namespace holo {

namespace {

std::size_t scaled(std::size_t count, const AcceptanceOptions& o) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(count) * o.scale)));
}

Rational random_rational(std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

QVector random_vector(std::size_t n, std::mt19937_64& rng) {
  QVector v(n);
  for (auto& c : v) c = random_rational(rng);
  return v;
}

QMatrix random_skew(std::size_t n, std::mt19937_64& rng) {
  QMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      A(i, j) = random_rational(rng);
      A(j, i) = -A(i, j);
    }
  return A;
}

LieTriple random_triple(std::size_t n, std::mt19937_64& rng) {
  return {random_rational(rng), random_skew(n, rng), random_vector(n, rng)};
}

/// Triple with entries uniform in [-r, r], stored exactly.
LieTriple random_float_triple(std::size_t n, double r, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-r, r);
  LieTriple t = LieTriple::zero(n);
  t.a = Rational(u(rng));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      t.A(i, j) = Rational(u(rng));
      t.A(j, i) = -t.A(i, j);
    }
  for (auto& c : t.X) c = Rational(u(rng));
  return t;
}

Eigen::VectorXd random_point(std::size_t n, double r, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-r, r);
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = u(rng);
  return v;
}

struct Tally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& what) {
    ++instances;
    if (ok) return;
    ++failures;
    if (first_failure.empty()) first_failure = what();
  }
};

/// Matrices of `mats` (acting on the first k coordinates) moved to start at `offset` in dimension n.
std::vector<QMatrix> shift_block(const std::vector<QMatrix>& mats, std::size_t offset, std::size_t n) {
  std::vector<QMatrix> out;
  for (const auto& m : mats) {
    QMatrix big(n, n);
    big.set_block(offset, offset, m);
    out.push_back(std::move(big));
  }
  return out;
}

// 1 ------------------------------------------------------------------------

void bracket_oracle(const AcceptanceOptions& o, CriterionResult& r, Tally& t) {
  std::mt19937_64 rng(o.seed + 1);
  const std::size_t count = scaled(1000, o);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i % 6;
    const LieTriple u = random_triple(n, rng), v = random_triple(n, rng);
    const LieTriple closed = bracket(u, v);
    const LieTriple oracle = extract_triple(commutator(embed_matrix(u), embed_matrix(v)));
    t.check(closed == oracle, [&] { return "bracket differs from the commutator at n=" + std::to_string(n); });
  }
  r.detail = std::to_string(t.instances - t.failures) + "/" + std::to_string(t.instances) + " exact matches, n=1..6";
}

// 2 ------------------------------------------------------------------------

const CatalogB kCatalog[] = {CatalogB::Zero, CatalogB::SO2, CatalogB::SO3, CatalogB::SO2xSO2, CatalogB::SOn};

std::vector<std::pair<std::size_t, CatalogB>> admissible_choices(int type, bool surjective, std::size_t n_lo,
                                                                 std::size_t n_hi) {
  std::vector<std::pair<std::size_t, CatalogB>> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (CatalogB b : kCatalog)
      if (catalog_admissible(type, b, n, surjective)) out.emplace_back(n, b);
  return out;
}

bool round_trip_ok(const CatalogInstance& inst, std::string& why) {
  const BBIClassification c = classify(inst.algebra);
  const std::size_t n = inst.n;
  if (c.type != inst.type) {
    why = "type " + std::to_string(c.type) + " instead of " + std::to_string(inst.type);
    return false;
  }
  if (!(skew_span(n, c.B) == skew_span(n, inst.B))) {
    why = "B differs";
    return false;
  }
  if (inst.phi && (!c.phi || !same_map(*inst.phi, *c.phi))) {
    why = "phi differs";
    return false;
  }
  if (inst.psi && (!c.psi || !same_map(*inst.psi, *c.psi))) {
    why = "psi differs";
    return false;
  }
  if (inst.W && (!c.W || !(*c.W == *inst.W) || !(*c.U == inst.W->orthogonal_complement()))) {
    why = "U + W split differs";
    return false;
  }
  return true;
}

void round_trip(const AcceptanceOptions& o, CriterionResult& r, Tally& t) {
  std::mt19937_64 rng(o.seed + 2);
  const std::size_t per_type = scaled(50, o);
  for (int type = 1; type <= 4; ++type) {
    const auto choices = admissible_choices(type, true, 2, 5);
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    for (std::size_t i = 0; i < per_type; ++i) {
      const auto [n, b] = choices[pick(rng)];
      const CatalogInstance inst = make_catalog_instance(type, b, n, rng);
      std::string why;
      const bool ok = round_trip_ok(inst, why);
      t.check(ok, [&] { return "type " + std::to_string(type) + ", B=" + to_string(b) + ", n=" + std::to_string(n) + ": " + why; });
    }
  }
  r.detail = std::to_string(t.instances - t.failures) + "/" + std::to_string(t.instances) + " round trips, " +
             std::to_string(per_type) + " per type";
}

// 3 ------------------------------------------------------------------------

Subalgebra block_preserving(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick_m(1, n - 1);
  const std::size_t m = pick_m(rng);
  const QMatrix R = random_rotation(n, rng);
  auto fitting = [&](std::size_t k) {
    std::vector<CatalogB> out;
    for (CatalogB b : kCatalog)
      if (k >= catalog_min_dim(b)) out.push_back(b);
    std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
    return out[pick(rng)];
  };
  std::vector<LieTriple> gens;
  if (std::bernoulli_distribution(0.5)(rng)) gens.push_back(LieTriple::dilation(n));
  for (const auto& b : shift_block(catalog_b(fitting(m), m), 0, n)) gens.push_back(LieTriple::rotation(R * b * R.transpose()));
  for (const auto& b : shift_block(catalog_b(fitting(n - m), n - m), m, n))
    gens.push_back(LieTriple::rotation(R * b * R.transpose()));
  for (std::size_t i = 0; i < m; ++i) gens.push_back(LieTriple::translation(R * unit_vector(n, i)));
  return lie_closure(n, gens);
}

void equivalence(const AcceptanceOptions& o, CriterionResult& r, Tally& t) {
  std::mt19937_64 rng(o.seed + 3);
  std::size_t wi = 0, reducible = 0;
  std::uint64_t instance_seed = o.seed;

  auto run = [&](const Subalgebra& g, std::optional<bool> expect_wi, const std::string& family) {
    const SearchOptions so{++instance_seed, o.budget};
    const WIVerdict e = is_weakly_irreducible(g, so);
    const WIVerdict v = is_weakly_irreducible_v_side(g, so);
    bool ok = e.verdict == v.verdict;
    if (ok && !e.weakly_irreducible()) {
      ok = e.certificate && v.certificate && verify_affine_certificate(g.n(), affine_action(g), *e.certificate) &&
           verify_v_certificate(g, *v.certificate) && v.certificate->nondegenerate;
    }
    if (ok && expect_wi) ok = e.weakly_irreducible() == *expect_wi;
    (e.weakly_irreducible() ? wi : reducible) += 1;
    t.check(ok, [&] {
      return family + " (n=" + std::to_string(g.n()) + ", dim " + std::to_string(g.dim()) + "): E-side " +
             to_string(e.verdict) + ", V-side " + to_string(v.verdict);
    });
  };

  for (int type = 1; type <= 4; ++type) {
    const auto choices = admissible_choices(type, true, 2, 5);
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    for (std::size_t i = 0; i < scaled(25, o); ++i) {
      const auto [n, b] = choices[pick(rng)];
      run(make_catalog_instance(type, b, n, rng).algebra, true, "type " + std::to_string(type));
    }
  }
  {
    const auto choices = admissible_choices(4, false, 2, 5);
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    for (std::size_t i = 0; i < scaled(40, o); ++i) {
      const auto [n, b] = choices[pick(rng)];
      run(make_catalog_instance(4, b, n, rng, true, false).algebra, false, "type 4 with psi not onto");
    }
  }
  for (std::size_t i = 0; i < scaled(40, o); ++i) {
    const std::size_t n = 2 + i % 3;
    LieTriple x = random_triple(n, rng);
    while (x.is_zero()) x = random_triple(n, rng);
    const std::vector<LieTriple> gens{x};
    run(lie_closure(n, gens), false, "single generator");
  }
  for (std::size_t i = 0; i < scaled(40, o); ++i) run(block_preserving(3 + i % 3, rng), false, "block-preserving");

  r.detail = std::to_string(t.instances - t.failures) + "/" + std::to_string(t.instances) + " agree (" +
             std::to_string(wi) + " weakly irreducible, " + std::to_string(reducible) + " reducible with both certificates), budget " +
             std::to_string(o.budget);
}

// 4 ------------------------------------------------------------------------

void correspondence(const AcceptanceOptions& o, CriterionResult& r, Tally& t) {
  std::mt19937_64 rng(o.seed + 4);
  const std::size_t count = scaled(20, o);
  double worst = 0;
  auto float_gap = [&](const QMatrix& g, const QVector& Y, const QVector& expected) {
    const Eigen::VectorXd f = boundary_action(to_eigen(g), to_eigen(Y));
    const double gap = (f - to_eigen(expected)).cwiseAbs().maxCoeff() / std::max(1.0, to_eigen(expected).cwiseAbs().maxCoeff());
    worst = std::max(worst, gap);
    return gap <= 1e-12;
  };
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i % 4;
    const QVector Y = random_vector(n, rng);
    Rational a;
    do a = random_rational(rng); while (sgn(a) <= 0);
    const QVector aY = scale(a, Y);
    t.check(boundary_action(dilation_element(n, a), Y) == aY && float_gap(dilation_element(n, a), Y, aY),
            [&] { return "A(a) does not act as Y -> aY"; });

    const QMatrix f = random_rotation(n, rng);
    const QVector fY = f * Y;
    t.check(boundary_action(rotation_element(f), Y) == fY && float_gap(rotation_element(f), Y, fY),
            [&] { return "K(f) does not act as Y -> fY"; });

    const QVector X = random_vector(n, rng);
    const QVector YX = add(Y, X);
    t.check(boundary_action(translation_element(X), Y) == YX && float_gap(translation_element(X), Y, YX),
            [&] { return "N(X) does not act as Y -> Y + X"; });
  }
  std::ostringstream s;
  s << t.instances - t.failures << "/" << t.instances << " exact (A, K, N x " << count
    << "); float path max rel. gap " << worst;
  r.detail = s.str();
}

// 5 ------------------------------------------------------------------------

Eigen::MatrixXd random_product(std::size_t n, std::mt19937_64& rng) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n + 2), static_cast<Eigen::Index>(n + 2));
  for (int k = 0; k < 3; ++k) g = g * exp(random_float_triple(n, 0.5, rng));
  return g;
}

double sim_scale(const SimTransform& s) {
  return std::max({1.0, s.lambda, s.t.size() ? s.t.cwiseAbs().maxCoeff() : 0.0});
}

void similarity_law(const AcceptanceOptions& o, CriterionResult& r, Tally& t) {
  std::mt19937_64 rng(o.seed + 5);
  const std::size_t count = scaled(100, o);
  double worst_ratio = 0, worst_hom = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i % 4;
    const Eigen::MatrixXd g1 = random_product(n, rng), g2 = random_product(n, rng);
    const SimTransform s1 = extract_sim(g1);
    bool ok = true;
    for (int k = 0; k < 5; ++k) {
      const Eigen::VectorXd Y1 = random_point(n, 1.0, rng), Y2 = random_point(n, 1.0, rng);
      const double d = (Y1 - Y2).norm();
      if (d < 1e-3) continue;
      const double ratio = (boundary_action(g1, Y1) - boundary_action(g1, Y2)).norm() / d;
      const double rel = std::abs(ratio - s1.lambda) / s1.lambda;
      worst_ratio = std::max(worst_ratio, rel);
      ok = ok && rel <= 1e-9;
    }
    const SimTransform composed = s1.compose(extract_sim(g2));
    const double hom = sim_distance(extract_sim(g1 * g2), composed) / sim_scale(composed);
    worst_hom = std::max(worst_hom, hom);
    ok = ok && hom <= 1e-9;
    t.check(ok, [&] { return "similarity law or homomorphism failed at n=" + std::to_string(n); });
  }
  std::ostringstream s;
  s << t.instances - t.failures << "/" << t.instances << " products; max rel. ratio error " << worst_ratio
    << ", max homomorphism defect " << worst_hom;
  r.detail = s.str();
}

// 6 ------------------------------------------------------------------------

void flow_consistency(const AcceptanceOptions& o, CriterionResult& r, Tally& t) {
  std::mt19937_64 rng(o.seed + 6);
  const std::size_t count = scaled(100, o);
  double worst = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i % 4;
    const double res = flow_check(random_float_triple(n, 1.0, rng), random_point(n, 1.0, rng));
    worst = std::max(worst, res);
    t.check(res <= 1e-6, [&] { return "residual " + std::to_string(res) + " at n=" + std::to_string(n); });
  }
  std::ostringstream s;
  s << t.instances - t.failures << "/" << t.instances << " pairs; max residual " << worst;
  r.detail = s.str();
}

// 7 ------------------------------------------------------------------------

void transport_exactness(const AcceptanceOptions& o, CriterionResult& r, Tally& t) {
  std::mt19937_64 rng(o.seed + 7);
  const std::size_t count = scaled(100, o);
  std::size_t exact = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 2 + i % 2;
    const HPoint v = random_hyperboloid_point(n, rng), w = random_hyperboloid_point(n, rng);
    const TransitiveGroupSpec spec{TransitiveGroupSpec::Variant::AN, n, {}, std::nullopt};
    const Transport tr = transport(v, w, spec);
    const QMatrix G = MinkowskiSpace(n).gram();
    bool ok = tr.exact.has_value();
    if (ok) {
      const QMatrix& g = *tr.exact;
      ok = g.transpose() * G * g == G && g * v.vector() == w.vector() &&
           g == dilation_element(n, tr.a) * translation_element(tr.X);
    }
    exact += ok ? 1 : 0;
    t.check(ok, [&] { return "transport in A x| N is not exact at n=" + std::to_string(n); });
  }
  std::size_t obstructed = 0;
  for (std::size_t n : {2, 3}) {
    const KNWitness k = nontransitivity_witness_kn(n, rng, 100);
    t.check(k.obstructs(), [&] { return "K x| N witness does not obstruct at n=" + std::to_string(n); });
    obstructed += k.obstructs() ? 1 : 0;
  }
  r.detail = std::to_string(exact) + "/" + std::to_string(count) +
             " exact transports; K x| N q-coefficient invariant (-1 vs -1/2) for n=2,3: " +
             (obstructed == 2 ? "yes" : "no");
}

// 8 ------------------------------------------------------------------------

void simple_transitivity(const AcceptanceOptions& o, CriterionResult& r, Tally& t) {
  std::mt19937_64 rng(o.seed + 8);
  const std::size_t samples = scaled(20, o);
  std::ostringstream s;
  for (std::size_t n : {2, 3, 4}) {
    const TransitiveGroupSpec an{TransitiveGroupSpec::Variant::AN, n, {}, std::nullopt};
    const TransitiveGroupSpec aphi{TransitiveGroupSpec::Variant::AphiN, n, {}, skew_generator(n, 0, 1)};
    const auto ra = simply_transitive_check(an, samples, rng);
    const auto rp = simply_transitive_check(aphi, samples, rng);
    const auto rk = simply_transitive_check(kn_algebra(n), samples, rng);
    t.check(ra.dimension_ok && ra.free && ra.simply_transitive(), [&] { return "A x| N fails at n=" + std::to_string(n); });
    t.check(rp.dimension_ok && rp.free && rp.simply_transitive(), [&] { return "A^Phi x| N fails at n=" + std::to_string(n); });
    t.check(!rk.simply_transitive(), [&] { return "K x| N passes at n=" + std::to_string(n); });
    s << "n=" << n << ": A|N dim " << ra.dimension << " rank " << ra.min_rank << ", Aphi|N dim " << rp.dimension
      << " rank " << rp.min_rank << ", K|N dim " << rk.dimension << " rank " << rk.min_rank << (rk.free ? " free" : " not free")
      << (n < 4 ? "; " : "");
  }
  r.detail = s.str();
}

struct Spec {
  const char* name;
  double limit;
  void (*body)(const AcceptanceOptions&, CriterionResult&, Tally&);
};

const Spec kSpecs[kCriterionCount] = {
    {"bracket oracle", 5.0, bracket_oracle},
    {"round-trip classification", 60.0, round_trip},
    {"weak irreducibility <=> transitivity", 300.0, equivalence},
    {"correspondence table", 0.0, correspondence},
    {"similarity law", 0.0, similarity_law},
    {"flow consistency", 0.0, flow_consistency},
    {"transport exactness", 0.0, transport_exactness},
    {"simple transitivity", 0.0, simple_transitivity},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id must be 1..8");
  const Spec& spec = kSpecs[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = spec.name;
  r.time_limit = spec.limit;
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.body(options, r, t);
  } catch (const std::exception& e) {
    ++t.failures;
    if (t.first_failure.empty()) t.first_failure = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.instances = t.instances;
  r.failures = t.failures;
  const bool in_time = r.time_limit <= 0 || r.seconds < r.time_limit;
  r.passed = t.failures == 0 && t.instances > 0 && in_time;
  if (!t.first_failure.empty()) r.detail += (r.detail.empty() ? "" : "; ") + std::string("first failure: ") + t.first_failure;
  if (!in_time) r.detail += "; over the time limit";
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s.precision(3);
  s << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << " (" << std::fixed
    << r.seconds << " s";
  if (r.time_limit > 0) s << ", limit " << r.time_limit << " s";
  s << ")";
  return s.str();
}

}  // namespace holo
