#include "holo/invariant.hpp"

#include <algorithm>
#include <stdexcept>

#include "holo/polynomial.hpp"

namespace holo {

namespace {

Rational random_small(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  return Rational(dist(rng));
}

QMatrix power(const QMatrix& m, std::size_t k) {
  QMatrix r = QMatrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * m;
  return r;
}

bool is_scalar(const QMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c ? sgn(m(r, c)) != 0 : m(r, c) != m(0, 0)) return false;
  return true;
}

/// Rational factors h of the squarefree part of the characteristic polynomial.
std::vector<QPoly> spectral_factors(const QMatrix& theta, bool include_whole) {
  const QPoly s = squarefree_part(characteristic_polynomial(theta));
  std::vector<QPoly> fs = rational_factors(s);
  if (include_whole && s.degree() >= 1) fs.push_back(s);
  return fs;
}

bool proper(const Subspace& s) { return !s.is_zero() && !s.is_full(); }

void add_unique(std::vector<Subspace>& list, Subspace s) {
  if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(std::move(s));
}

}  // namespace

AffineField affine_field(const LieTriple& t) {
  t.validate();
  QMatrix M = t.A;
  for (std::size_t i = 0; i < t.n(); ++i) M(i, i) += t.a;
  return {std::move(M), t.X};
}

std::vector<AffineField> affine_action(const Subalgebra& g) {
  std::vector<AffineField> out;
  for (const auto& t : g.basis()) out.push_back(affine_field(t));
  return out;
}

std::string to_string(InvariantCertificate::Kind kind) {
  switch (kind) {
    case InvariantCertificate::Kind::VSubspace:
      return "V-subspace";
    case InvariantCertificate::Kind::AffineSubspace:
      return "affine-subspace";
    case InvariantCertificate::Kind::FixedPoint:
      return "fixed-point";
  }
  return "unknown";
}

std::string to_string(Verdict v) { return v == Verdict::WeaklyIrreducible ? "WEAKLY_IRREDUCIBLE" : "REDUCIBLE"; }
std::string to_string(Method m) { return m == Method::ESide ? "E-side" : "V-side"; }
std::string to_string(Certainty c) { return c == Certainty::Exact ? "exact" : "monte-carlo"; }

bool verify_affine_certificate(std::size_t n, std::span<const AffineField> fields, const InvariantCertificate& c) {
  if (c.kind == InvariantCertificate::Kind::VSubspace) return false;
  if (c.base_point.size() != n) return false;
  const Subspace s = Subspace::span(n, c.basis);
  if (s.dim() != c.basis.size() || s.is_full()) return false;
  if (c.kind == InvariantCertificate::Kind::FixedPoint && !s.is_zero()) return false;
  for (const auto& f : fields) {
    if (f.M.rows() != n || f.X.size() != n) return false;
    if (!s.invariant_under(f.M)) return false;
    if (!s.contains(add(f.M * c.base_point, f.X))) return false;
  }
  return true;
}

bool verify_v_certificate(const Subalgebra& g, const InvariantCertificate& c) {
  if (c.kind != InvariantCertificate::Kind::VSubspace) return false;
  const MinkowskiSpace V(g.n());
  const Subspace s = Subspace::span(V.dim(), c.basis);
  if (s.dim() != c.basis.size() || !proper(s)) return false;
  for (const auto& t : g.basis())
    if (!s.invariant_under(embed_matrix(t))) return false;
  const bool nondeg = sgn(restricted_gram_determinant(s, V.gram())) != 0;
  return nondeg == c.nondegenerate;
}

std::optional<InvariantCertificate> find_invariant_affine(std::size_t n, std::span<const AffineField> fields) {
  for (const auto& f : fields)
    if (f.M.rows() != n || f.M.cols() != n || f.X.size() != n)
      throw DimensionMismatch("find_invariant_affine: field of wrong dimension");

  // (i) common fixed point: M_i x0 + X_i = 0 for all i.
  {
    RowReducer rr(n + 1);
    for (const auto& f : fields)
      for (std::size_t r = 0; r < n; ++r) {
        QVector row = f.M.row(r);
        row.push_back(-f.X[r]);
        rr.insert(std::move(row));
      }
    const bool consistent = rr.rank() == 0 || rr.pivots().back() < n;
    if (consistent) {
      QVector x0(n);
      for (std::size_t k = 0; k < rr.rank(); ++k) x0[rr.pivots()[k]] = rr.rows()[k][n];
      InvariantCertificate c{InvariantCertificate::Kind::FixedPoint, {}, std::move(x0), false};
      if (!verify_affine_certificate(n, fields, c)) throw std::logic_error("fixed point failed verification");
      return c;
    }
  }

  // (ii) proper S: nonzero pi commuting with every M_i and y in E with
  // pi X_i + M_i y = 0.  Then S = ker(pi) carries an invariant affine
  // subspace; conversely the orthogonal projection onto S^perp of any
  // certificate solves the system (the M_i are conformal-plus-skew, so
  // orthogonal complements of invariant subspaces are invariant).
  const std::size_t unknowns = n * n + n;
  auto pi_index = [n](std::size_t r, std::size_t c) { return r * n + c; };
  RowReducer rr(unknowns);
  for (const auto& f : fields) {
    // (pi M - M pi)(r, c) = sum_k pi(r,k) M(k,c) - M(r,k) pi(k,c)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        QVector row(unknowns);
        for (std::size_t k = 0; k < n; ++k) {
          row[pi_index(r, k)] += f.M(k, c);
          row[pi_index(k, c)] -= f.M(r, k);
        }
        rr.insert(std::move(row));
      }
    // (pi X + M y)(r)
    for (std::size_t r = 0; r < n; ++r) {
      QVector row(unknowns);
      for (std::size_t k = 0; k < n; ++k) {
        row[pi_index(r, k)] += f.X[k];
        row[n * n + k] += f.M(r, k);
      }
      rr.insert(std::move(row));
    }
  }

  std::vector<QMatrix> candidates;
  for (const auto& sol : rr.nullspace()) {
    QMatrix pi(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) pi(r, c) = sol[pi_index(r, c)];
    if (!pi.is_zero()) candidates.push_back(std::move(pi));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const QMatrix& a, const QMatrix& b) { return rank(a) < rank(b); });

  for (const auto& pi : candidates) {
    const Subspace S = Subspace::span(n, nullspace(pi));
    const Subspace perp = S.orthogonal_complement();
    // <t, M_i x0 + X_i> = 0 for t in S^perp
    RowReducer sys(n + 1);
    for (const auto& f : fields) {
      const QMatrix Mt = f.M.transpose();
      for (const auto& t : perp.basis()) {
        QVector row = Mt * t;
        row.push_back(-dot(t, f.X));
        sys.insert(std::move(row));
      }
    }
    if (sys.rank() > 0 && sys.pivots().back() == n) continue;
    QVector x0(n);
    for (std::size_t k = 0; k < sys.rank(); ++k) x0[sys.pivots()[k]] = sys.rows()[k][n];
    InvariantCertificate c{InvariantCertificate::Kind::AffineSubspace, S.basis(), std::move(x0), false};
    if (S.is_zero()) c.kind = InvariantCertificate::Kind::FixedPoint;
    if (verify_affine_certificate(n, fields, c)) return c;
  }
  if (!candidates.empty()) throw std::logic_error("find_invariant_affine: intertwiner without certificate");
  return std::nullopt;
}

Subspace spin(std::span<const QMatrix> family, std::span<const QVector> seeds) {
  if (seeds.empty()) throw std::invalid_argument("spin: no seeds");
  const std::size_t d = seeds.front().size();
  RowReducer rr(d);
  std::vector<QVector> frontier;
  for (const auto& v : seeds)
    if (rr.insert(v)) frontier.push_back(v);
  while (!frontier.empty()) {
    std::vector<QVector> next;
    for (const auto& v : frontier)
      for (const auto& f : family) {
        QVector w = f * v;
        if (rr.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return Subspace::span(d, rr.rows());
}

std::vector<Subspace> split_invariant_subspaces(std::span<const QMatrix> family, std::mt19937_64& rng,
                                                std::size_t trials) {
  std::vector<Subspace> found;
  if (family.empty()) return found;
  const std::size_t d = family.front().rows();
  std::vector<QMatrix> transposed;
  for (const auto& f : family) transposed.push_back(f.transpose());

  auto random_element = [&](std::span<const QMatrix> fam) {
    QMatrix theta(d, d);
    for (const auto& f : fam) theta += random_small(rng) * f;
    // one random word of length two widens the reachable part of the algebra
    std::uniform_int_distribution<std::size_t> pick(0, fam.size() - 1);
    theta += random_small(rng) * (fam[pick(rng)] * fam[pick(rng)]);
    return theta;
  };

  auto harvest = [&](std::span<const QMatrix> fam, const QMatrix& theta, bool dual) {
    if (is_scalar(theta)) return;
    for (const auto& h : spectral_factors(theta, true)) {
      const auto kernel = nullspace(evaluate(h, theta));
      if (kernel.empty()) continue;
      std::vector<QVector> seeds = kernel;
      QVector mix = zeros(d);
      for (const auto& k : kernel) mix = add(mix, scale(random_small(rng), k));
      if (!is_zero(mix)) seeds.push_back(std::move(mix));
      for (const auto& v : seeds) {
        Subspace s = spin(fam, std::span<const QVector>(&v, 1));
        if (dual) s = s.orthogonal_complement();
        if (proper(s)) add_unique(found, std::move(s));
      }
    }
  };

  // deterministic pass over the generators, then random elements
  for (std::size_t i = 0; i < family.size(); ++i) {
    harvest(family, family[i], false);
    harvest(transposed, transposed[i], true);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    harvest(family, random_element(family), false);
    harvest(transposed, random_element(transposed), true);
  }

  for (const auto& s : found)
    for (const auto& f : family)
      if (!s.invariant_under(f)) throw std::logic_error("split_invariant_subspaces: non-invariant subspace");
  return found;
}

std::vector<QMatrix> commutant(std::span<const QMatrix> family, const QMatrix* self_adjoint_gram) {
  if (family.empty() && self_adjoint_gram == nullptr) throw std::invalid_argument("commutant: empty family");
  const std::size_t d = family.empty() ? self_adjoint_gram->rows() : family.front().rows();
  auto idx = [d](std::size_t r, std::size_t c) { return r * d + c; };
  RowReducer rr(d * d);
  for (const auto& f : family) {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        QVector row(d * d);
        for (std::size_t k = 0; k < d; ++k) {
          if (sgn(f(k, c)) != 0) row[idx(r, k)] += f(k, c);
          if (sgn(f(r, k)) != 0) row[idx(k, c)] -= f(r, k);
        }
        if (!is_zero(row)) rr.insert(std::move(row));
      }
  }
  if (self_adjoint_gram != nullptr) {
    const QMatrix& G = *self_adjoint_gram;
    // (T^T G - G T)(r, c) = sum_k T(k,r) G(k,c) - G(r,k) T(k,c)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        QVector row(d * d);
        for (std::size_t k = 0; k < d; ++k) {
          row[idx(k, r)] += G(k, c);
          row[idx(k, c)] -= G(r, k);
        }
        if (!is_zero(row)) rr.insert(std::move(row));
      }
  }
  std::vector<QMatrix> out;
  for (const auto& sol : rr.nullspace()) {
    QMatrix T(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) T(r, c) = sol[idx(r, c)];
    out.push_back(std::move(T));
  }
  return out;
}

namespace {

/// Generalized eigenspaces of eta-self-adjoint elements of the commutant
/// for coprime rational factors are invariant and mutually orthogonal,
/// hence nondegenerate.
std::optional<Subspace> split_by_self_adjoint(const QMatrix& T, const std::vector<QMatrix>& family,
                                              const QMatrix& gram) {
  if (is_scalar(T)) return std::nullopt;
  const std::size_t d = T.rows();
  for (const auto& h : spectral_factors(T, false)) {
    const Subspace K = Subspace::span(d, nullspace(power(evaluate(h, T), d)));
    if (!proper(K)) continue;
    bool invariant = std::all_of(family.begin(), family.end(), [&](const QMatrix& f) { return K.invariant_under(f); });
    if (invariant && sgn(restricted_gram_determinant(K, gram)) != 0) return K;
  }
  return std::nullopt;
}

InvariantCertificate v_certificate(const Subspace& s, const QMatrix& gram) {
  return {InvariantCertificate::Kind::VSubspace, s.basis(), {}, sgn(restricted_gram_determinant(s, gram)) != 0};
}

}  // namespace

VSubspaceSearch find_invariant_V_subspace(const Subalgebra& g, bool only_nondegenerate, const SearchOptions& options) {
  const MinkowskiSpace V(g.n());
  const QMatrix& G = V.gram();
  std::vector<QMatrix> family;
  for (const auto& t : g.basis()) family.push_back(embed_matrix(t));

  std::mt19937_64 rng(options.seed);
  VSubspaceSearch result;

  // Nondegenerate invariant subspaces <-> nontrivial self-adjoint idempotents
  // of the commutant.
  const auto sa = commutant(family, &G);
  const bool only_scalars = sa.size() <= 1;
  std::optional<Subspace> nondeg;
  if (!only_scalars) {
    for (const auto& T : sa)
      if ((nondeg = split_by_self_adjoint(T, family, G))) break;
    for (std::size_t t = 0; t < options.budget && !nondeg; ++t) {
      ++result.trials;
      QMatrix T(V.dim(), V.dim());
      for (const auto& b : sa) T += random_small(rng) * b;
      nondeg = split_by_self_adjoint(T, family, G);
    }
  }

  if (only_nondegenerate) {
    if (nondeg) {
      result.certificate = v_certificate(*nondeg, G);
    } else {
      result.exhaustive = only_scalars;
    }
    return result;
  }

  // Any proper invariant subspace: module splitting plus a small lattice
  // (sums, intersections, eta-orthogonal complements).
  std::vector<Subspace> lattice;
  if (family.empty()) {
    lattice.push_back(Subspace::span(V.dim(), {V.p()}));
  } else {
    lattice = split_invariant_subspaces(family, rng, options.budget);
    result.trials += options.budget;
  }
  if (nondeg) add_unique(lattice, *nondeg);
  const std::size_t cap = 4 * options.budget + 16;
  for (std::size_t i = 0; i < lattice.size() && lattice.size() < cap; ++i) {
    add_unique(lattice, lattice[i].orthogonal_complement(G));
    for (std::size_t j = 0; j < i && lattice.size() < cap; ++j) {
      add_unique(lattice, lattice[i].sum(lattice[j]));
      add_unique(lattice, lattice[i].intersect(lattice[j]));
    }
  }
  std::vector<Subspace> candidates;
  for (auto& s : lattice)
    if (proper(s)) candidates.push_back(std::move(s));
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  if (!candidates.empty()) result.certificate = v_certificate(candidates.front(), G);
  return result;
}

WIVerdict is_weakly_irreducible(const Subalgebra& g, const SearchOptions& options) {
  (void)options;
  const auto fields = affine_action(g);
  WIVerdict v;
  v.method = Method::ESide;
  v.certainty = Certainty::Exact;
  v.certificate = find_invariant_affine(g.n(), fields);
  v.verdict = v.certificate ? Verdict::Reducible : Verdict::WeaklyIrreducible;
  return v;
}

WIVerdict is_weakly_irreducible_v_side(const Subalgebra& g, const SearchOptions& options) {
  const auto search = find_invariant_V_subspace(g, true, options);
  WIVerdict v;
  v.method = Method::VSide;
  v.trials = search.trials;
  v.certificate = search.certificate;
  if (v.certificate) {
    if (!verify_v_certificate(g, *v.certificate)) throw std::logic_error("V-side certificate failed verification");
    v.verdict = Verdict::Reducible;
    v.certainty = Certainty::Exact;
  } else {
    v.verdict = Verdict::WeaklyIrreducible;
    v.certainty = search.exhaustive ? Certainty::Exact : Certainty::MonteCarlo;
  }
  return v;
}

}  // namespace holo
