#include "holo/classify.hpp"

#include <algorithm>

namespace holo {

namespace {

using Reason = ClassificationError::Reason;

[[noreturn]] void fail(Reason r, const std::string& what) { throw ClassificationError(r, "classify: " + what); }

/// Columns are the skew coordinates of `mats`.
QMatrix skew_columns(std::size_t n, std::span<const QMatrix> mats) {
  std::vector<QVector> cols;
  for (const auto& m : mats) cols.push_back(skew_coordinates(m));
  return QMatrix::from_columns(cols, skew_dimension(n));
}

/// Coefficients of z in the given basis, or nullopt.
std::optional<QVector> coefficients(std::size_t n, std::span<const QMatrix> basis, const QMatrix& z) {
  if (basis.empty()) {
    if (!z.is_zero()) return std::nullopt;
    return QVector{};
  }
  const QVector zc = skew_coordinates(z);
  const auto c = solve(skew_columns(n, basis), zc);
  if (!c) return std::nullopt;
  // solve() returns some solution; check it (the basis may be dependent).
  QMatrix sum(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i) sum += (*c)[i] * basis[i];
  if (!(sum == z)) return std::nullopt;
  return c;
}

void check_center_basis(std::size_t n, std::span<const QMatrix> given, std::span<const QMatrix> center,
                        const char* what) {
  const Subspace g = skew_span(n, given);
  if (g.dim() != given.size()) throw std::invalid_argument(std::string(what) + ": center basis is dependent");
  if (!(g == skew_span(n, center))) throw std::invalid_argument(std::string(what) + ": map must be given on a basis of z(B)");
}

struct Lift {
  Rational a;
  QVector X;
};

/// Some element (a, b, X) of g with so(E)-part b; nullopt if b is not in prK(g).
std::optional<Lift> lift(const Subalgebra& g, const QMatrix& b) {
  const std::size_t n = g.n();
  std::vector<QMatrix> ks;
  for (const auto& t : g.basis()) ks.push_back(t.A);
  const auto c = solve(skew_columns(n, ks), skew_coordinates(b));
  if (!c) return std::nullopt;
  Lift l{0, zeros(n)};
  QMatrix check(n, n);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const Rational& ci = (*c)[i];
    if (sgn(ci) == 0) continue;
    l.a += ci * g.basis()[i].a;
    l.X = add(l.X, scale(ci, g.basis()[i].X));
    check += ci * ks[i];
  }
  if (!(check == b)) return std::nullopt;
  return l;
}

/// Orthogonal projection onto U (standard dot product).
QVector project_onto(const Subspace& U, const QVector& x) {
  if (U.is_zero()) return zeros(x.size());
  const QMatrix P = QMatrix::from_columns(U.basis(), U.ambient());
  const QMatrix Pt = P.transpose();
  const auto c = solve(Pt * P, Pt * x);
  return P * *c;
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 3), den(1, 3), sign(0, 1);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return sign(rng) ? r : Rational(-r);
}

Rational random_small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

std::size_t center_dim(CatalogB b, std::size_t n) {
  switch (b) {
    case CatalogB::SO2:
      return 1;
    case CatalogB::SO2xSO2:
      return 2;
    case CatalogB::SOn:
      return n == 2 ? 1 : 0;
    default:
      return 0;
  }
}

QMatrix conjugate(const QMatrix& R, const QMatrix& b) { return R * b * R.transpose(); }

std::vector<QVector> unit_basis(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<QVector> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(unit_vector(n, i));
  return out;
}

}  // namespace

std::string to_string(ClassificationError::Reason r) {
  switch (r) {
    case Reason::NotWeaklyIrreducible:
      return "NotWeaklyIrreducible";
    case Reason::EmptyAlgebra:
      return "EmptyAlgebra";
    case Reason::NotInNormalPosition:
      return "NotInNormalPosition";
  }
  return "unknown";
}

Rational evaluate_phi(const PhiData& phi, const QMatrix& z) {
  if (phi.center.size() != phi.values.size()) throw std::invalid_argument("phi: one value per basis element");
  const std::size_t n = z.rows();
  const auto c = coefficients(n, phi.center, z);
  if (!c) throw std::invalid_argument("phi: argument is not in z(B)");
  Rational r = 0;
  for (std::size_t i = 0; i < c->size(); ++i) r += (*c)[i] * phi.values[i];
  return r;
}

QVector evaluate_psi(const PsiData& psi, const QMatrix& z) {
  if (psi.center.size() != psi.values.size()) throw std::invalid_argument("psi: one value per basis element");
  const std::size_t n = z.rows();
  const auto c = coefficients(n, psi.center, z);
  if (!c) throw std::invalid_argument("psi: argument is not in z(B)");
  QVector r = zeros(n);
  for (std::size_t i = 0; i < c->size(); ++i) r = add(r, scale((*c)[i], psi.values[i]));
  return r;
}

bool same_map(const PhiData& a, const PhiData& b) {
  if (a.center.size() != b.center.size()) return false;
  if (a.center.empty()) return true;
  const std::size_t n = a.center.front().rows();
  if (!(skew_span(n, a.center) == skew_span(n, b.center))) return false;
  for (std::size_t i = 0; i < a.center.size(); ++i)
    if (evaluate_phi(b, a.center[i]) != a.values[i]) return false;
  return true;
}

bool same_map(const PsiData& a, const PsiData& b) {
  if (a.center.size() != b.center.size()) return false;
  if (a.center.empty()) return true;
  const std::size_t n = a.center.front().rows();
  if (!(skew_span(n, a.center) == skew_span(n, b.center))) return false;
  for (std::size_t i = 0; i < a.center.size(); ++i)
    if (evaluate_psi(b, a.center[i]) != a.values[i]) return false;
  return true;
}

Rational BBIClassification::phi_at(const QMatrix& z) const {
  if (!phi) throw std::logic_error("phi_at: not a type 3 classification");
  return evaluate_phi(*phi, z);
}

QVector BBIClassification::psi_at(const QMatrix& z) const {
  if (!psi) throw std::logic_error("psi_at: not a type 4 classification");
  return evaluate_psi(*psi, z);
}

BBIClassification classify(const Subalgebra& g) {
  if (g.dim() == 0) fail(Reason::EmptyAlgebra, "the zero algebra has no type");
  const std::size_t n = g.n();
  const ProjectedParts parts = project_parts(g);

  BBIClassification c;
  c.n = n;
  c.B = skew_basis(n, parts.pr_k);
  const CompactSplit split = center_and_commutant(n, c.B);
  c.B_commutant = split.commutant;
  c.center = split.center;
  c.witnesses.pure_n_dim = parts.pure_n.dim();
  c.witnesses.pr_a_dim = parts.pr_a.dim();
  c.witnesses.contains_dilation = g.contains(LieTriple::dilation(n));

  if (parts.pure_n.is_full()) {
    if (c.witnesses.contains_dilation) {
      c.type = 1;
      return c;
    }
    if (parts.pr_a.is_zero()) {
      c.type = 2;
      return c;
    }
    // h is the graph of a functional on B; (1, 0) is not in h so a is unique.
    PhiData phi{c.center, {}};
    for (const auto& z : c.center) phi.values.push_back(lift(g, z)->a);
    for (const auto& b : c.B_commutant)
      if (sgn(lift(g, b)->a) != 0) c.witnesses.phi_vanishes_on_commutant = false;
    if (!c.witnesses.phi_vanishes_on_commutant)
      fail(Reason::NotWeaklyIrreducible, "dilation part does not vanish on B'");
    if (std::all_of(phi.values.begin(), phi.values.end(), [](const Rational& v) { return sgn(v) == 0; }))
      fail(Reason::NotWeaklyIrreducible, "prA(g) != 0 but phi vanishes on z(B)");
    c.type = 3;
    c.phi = std::move(phi);
    return c;
  }

  // W proper: type 4 or not weakly irreducible.
  const Subspace W = parts.pure_n;
  const Subspace U = W.orthogonal_complement();
  if (!parts.pr_a.is_zero()) fail(Reason::NotWeaklyIrreducible, "translations do not span E but prA(g) != 0");
  for (const auto& b : c.B)
    for (const auto& u : U.basis())
      if (!is_zero(b * u)) c.witnesses.B_annihilates_U = false;
  if (!c.witnesses.B_annihilates_U) fail(Reason::NotWeaklyIrreducible, "B does not annihilate U = W^perp");

  PsiData psi{c.center, {}};
  for (const auto& z : c.center) psi.values.push_back(project_onto(U, lift(g, z)->X));
  for (const auto& b : c.B_commutant)
    if (!is_zero(project_onto(U, lift(g, b)->X))) fail(Reason::NotWeaklyIrreducible, "psi does not vanish on B'");
  c.witnesses.psi_rank = Subspace::span(n, psi.values).dim();
  if (c.witnesses.psi_rank != U.dim()) fail(Reason::NotWeaklyIrreducible, "psi is not onto U");

  c.type = 4;
  c.psi = std::move(psi);
  c.U = U;
  c.W = W;
  return c;
}

BBIClassification classify_matrices(std::size_t n, std::span<const QMatrix> mats) {
  std::vector<LieTriple> triples;
  for (const auto& m : mats) {
    if (m.rows() != n + 2 || m.cols() != n + 2) throw DimensionMismatch("classify: matrix of wrong size");
    try {
      triples.push_back(extract_triple(m));
    } catch (const std::invalid_argument& e) {
      fail(Reason::NotInNormalPosition, std::string("matrix is not in so(V)_Rp: ") + e.what());
    }
  }
  return classify(Subalgebra::from_span(n, triples));
}

namespace {

std::vector<QMatrix> checked_basis(std::size_t n, std::span<const QMatrix> B) {
  return skew_basis(n, skew_span(n, B));
}

void add_translations(std::vector<LieTriple>& out, const std::vector<QVector>& vs) {
  for (const auto& v : vs) out.push_back(LieTriple::translation(v));
}

}  // namespace

Subalgebra construct_type1(std::size_t n, std::span<const QMatrix> B) {
  const auto basis = checked_basis(n, B);
  center_and_commutant(n, basis);
  std::vector<LieTriple> gens{LieTriple::dilation(n)};
  for (const auto& b : basis) gens.push_back(LieTriple::rotation(b));
  add_translations(gens, unit_basis(n, 0, n));
  return Subalgebra::from_span(n, gens);
}

Subalgebra construct_type2(std::size_t n, std::span<const QMatrix> B) {
  const auto basis = checked_basis(n, B);
  center_and_commutant(n, basis);
  std::vector<LieTriple> gens;
  for (const auto& b : basis) gens.push_back(LieTriple::rotation(b));
  add_translations(gens, unit_basis(n, 0, n));
  return Subalgebra::from_span(n, gens);
}

Subalgebra construct_type3(std::size_t n, std::span<const QMatrix> B, const PhiData& phi) {
  const auto basis = checked_basis(n, B);
  const CompactSplit split = center_and_commutant(n, basis);
  check_center_basis(n, phi.center, split.center, "construct_type3");
  if (phi.values.size() != phi.center.size()) throw std::invalid_argument("construct_type3: one phi value per basis element");
  if (std::all_of(phi.values.begin(), phi.values.end(), [](const Rational& v) { return sgn(v) == 0; }))
    throw std::invalid_argument("construct_type3: phi must be nonzero");
  std::vector<LieTriple> gens;
  for (const auto& b : split.commutant) gens.push_back(LieTriple::rotation(b));
  for (std::size_t i = 0; i < phi.center.size(); ++i) gens.push_back({phi.values[i], phi.center[i], zeros(n)});
  add_translations(gens, unit_basis(n, 0, n));
  return Subalgebra::from_span(n, gens);
}

Type4Construction construct_type4(std::size_t n, std::span<const QMatrix> B, const Subspace& W, const PsiData& psi) {
  if (W.ambient() != n) throw DimensionMismatch("construct_type4: W has wrong ambient dimension");
  if (W.is_full() || W.is_zero()) throw std::invalid_argument("construct_type4: E = U + W must be a nontrivial split");
  const Subspace U = W.orthogonal_complement();
  const auto basis = checked_basis(n, B);
  for (const auto& b : basis)
    for (const auto& u : U.basis())
      if (!is_zero(b * u)) throw std::invalid_argument("construct_type4: B is not contained in so(W)");
  const CompactSplit split = center_and_commutant(n, basis);
  check_center_basis(n, psi.center, split.center, "construct_type4");
  if (psi.values.size() != psi.center.size()) throw std::invalid_argument("construct_type4: one psi value per basis element");
  for (const auto& v : psi.values)
    if (v.size() != n || !U.contains(v)) throw std::invalid_argument("construct_type4: psi values must lie in U");

  std::vector<LieTriple> gens;
  for (const auto& b : split.commutant) gens.push_back(LieTriple::rotation(b));
  for (std::size_t i = 0; i < psi.center.size(); ++i) gens.push_back({0, psi.center[i], psi.values[i]});
  add_translations(gens, W.basis());
  Type4Construction out{Subalgebra::from_span(n, gens), Subspace::span(n, psi.values).dim() == U.dim()};
  return out;
}

GroupDescription group_type_of(const BBIClassification& c) {
  GroupDescription d;
  d.type = c.type;
  const std::size_t n = c.n;
  const std::size_t m = c.center.size();
  auto gram = [&](std::size_t i, std::size_t j) { return dot(skew_coordinates(c.center[i]), skew_coordinates(c.center[j])); };
  auto combine = [&](const QVector& coeffs) {
    QMatrix z(n, n);
    for (std::size_t k = 0; k < m; ++k) z += coeffs[k] * c.center[k];
    return z;
  };

  switch (c.type) {
    case 1:
      d.form = "(A x H) x| E";
      d.H = c.B;
      return d;
    case 2:
      d.form = "H x| E";
      d.H = c.B;
      return d;
    case 3: {
      d.form = "(A^Phi x H) x| E";
      const QMatrix row = QMatrix::from_rows({c.phi->values}, m);
      const auto kernel = nullspace(row);
      d.H = c.B_commutant;
      for (const auto& k : kernel) d.H.push_back(combine(k));
      // phi(Z) = 1, Z orthogonal to ker phi
      std::vector<QVector> rows{c.phi->values};
      QVector rhs{1};
      for (const auto& k : kernel) {
        QVector r(m);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) r[i] += gram(i, j) * k[j];
        rows.push_back(std::move(r));
        rhs.push_back(0);
      }
      const auto coeffs = solve(QMatrix::from_rows(rows, m), rhs);
      if (!coeffs) throw std::logic_error("group_type_of: no screw generator");
      d.screw = ScrewGroup::dilation(combine(*coeffs));
      return d;
    }
    case 4: {
      d.form = "(H x U^Psi) x| W";
      d.W = c.W;
      const auto& Ub = c.U->basis();
      // P(:, k) = coordinates of psi(z_k) in the U basis
      QMatrix P(Ub.size(), m);
      for (std::size_t k = 0; k < m; ++k) {
        const QVector coords = c.U->coordinates(c.psi->values[k]);
        for (std::size_t j = 0; j < Ub.size(); ++j) P(j, k) = coords[j];
      }
      const auto kernel = nullspace(P);
      d.H = c.B_commutant;
      for (const auto& k : kernel) d.H.push_back(combine(k));
      std::vector<QMatrix> Zs;
      for (std::size_t j = 0; j < Ub.size(); ++j) {
        std::vector<QVector> rows;
        QVector rhs;
        for (std::size_t r = 0; r < Ub.size(); ++r) {
          rows.push_back(P.row(r));
          rhs.push_back(r == j ? 1 : 0);
        }
        for (const auto& k : kernel) {
          QVector r(m);
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t l = 0; l < m; ++l) r[i] += gram(i, l) * k[l];
          rows.push_back(std::move(r));
          rhs.push_back(0);
        }
        const auto coeffs = solve(QMatrix::from_rows(rows, m), rhs);
        if (!coeffs) throw std::logic_error("group_type_of: psi is not onto U");
        Zs.push_back(combine(*coeffs));
      }
      d.screw = ScrewGroup::isometry(Ub, std::move(Zs));
      return d;
    }
    default:
      throw std::invalid_argument("group_type_of: unclassified algebra");
  }
}

std::string to_string(CatalogB b) {
  switch (b) {
    case CatalogB::Zero:
      return "0";
    case CatalogB::SO2:
      return "so2";
    case CatalogB::SO3:
      return "so3";
    case CatalogB::SO2xSO2:
      return "so2+so2";
    case CatalogB::SOn:
      return "son";
  }
  return "?";
}

CatalogB catalog_b_from_string(const std::string& s) {
  if (s == "0" || s == "zero") return CatalogB::Zero;
  if (s == "so2") return CatalogB::SO2;
  if (s == "so3") return CatalogB::SO3;
  if (s == "so2+so2" || s == "so2xso2") return CatalogB::SO2xSO2;
  if (s == "son" || s == "so(n)") return CatalogB::SOn;
  throw std::invalid_argument("unknown catalog entry '" + s + "' (expected 0, so2, so3, so2+so2, son)");
}

std::size_t catalog_min_dim(CatalogB b) {
  switch (b) {
    case CatalogB::SO2:
      return 2;
    case CatalogB::SO3:
      return 3;
    case CatalogB::SO2xSO2:
      return 4;
    default:
      return 1;
  }
}

std::vector<QMatrix> catalog_b(CatalogB b, std::size_t n) {
  if (n < catalog_min_dim(b)) throw std::invalid_argument(to_string(b) + " does not fit in so(" + std::to_string(n) + ")");
  switch (b) {
    case CatalogB::Zero:
      return {};
    case CatalogB::SO2:
      return {skew_generator(n, 0, 1)};
    case CatalogB::SO3:
      return {skew_generator(n, 0, 1), skew_generator(n, 0, 2), skew_generator(n, 1, 2)};
    case CatalogB::SO2xSO2:
      return {skew_generator(n, 0, 1), skew_generator(n, 2, 3)};
    case CatalogB::SOn: {
      std::vector<QMatrix> out;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(skew_generator(n, i, j));
      return out;
    }
  }
  return {};
}

QMatrix random_rotation(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-2, 2);
  QMatrix S(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      S(i, j) = dist(rng);
      S(j, i) = -S(i, j);
    }
  return cayley_rotation(S);
}

bool catalog_admissible(int type, CatalogB b, std::size_t n, bool surjective_psi) {
  if (n < catalog_min_dim(b)) return false;
  const std::size_t zdim = center_dim(b, n);
  switch (type) {
    case 1:
    case 2:
      return true;
    case 3:
      return zdim > 0;
    case 4: {
      if (b == CatalogB::SOn && n > 1) return false;  // so(n) does not fit in so(W) for W != E
      const std::size_t w_min = std::max<std::size_t>(1, catalog_min_dim(b));
      if (w_min + 1 > n) return false;
      return !surjective_psi || zdim > 0;
    }
    default:
      return false;
  }
}

CatalogInstance make_catalog_instance(int type, CatalogB b, std::size_t n, std::mt19937_64& rng, bool conjugate_data,
                                      bool surjective_psi) {
  if (!catalog_admissible(type, b, n, surjective_psi))
    throw std::invalid_argument("type " + std::to_string(type) + " cannot be built from " + to_string(b) +
                                " in dimension " + std::to_string(n));
  CatalogInstance inst;
  inst.type = type;
  inst.n = n;
  inst.kind = b;
  const QMatrix R = conjugate_data ? random_rotation(n, rng) : QMatrix::identity(n);
  for (const auto& m : catalog_b(b, n)) inst.B.push_back(conjugate(R, m));
  const CompactSplit split = center_and_commutant(n, inst.B);

  switch (type) {
    case 1:
      inst.algebra = construct_type1(n, inst.B);
      break;
    case 2:
      inst.algebra = construct_type2(n, inst.B);
      break;
    case 3: {
      PhiData phi{split.center, {}};
      for (std::size_t i = 0; i < split.center.size(); ++i) phi.values.push_back(random_small_rational(rng));
      if (std::all_of(phi.values.begin(), phi.values.end(), [](const Rational& v) { return sgn(v) == 0; }))
        phi.values.front() = random_nonzero_rational(rng);
      inst.algebra = construct_type3(n, inst.B, phi);
      inst.phi = std::move(phi);
      break;
    }
    case 4: {
      const std::size_t zdim = split.center.size();
      const std::size_t w_min = std::max<std::size_t>(1, catalog_min_dim(b));
      std::size_t w_dim;
      if (surjective_psi) {
        w_dim = std::max(w_min, n > zdim ? n - zdim : std::size_t{0});
        std::uniform_int_distribution<std::size_t> pick(w_dim, n - 1);
        w_dim = pick(rng);
      } else {
        std::uniform_int_distribution<std::size_t> pick(w_min, n - 1);
        w_dim = pick(rng);
      }
      std::vector<QVector> Wb, Ub;
      for (const auto& v : unit_basis(n, 0, w_dim)) Wb.push_back(R * v);
      for (const auto& v : unit_basis(n, w_dim, n)) Ub.push_back(R * v);
      const std::size_t u_dim = Ub.size();
      // psi values: combinations of the first `r` vectors of U
      const std::size_t r = surjective_psi ? u_dim : std::min(zdim, u_dim - 1);
      PsiData psi{split.center, {}};
      for (int attempt = 0;; ++attempt) {
        psi.values.clear();
        for (std::size_t k = 0; k < zdim; ++k) {
          QVector v = zeros(n);
          for (std::size_t j = 0; j < r; ++j) v = add(v, scale(random_small_rational(rng), Ub[j]));
          psi.values.push_back(std::move(v));
        }
        const std::size_t rk = Subspace::span(n, psi.values).dim();
        if (surjective_psi ? rk == u_dim : rk < u_dim) break;
        if (attempt > 1000) throw std::logic_error("make_catalog_instance: could not draw psi");
      }
      const Subspace W = Subspace::span(n, Wb);
      auto built = construct_type4(n, inst.B, W, psi);
      inst.algebra = std::move(built.algebra);
      inst.psi_surjective = built.psi_surjective;
      inst.psi = std::move(psi);
      inst.W = W;
      break;
    }
    default:
      throw std::invalid_argument("type must be 1..4");
  }
  return inst;
}

}  // namespace holo
