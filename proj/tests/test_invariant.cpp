#include <doctest.h>

#include <random>

#include "holo/classify.hpp"
#include "holo/invariant.hpp"
#include "holo/minkowski.hpp"
#include "support.hpp"

using namespace holo;

namespace {

Subalgebra span_of(std::size_t n, std::vector<LieTriple> gens) { return lie_closure(n, gens); }

Subalgebra translations(std::size_t n) {
  std::vector<LieTriple> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(LieTriple::translation(unit_vector(n, i)));
  return lie_closure(n, gens);
}

}  // namespace

TEST_CASE("affine_action") {
  const AffineField d = affine_field(LieTriple::dilation(2));
  CHECK(d.M == QMatrix::identity(2));
  CHECK(is_zero(d.X));
  const AffineField t = affine_field(LieTriple::translation(QVector{3, 1}));
  CHECK(t.M.is_zero());
  CHECK(t.X == QVector{3, 1});
  const AffineField r = affine_field(LieTriple::rotation(test::J2()));
  CHECK(r.M == test::J2());
  CHECK(affine_action(full_algebra(3)).size() == 7);
}

TEST_CASE("affine certificate for a single translation") {
  const Subalgebra g = span_of(2, {LieTriple::translation(unit_vector(2, 0))});
  const auto fields = affine_action(g);
  const auto c = find_invariant_affine(2, fields);
  REQUIRE(c);
  CHECK(c->kind == InvariantCertificate::Kind::AffineSubspace);
  // oracle: lines parallel to e1
  CHECK(Subspace::span(2, c->basis) == Subspace::span(2, {unit_vector(2, 0)}));
  CHECK(verify_affine_certificate(2, fields, *c));
}

TEST_CASE("translations act transitively") {
  const Subalgebra g = translations(3);
  CHECK_FALSE(find_invariant_affine(3, affine_action(g)));
  const WIVerdict v = is_weakly_irreducible(g);
  CHECK(v.weakly_irreducible());
  CHECK(v.certainty == Certainty::Exact);
}

TEST_CASE("rotations fix the origin") {
  const Subalgebra g = span_of(2, {LieTriple::rotation(test::J2())});
  const auto c = find_invariant_affine(2, affine_action(g));
  REQUIRE(c);
  CHECK(c->kind == InvariantCertificate::Kind::FixedPoint);
  CHECK(is_zero(c->base_point));
}

TEST_CASE("fixed point away from the origin") {
  // v -> v + e1 vanishes at -e1
  const Subalgebra g = span_of(2, {{1, QMatrix(2, 2), unit_vector(2, 0)}});
  const auto fields = affine_action(g);
  const auto c = find_invariant_affine(2, fields);
  REQUIRE(c);
  CHECK(c->kind == InvariantCertificate::Kind::FixedPoint);
  CHECK(c->base_point == QVector{-1, 0});
  CHECK(verify_affine_certificate(2, fields, *c));
}

TEST_CASE("bad certificates are rejected") {
  const Subalgebra g = translations(2);
  InvariantCertificate c;
  c.kind = InvariantCertificate::Kind::AffineSubspace;
  c.basis = {unit_vector(2, 0)};
  c.base_point = zeros(2);
  const auto fields = affine_action(g);
  CHECK_FALSE(verify_affine_certificate(2, fields, c));

  InvariantCertificate v;
  v.kind = InvariantCertificate::Kind::VSubspace;
  v.basis = {unit_vector(4, 1)};
  v.nondegenerate = true;
  CHECK_FALSE(verify_v_certificate(g, v));
}

TEST_CASE("V-side search on the full algebra") {
  const Subalgebra g = full_algebra(2);
  const MinkowskiSpace V(2);
  const VSubspaceSearch any = find_invariant_V_subspace(g, false);
  REQUIRE(any.certificate);
  CHECK_FALSE(any.certificate->nondegenerate);
  CHECK(verify_v_certificate(g, *any.certificate));
  const Subspace found = Subspace::span(4, any.certificate->basis);
  CHECK((found == Subspace::span(4, {V.p()}) || found == Subspace::span(4, {V.p()}).orthogonal_complement(V.gram())));

  const VSubspaceSearch nondeg = find_invariant_V_subspace(g, true);
  CHECK_FALSE(nondeg.certificate);
  CHECK_FALSE(is_weakly_irreducible_v_side(g).certificate);
}

TEST_CASE("V-side finds e2 for a single translation") {
  const Subalgebra g = span_of(2, {LieTriple::translation(unit_vector(2, 0))});
  // oracle: the embedded matrix kills e2
  CHECK(is_zero(embed_matrix(g.basis()[0]) * unit_vector(4, 2)));
  const VSubspaceSearch s = find_invariant_V_subspace(g, true);
  REQUIRE(s.certificate);
  CHECK(s.certificate->nondegenerate);
  CHECK(verify_v_certificate(g, *s.certificate));
  const WIVerdict v = is_weakly_irreducible(g);
  CHECK(v.verdict == Verdict::Reducible);
  REQUIRE(v.certificate);
  CHECK(is_weakly_irreducible_v_side(g).verdict == Verdict::Reducible);
}

TEST_CASE("type 1 algebra at n=2 has only degenerate invariant subspaces") {
  const std::vector<QMatrix> B{test::J2()};
  const Subalgebra g = construct_type1(2, B);
  CHECK(is_weakly_irreducible(g).weakly_irreducible());
  const WIVerdict v = is_weakly_irreducible_v_side(g);
  CHECK(v.weakly_irreducible());

  // oracle: spin every coordinate vector and every p + e_i; no nondegenerate proper result
  std::vector<QMatrix> mats;
  for (const auto& t : g.basis()) mats.push_back(embed_matrix(t));
  const QMatrix G = MinkowskiSpace(2).gram();
  for (std::size_t i = 0; i < 4; ++i) {
    const std::vector<QVector> seed{unit_vector(4, i)};
    const Subspace s = spin(mats, seed);
    CHECK((s.is_full() || restricted_gram_determinant(s, G) == 0));
  }
}

TEST_CASE("the zero algebra is reducible") {
  const Subalgebra g(2);
  CHECK(is_weakly_irreducible(g).verdict == Verdict::Reducible);
  CHECK(is_weakly_irreducible_v_side(g).verdict == Verdict::Reducible);
}

TEST_CASE("E-side and V-side agree on catalog algebras") {
  std::mt19937_64 rng(20);
  for (int type = 1; type <= 4; ++type)
    for (CatalogB b : {CatalogB::Zero, CatalogB::SO2, CatalogB::SO3, CatalogB::SO2xSO2})
      for (std::size_t n = 2; n <= 4; ++n)
        for (bool surj : {true, false}) {
          if (!catalog_admissible(type, b, n, surj) || (!surj && type != 4)) continue;
          const CatalogInstance inst = make_catalog_instance(type, b, n, rng, true, surj);
          const WIVerdict e = is_weakly_irreducible(inst.algebra);
          const WIVerdict v = is_weakly_irreducible_v_side(inst.algebra, {7, 64});
          CAPTURE(type);
          CAPTURE(n);
          CHECK(e.verdict == v.verdict);
          CHECK(e.weakly_irreducible() == inst.psi_surjective);
          if (e.certificate) CHECK(verify_affine_certificate(n, affine_action(inst.algebra), *e.certificate));
          if (v.certificate) CHECK(verify_v_certificate(inst.algebra, *v.certificate));
        }
}

TEST_CASE("adding generators keeps weak irreducibility") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + k % 3;
    const CatalogInstance inst = make_catalog_instance(2, CatalogB::Zero, n, rng);
    std::vector<LieTriple> gens = inst.algebra.basis();
    gens.push_back(test::random_triple(n, rng));
    CHECK(is_weakly_irreducible(lie_closure(n, gens)).weakly_irreducible());
  }
}

TEST_CASE("spin and commutant") {
  const QMatrix J = test::J2();
  const std::vector<QMatrix> fam{J};
  const std::vector<QVector> seed{unit_vector(2, 0)};
  CHECK(spin(fam, seed).is_full());
  // commutant of J in 2x2: span{I, J}
  CHECK(commutant(fam).size() == 2);
  const QMatrix I = QMatrix::identity(2);
  CHECK(commutant(fam, &I).size() == 1);
}

TEST_CASE("splitting finds a block decomposition") {
  // block diag(J, 0) on Q^3 preserves span{e1, e2} and span{e3}
  const QMatrix M = skew_generator(3, 0, 1);
  const std::vector<QMatrix> fam{M};
  std::mt19937_64 rng(22);
  const auto found = split_invariant_subspaces(fam, rng, 16);
  REQUIRE_FALSE(found.empty());
  for (const auto& s : found) {
    CHECK(s.invariant_under(M));
    CHECK_FALSE(s.is_zero());
    CHECK_FALSE(s.is_full());
  }
}
