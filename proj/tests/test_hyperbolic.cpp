#include <doctest.h>

#include <random>

#include "holo/classify.hpp"
#include "holo/hyperbolic.hpp"
#include "holo/minkowski.hpp"
#include "holo/similarity.hpp"
#include "support.hpp"

using namespace holo;

namespace {

HPoint hp(Rational x, QVector alpha, Rational y) { return {std::move(x), std::move(alpha), std::move(y)}; }

TransitiveGroupSpec an(std::size_t n) { return {TransitiveGroupSpec::Variant::AN, n, {}, std::nullopt}; }

}  // namespace

TEST_CASE("on_hyperboloid examples") {
  CHECK(on_hyperboloid(hp(1, zeros(2), Rational(-1, 2))));
  CHECK_FALSE(on_hyperboloid(QVector{0, 0, 0, 1}));
  CHECK_FALSE(on_hyperboloid(hp(-1, zeros(2), Rational(1, 2))));
  CHECK_THROWS_AS(check_hyperboloid(hp(-1, zeros(2), Rational(1, 2))), std::invalid_argument);
}

TEST_CASE("random points lie on the hyperboloid with x, y nonzero") {
  std::mt19937_64 rng(50);
  for (int k = 0; k < 100; ++k) {
    const HPoint h = random_hyperboloid_point(1 + k % 4, rng);
    CHECK(on_hyperboloid(h));
    CHECK(h.x != 0);
    CHECK(h.y != 0);
  }
}

TEST_CASE("worked transport") {
  const HPoint v = hp(1, zeros(2), Rational(-1, 2));
  const HPoint w = hp(1, unit_vector(2, 0), -1);
  // oracle: apply N(-2 e1) then A(1/2)
  const QVector mid = translation_element(QVector{-2, 0}) * v.vector();
  CHECK(mid == QVector{2, 1, 0, Rational(-1, 2)});
  CHECK(dilation_element(2, Rational(1, 2)) * mid == w.vector());

  const Transport t = transport(v, w, an(2));
  CHECK(t.X == QVector{-2, 0});
  CHECK(t.a == Rational(1, 2));
  REQUIRE(t.exact);
  CHECK(*t.exact == dilation_element(2, Rational(1, 2)) * translation_element(QVector{-2, 0}));
}

TEST_CASE("transport v to itself is the identity") {
  const HPoint v = hp(1, zeros(3), Rational(-1, 2));
  const Transport t = transport(v, v, an(3));
  CHECK(*t.exact == QMatrix::identity(5));
}

TEST_CASE("exact A x N transports") {
  std::mt19937_64 rng(51);
  for (int k = 0; k < 100; ++k) {
    const HPoint v = random_hyperboloid_point(3, rng), w = random_hyperboloid_point(3, rng);
    const Transport t = transport(v, w, an(3));
    REQUIRE(t.exact);
    CHECK(*t.exact * v.vector() == w.vector());
    const QMatrix G = MinkowskiSpace(3).gram();
    CHECK(t.exact->transpose() * G * *t.exact == G);
    // factor shapes: A(a) N(X)
    CHECK(*t.exact == dilation_element(3, t.a) * translation_element(t.X));
    CHECK(on_hyperboloid(*t.exact * random_hyperboloid_point(3, rng).vector()));
  }
}

TEST_CASE("screw transport") {
  std::mt19937_64 rng(52);
  const TransitiveGroupSpec spec{TransitiveGroupSpec::Variant::AphiN, 2, {}, test::J2()};
  for (int k = 0; k < 20; ++k) {
    const HPoint v = random_hyperboloid_point(2, rng), w = random_hyperboloid_point(2, rng);
    const Transport t = transport(v, w, spec);
    CHECK_FALSE(t.exact);
    CHECK(t.residual <= 1e-9);
    CHECK((t.matrix * to_eigen(v.vector()) - to_eigen(w.vector())).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("group spec validation") {
  TransitiveGroupSpec s{TransitiveGroupSpec::Variant::AphiHN, 3, {skew_generator(3, 0, 2)}, skew_generator(3, 0, 1)};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.H = {skew_generator(3, 0, 1)};
  CHECK_NOTHROW(s.validate());
  TransitiveGroupSpec missing{TransitiveGroupSpec::Variant::AphiN, 2, {}, std::nullopt};
  CHECK_THROWS_AS(missing.validate(), std::invalid_argument);
  CHECK(variant_from_string("A|N") == TransitiveGroupSpec::Variant::AN);
  CHECK_THROWS_AS(variant_from_string("KN"), std::invalid_argument);
}

TEST_CASE("simple transitivity") {
  std::mt19937_64 rng(53);
  const SimpleTransitivityReport a = simply_transitive_check(an(2), 8, rng);
  CHECK(a.dimension == 3);
  CHECK(a.simply_transitive());

  const TransitiveGroupSpec phi{TransitiveGroupSpec::Variant::AphiN, 2, {}, test::J2()};
  CHECK(simply_transitive_check(phi, 8, rng).simply_transitive());

  const SimpleTransitivityReport kn = simply_transitive_check(kn_algebra(2), 8, rng);
  CHECK(kn.dimension == 3);
  CHECK_FALSE(kn.free);
  CHECK_FALSE(kn.simply_transitive());
  CHECK_FALSE(simply_transitive_check(kn_algebra(3), 8, rng).simply_transitive());
}

TEST_CASE("K x N witness") {
  std::mt19937_64 rng(54);
  for (std::size_t n = 2; n <= 4; ++n) {
    const KNWitness k = nontransitivity_witness_kn(n, rng, 100);
    CHECK(k.v.vector() == QVector(add(scale(Rational(1, 2), unit_vector(n + 2, 0)), scale(-1, unit_vector(n + 2, n + 1)))));
    CHECK(k.invariant_preserved);
    CHECK(k.invariant_v != k.invariant_w);
    CHECK(k.obstructs());
  }
  // an A element does change the q-coefficient
  const QVector v = QVector{Rational(1, 2), 0, 0, -1};
  CHECK((dilation_element(2, 2) * v).back() != v.back());
}

TEST_CASE("stabilizer point") {
  const HPoint h = stabilizer_point(3);
  CHECK(on_hyperboloid(h));
  std::mt19937_64 rng(55);
  const QMatrix k = rotation_element(random_rotation(3, rng));
  CHECK(k * h.vector() == h.vector());
  CHECK(dilation_element(3, 3) * h.vector() != h.vector());
}
