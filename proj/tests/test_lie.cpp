#include <doctest.h>

#include <cmath>
#include <random>

#include "holo/linalg.hpp"
#include "holo/minkowski.hpp"
#include "support.hpp"

using namespace holo;

namespace {

// Oracle: commutator of the embedded matrices, read back as a triple.
LieTriple commutator_oracle(const LieTriple& u, const LieTriple& v) {
  return extract_triple(commutator(embed_matrix(u), embed_matrix(v)));
}

bool eta_skew(const QMatrix& M) {
  const QMatrix G = MinkowskiSpace(M.rows() - 2).gram();
  return (M.transpose() * G + G * M).is_zero();
}

}  // namespace

TEST_CASE("embed_matrix matrix forms") {
  const QMatrix d = embed_matrix(LieTriple::dilation(2));
  CHECK(d == QMatrix{{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}});
  const LieTriple x = LieTriple::translation(QVector{2, Rational(-1, 3)});
  CHECK(embed_matrix(x) == QMatrix{{0, -2, Rational(1, 3), 0}, {0, 0, 0, 2}, {0, 0, 0, Rational(-1, 3)}, {0, 0, 0, 0}});
  CHECK(extract_triple(embed_matrix(x)) == x);
}

TEST_CASE("embed rejects non-skew A") {
  LieTriple t = LieTriple::zero(2);
  t.A(0, 1) = 1;
  CHECK_THROWS_AS(embed_matrix(t), std::invalid_argument);
  CHECK_THROWS(extract_triple(QMatrix::identity(4)));
}

TEST_CASE("embedded triples are eta-skew") {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 100; ++k) CHECK(eta_skew(embed_matrix(test::random_triple(1 + k % 5, rng))));
}

TEST_CASE("skew generator takes e_i to e_j") {
  const QMatrix J = skew_generator(3, 0, 2);
  CHECK(J * unit_vector(3, 0) == unit_vector(3, 2));
  CHECK(J * unit_vector(3, 2) == scale(-1, unit_vector(3, 0)));
  CHECK(skew_from_coordinates(3, skew_coordinates(J)) == J);
}

TEST_CASE("bracket examples") {
  const QVector X{1, 2};
  CHECK(bracket(LieTriple::dilation(2), LieTriple::translation(X)) == LieTriple::translation(X));
  const QMatrix J = test::J2();
  CHECK(bracket(LieTriple::rotation(J), LieTriple::translation(X)) == LieTriple::translation(J * X));
  std::mt19937_64 rng(11);
  const LieTriple u = test::random_triple(3, rng);
  CHECK(bracket(u, u).is_zero());
}

TEST_CASE("bracket equals the matrix commutator") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 6;
    const LieTriple u = test::random_triple(n, rng), v = test::random_triple(n, rng);
    CHECK(bracket(u, v) == commutator_oracle(u, v));
  }
}

TEST_CASE("Jacobi identity") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 4;
    const LieTriple x = test::random_triple(n, rng), y = test::random_triple(n, rng), z = test::random_triple(n, rng);
    const LieTriple s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    CHECK(s.is_zero());
  }
}

TEST_CASE("N is an ideal and A commutes with K") {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 5;
    const LieTriple u = test::random_triple(n, rng);
    const LieTriple r = bracket(u, LieTriple::translation(test::random_vector(n, rng)));
    CHECK(r.a == 0);
    CHECK(r.A.is_zero());
    LieTriple rot = test::random_triple(n, rng);
    rot.a = 0;
    rot.X = zeros(n);
    CHECK(bracket(LieTriple::dilation(n, test::eighth(rng)), rot).is_zero());
  }
}

TEST_CASE("bracket dimension mismatch") {
  CHECK_THROWS_AS(bracket(LieTriple::zero(2), LieTriple::zero(3)), DimensionMismatch);
}

TEST_CASE("lie_closure examples") {
  const QMatrix J = test::J2();
  const std::vector<LieTriple> gens{LieTriple::rotation(J), LieTriple::translation(unit_vector(2, 0))};
  const Subalgebra g = lie_closure(2, gens);
  CHECK(g.dim() == 3);
  CHECK(g.contains(LieTriple::translation(unit_vector(2, 1))));
  CHECK_FALSE(g.contains(LieTriple::dilation(2)));
  CHECK(g.is_bracket_closed());

  std::mt19937_64 rng(15);
  const LieTriple u = test::random_triple(3, rng);
  CHECK(lie_closure(3, std::vector<LieTriple>{u}).dim() == 1);
}

TEST_CASE("lie_closure is idempotent") {
  std::mt19937_64 rng(16);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + k % 3;
    std::vector<LieTriple> gens;
    for (int i = 0; i < 2; ++i) {
      LieTriple t = test::random_triple(n, rng);
      if (k % 2) t.a = 0;
      gens.push_back(t);
    }
    const Subalgebra g = lie_closure(n, gens);
    CHECK(g.is_bracket_closed());
    CHECK(lie_closure(n, g.basis()) == g);
    CHECK(g.dim() <= algebra_dimension(n));
  }
}

TEST_CASE("from_span rejects unclosed spans") {
  const std::vector<LieTriple> gens{LieTriple::rotation(test::J2()), LieTriple::translation(unit_vector(2, 0))};
  CHECK_THROWS_AS(Subalgebra::from_span(2, gens), std::invalid_argument);
}

TEST_CASE("algebra dimension") {
  CHECK(algebra_dimension(1) == 2);
  CHECK(algebra_dimension(2) == 4);
  CHECK(algebra_dimension(3) == 7);
  CHECK(full_algebra(3).dim() == 7);
}

TEST_CASE("project_parts") {
  const ProjectedParts full = project_parts(full_algebra(2));
  CHECK(full.pr_a.dim() == 1);
  CHECK(full.pr_k.dim() == 1);
  CHECK(full.pure_n.is_full());

  const LieTriple t{1, QMatrix(2, 2), unit_vector(2, 0)};
  const ProjectedParts one = project_parts(lie_closure(2, std::vector<LieTriple>{t}));
  CHECK(one.pr_a.dim() == 1);
  CHECK(one.n_part.dim() == 1);
  CHECK(one.pure_n.is_zero());

  const QMatrix JW = skew_generator(3, 0, 1);
  const std::vector<LieTriple> gens{{0, JW, unit_vector(3, 2)},
                                    LieTriple::translation(unit_vector(3, 0)),
                                    LieTriple::translation(unit_vector(3, 1))};
  const ProjectedParts t4 = project_parts(lie_closure(3, gens));
  CHECK(t4.pure_n == Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)}));
  CHECK(t4.pr_a.is_zero());
}

TEST_CASE("center and commutant") {
  const std::vector<QMatrix> so2{test::J2()};
  const CompactSplit a = center_and_commutant(2, so2);
  CHECK(a.commutant.empty());
  CHECK(a.center.size() == 1);

  const std::vector<QMatrix> so3{skew_generator(3, 0, 1), skew_generator(3, 0, 2), skew_generator(3, 1, 2)};
  const CompactSplit b = center_and_commutant(3, so3);
  CHECK(b.commutant.size() == 3);
  CHECK(b.center.empty());

  const std::vector<QMatrix> mixed{skew_generator(5, 0, 1), skew_generator(5, 0, 2), skew_generator(5, 1, 2),
                                   skew_generator(5, 3, 4)};
  const CompactSplit c = center_and_commutant(5, mixed);
  CHECK(skew_span(5, c.commutant) == skew_span(5, std::vector<QMatrix>(mixed.begin(), mixed.begin() + 3)));
  REQUIRE(c.center.size() == 1);
  CHECK(skew_span(5, c.center) == skew_span(5, std::vector<QMatrix>{mixed[3]}));

  const std::vector<QMatrix> open{skew_generator(3, 0, 1), skew_generator(3, 0, 2)};
  CHECK_THROWS_AS(center_and_commutant(3, open), std::invalid_argument);
}

TEST_CASE("group elements are eta-orthogonal") {
  std::mt19937_64 rng(17);
  const std::size_t n = 3;
  const QMatrix G = MinkowskiSpace(n).gram();
  const QMatrix f = cayley_rotation(test::random_triple(n, rng).A);
  CHECK(f.transpose() * f == QMatrix::identity(n));
  for (const QMatrix& g : {dilation_element(n, Rational(3, 2)), rotation_element(f),
                           translation_element(test::random_vector(n, rng))})
    CHECK(g.transpose() * G * g == G);
}

TEST_CASE("exp examples") {
  const QVector X{1, -2};
  const Eigen::MatrixXd N = exp(LieTriple::translation(X));
  const Eigen::MatrixXd expected = to_eigen(translation_element(X));
  CHECK((N - expected).cwiseAbs().maxCoeff() <= 1e-12);
  // -|X|^2 / 2
  CHECK(N(0, 3) == doctest::Approx(-2.5));

  const Eigen::MatrixXd D = exp(LieTriple::dilation(2, Rational(1, 2)));
  CHECK(D(0, 0) == doctest::Approx(std::exp(0.5)).epsilon(1e-14));
  CHECK(D(3, 3) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(D(1, 1) == doctest::Approx(1.0));

  CHECK((exp(LieTriple::zero(3)) - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("exp is eta-orthogonal and fixes R p") {
  std::mt19937_64 rng(18);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 4;
    const LieTriple t = test::random_triple(n, rng);  // entries in [-2, 2]
    const Eigen::MatrixXd g = exp(t);
    const Eigen::MatrixXd G = to_eigen(MinkowskiSpace(n).gram());
    CHECK((g.transpose() * G * g - G).cwiseAbs().maxCoeff() <= 1e-9);
    for (Eigen::Index i = 1; i < g.rows(); ++i) CHECK(g(i, 0) == 0.0);
  }
}
