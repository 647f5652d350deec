#include <doctest.h>

#include <cmath>
#include <random>

#include "holo/minkowski.hpp"
#include "holo/similarity.hpp"
#include "support.hpp"

using namespace holo;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Eigen::VectorXd ev(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

// Oracle: chart(g line(Y)) by hand.
Eigen::VectorXd chart_image(const Eigen::MatrixXd& g, const Eigen::VectorXd& Y) {
  const Eigen::Index n = Y.size();
  Eigen::VectorXd line(n + 2);
  line(0) = -0.5 * Y.squaredNorm();
  line.segment(1, n) = Y;
  line(n + 1) = 1.0;
  const Eigen::VectorXd img = g * line;
  return img.segment(1, n) / img(n + 1);
}

}  // namespace

TEST_CASE("boundary action of A, K, N") {
  const QVector Y{3, Rational(-1, 2)};
  const QVector X{1, 2};
  CHECK(boundary_action(translation_element(X), Y) == add(Y, X));
  CHECK(boundary_action(dilation_element(2, 5), Y) == scale(5, Y));
  const QMatrix f = cayley_rotation(test::J2());
  CHECK(boundary_action(rotation_element(f), Y) == f * Y);
  CHECK_THROWS(boundary_action(QMatrix::identity(3), Y));
}

TEST_CASE("float boundary action matches the hand-written chart") {
  std::mt19937_64 rng(40);
  for (int k = 0; k < 20; ++k) {
    const LieTriple t = test::random_triple(3, rng);
    const Eigen::MatrixXd g = exp(t);
    const Eigen::VectorXd Y = to_eigen(test::random_vector(3, rng));
    CHECK(max_abs(boundary_action(g, Y) - chart_image(g, Y)) <= 1e-12 * std::max(1.0, max_abs(Y)) * 1e3);
  }
}

TEST_CASE("extract_sim examples") {
  const SimTransform id = extract_sim(Eigen::MatrixXd::Identity(4, 4));
  CHECK(id.lambda == doctest::Approx(1.0));
  CHECK(max_abs(id.R - Eigen::MatrixXd::Identity(2, 2)) <= 1e-12);
  CHECK(max_abs(id.t) <= 1e-12);

  const SimTransform d = extract_sim(exp(LieTriple::dilation(2)));
  CHECK(d.lambda == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(max_abs(d.R - Eigen::MatrixXd::Identity(2, 2)) <= 1e-12);

  const Eigen::VectorXd X = ev({0.5, -1.5});
  const SimTransform na = extract_sim(translation_matrix(X) * dilation_matrix(2, 0.25));
  CHECK(na.lambda == doctest::Approx(0.25));
  CHECK(max_abs(na.t - X) <= 1e-12);
  CHECK(max_abs(na.R - Eigen::MatrixXd::Identity(2, 2)) <= 1e-12);
}

TEST_CASE("extract_sim rejects matrices moving R p") {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
  g(1, 0) = 1.0;
  CHECK_THROWS_AS(extract_sim(g), std::invalid_argument);
  CHECK_FALSE(fixes_line_p(g));
}

TEST_CASE("similarity law and homomorphism") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 2 + k % 3;
    LieTriple t = test::random_triple(n, rng), u = test::random_triple(n, rng);
    const Eigen::MatrixXd g1 = exp(t, 0.25), g2 = exp(u, 0.25);
    const SimTransform s1 = extract_sim(g1), s2 = extract_sim(g2), s12 = extract_sim(g1 * g2);
    CHECK(sim_distance(s12, s1.compose(s2)) <= 1e-9);
    const Eigen::VectorXd Y1 = to_eigen(test::random_vector(n, rng)), Y2 = to_eigen(test::random_vector(n, rng));
    const double lhs = (boundary_action(g1, Y1) - boundary_action(g1, Y2)).norm();
    CHECK(lhs == doctest::Approx(s1.lambda * (Y1 - Y2).norm()).epsilon(1e-9));
    CHECK(sim_distance(s1.compose(s1.inverse()), SimTransform::identity(n)) <= 1e-9);
  }
}

TEST_CASE("K x N elements are isometries") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 20; ++k) {
    LieTriple t = test::random_triple(3, rng);
    t.a = 0;
    CHECK(extract_sim(exp(t)).lambda == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("flow examples") {
  const Eigen::VectorXd Y = ev({0.3, -0.7});
  CHECK(flow_check(LieTriple::translation(QVector{1, 2}), Y) <= 1e-6);
  CHECK(flow_check(LieTriple::dilation(2), ev({1.0, 0.0})) <= 1e-6);
  CHECK(flow_check(LieTriple::rotation(test::J2()), ev({1.0, 0.0})) <= 1e-6);
  // derivative of the rotation flow at e1 is e2: a wrong field would be caught
  const Eigen::MatrixXd g = exp(LieTriple::rotation(test::J2()), 1e-5);
  const Eigen::VectorXd d = (boundary_action(g, ev({1.0, 0.0})) - ev({1.0, 0.0})) / 1e-5;
  CHECK(d(0) == doctest::Approx(0.0).epsilon(1e-4));
  CHECK(d(1) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("flow consistency on random fields") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 4;
    CHECK(flow_check(test::random_triple(n, rng), to_eigen(test::random_vector(n, rng))) <= 1e-6);
  }
}

TEST_CASE("screw dilations") {
  const ScrewGroup s = ScrewGroup::dilation(test::J2());
  const ScrewElement one = screw_element(s, 1.0);
  CHECK(max_abs(one.matrix - Eigen::MatrixXd::Identity(4, 4)) <= 1e-12);
  const ScrewElement e = screw_element(s, std::exp(1.0));
  CHECK(e.sim.lambda == doctest::Approx(std::exp(1.0)));
  CHECK(e.sim.R(0, 0) == doctest::Approx(std::cos(1.0)));
  CHECK(e.sim.R(1, 0) == doctest::Approx(std::sin(1.0)));
  CHECK(max_abs(e.sim.t) <= 1e-12);
  CHECK_THROWS(screw_element(s, -1.0));
}

TEST_CASE("A^Phi normalizes translations") {
  // h N(X) h^{-1} = N(a Phi(a) X)
  const ScrewGroup s = ScrewGroup::dilation(test::J2());
  const double a = 1.7;
  const ScrewElement h = screw_element(s, a);
  const Eigen::VectorXd X = ev({0.4, -0.2});
  const SimTransform c = extract_sim(h.matrix * translation_matrix(X) * h.matrix.inverse());
  CHECK(c.lambda == doctest::Approx(1.0));
  CHECK(max_abs(c.t - a * (h.sim.R * X)) <= 1e-9);
}

TEST_CASE("screw isometries") {
  const ScrewGroup s = ScrewGroup::isometry({unit_vector(3, 2)}, {skew_generator(3, 0, 1)});
  s.validate();
  const ScrewElement zero = screw_element(s, zeros(3));
  CHECK(max_abs(zero.matrix - Eigen::MatrixXd::Identity(5, 5)) <= 1e-12);
  const ScrewElement u = screw_element(s, QVector{0, 0, 2});
  CHECK(u.sim.lambda == doctest::Approx(1.0));
  CHECK(u.sim.t(2) == doctest::Approx(2.0));
  CHECK(u.sim.R(1, 0) == doctest::Approx(std::sin(2.0)));
  CHECK_THROWS(screw_element(s, unit_vector(3, 0)));

  CHECK_THROWS_AS(ScrewGroup::isometry({unit_vector(3, 2)}, {skew_generator(3, 0, 2)}), std::invalid_argument);
}

TEST_CASE("float group matrices") {
  const Eigen::MatrixXd f = to_eigen(cayley_rotation(test::J2()));
  for (const Eigen::MatrixXd& g : {dilation_matrix(2, 3.0), rotation_matrix(f), translation_matrix(ev({1, 2}))}) {
    CHECK(eta_orthogonality_defect(g) <= 1e-12);
    CHECK(fixes_line_p(g));
  }
  CHECK(max_abs(gram_matrix(2) - to_eigen(MinkowskiSpace(2).gram())) == 0.0);
}
