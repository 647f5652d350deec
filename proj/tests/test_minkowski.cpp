#include <doctest.h>

#include <random>

#include "holo/minkowski.hpp"
#include "support.hpp"

using namespace holo;

TEST_CASE("gram matrix in the null basis") {
  const MinkowskiSpace V(3);
  const QMatrix& G = V.gram();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      Rational expected = 0;
      if ((i == 0 && j == 4) || (i == 4 && j == 0)) expected = 1;
      if (i == j && i >= 1 && i <= 3) expected = 1;
      CHECK(G(i, j) == expected);
    }
  CHECK(V.eta(V.p(), V.q()) == 1);
  CHECK(V.eta(V.p(), V.p()) == 0);
  CHECK(V.eta(V.e(1), V.e(1)) == 1);
}

TEST_CASE("eta is symmetric") {
  std::mt19937_64 rng(1);
  const MinkowskiSpace V(4);
  for (int k = 0; k < 50; ++k) {
    const QVector x = test::random_vector(6, rng), y = test::random_vector(6, rng);
    CHECK(V.eta(x, y) == V.eta(y, x));
  }
}

TEST_CASE("orthonormal coordinates") {
  const MinkowskiSpace V(2);
  const OrthonormalVector p = V.to_orthonormal(V.p());
  // p = (e0 + e_{n+1}) / sqrt2: coefficient 1/sqrt2 = sqrt2/2
  CHECK(p[0] == Sqrt2Rational{0, Rational(1, 2)});
  CHECK(p[3] == Sqrt2Rational{0, Rational(1, 2)});
  CHECK(p[1] == Sqrt2Rational{0, 0});
  const OrthonormalVector q = V.to_orthonormal(V.q());
  CHECK(q[0] == Sqrt2Rational{0, Rational(-1, 2)});
  CHECK(q[3] == Sqrt2Rational{0, Rational(1, 2)});
  const OrthonormalVector e1 = V.to_orthonormal(V.e(1));
  CHECK(e1[1] == Sqrt2Rational{1, 0});

  std::mt19937_64 rng(2);
  const QMatrix ON = V.orthonormal_gram();
  CHECK(ON(0, 0) == -1);
  CHECK(ON(3, 3) == 1);
  for (int k = 0; k < 100; ++k) {
    const QVector x = test::random_vector(4, rng), y = test::random_vector(4, rng);
    CHECK(V.from_orthonormal(V.to_orthonormal(x)) == x);
    const Sqrt2Rational e = V.eta_orthonormal(V.to_orthonormal(x), V.to_orthonormal(y));
    CHECK(e.sqrt2 == 0);
    CHECK(e.rational == V.eta(x, y));
  }
}

TEST_CASE("light cone") {
  const MinkowskiSpace V(2);
  CHECK(V.on_light_cone(V.p()));
  CHECK(V.on_light_cone(zeros(4)));
  const QVector v = add(V.p(), scale(Rational(-1, 2), V.q()));
  CHECK(V.eta(v, v) == -1);
  CHECK_FALSE(V.on_light_cone(v));
  CHECK(V.on_light_cone(std::vector<double>{-0.5, 1.0, 0.0, 1.0 + 1e-12}));
  CHECK_FALSE(V.on_light_cone(std::vector<double>{-0.5, 1.0, 0.0, 1.1}));
}

TEST_CASE("chart examples") {
  const MinkowskiSpace V(2);
  CHECK(V.chart_of_line(V.q()) == zeros(2));
  const QVector v{Rational(-1, 2), 1, 0, 1};
  CHECK(V.on_light_cone(v));
  CHECK(V.chart_of_line(v) == unit_vector(2, 0));
  CHECK(V.chart_of_line(scale(2, v)) == unit_vector(2, 0));
  CHECK(V.line_of_chart(zeros(2)) == V.q());
  CHECK(V.line_of_chart(unit_vector(2, 0)) == v);
}

TEST_CASE("chart errors") {
  const MinkowskiSpace V(2);
  CHECK_THROWS_AS(V.chart_of_line(V.p()), std::invalid_argument);
  CHECK_THROWS_AS(V.chart_of_line(QVector{0, 1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(V.eta(zeros(3), zeros(4)), DimensionMismatch);
}

TEST_CASE("chart round trip and projectivity") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 4; ++n) {
    const MinkowskiSpace V(n);
    for (int k = 0; k < 100; ++k) {
      const QVector Y = test::random_vector(n, rng);
      const QVector line = V.line_of_chart(Y);
      CHECK(V.on_light_cone(line));
      CHECK(V.chart_of_line(line) == Y);
      Rational c = test::eighth(rng);
      if (c == 0) c = 3;
      CHECK(V.chart_of_line(scale(c, line)) == Y);
    }
  }
}
