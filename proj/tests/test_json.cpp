#include <doctest.h>

#include <random>

#include "holo/json_io.hpp"
#include "support.hpp"

using namespace holo;

TEST_CASE("rationals") {
  CHECK(rational_to_json(Rational(-1, 2)) == json("-1/2"));
  CHECK(rational_from_json(json("3/6")) == Rational(1, 2));
  CHECK(rational_from_json(json(4)) == 4);
  CHECK(rational_from_json(json("0.25")) == Rational(1, 4));
  CHECK_THROWS_AS(rational_from_json(json("1/0")), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(json("x")), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(json(0.5)), std::invalid_argument);
}

TEST_CASE("vector labels") {
  CHECK(vector_from_json(json("e2"), 3) == unit_vector(3, 1));
  CHECK(vector_from_json(json("p"), 4, true) == unit_vector(4, 0));
  CHECK(vector_from_json(json("q"), 4, true) == unit_vector(4, 3));
  CHECK(vector_from_json(json("e1"), 4, true) == unit_vector(4, 1));
  CHECK_THROWS_AS(vector_from_json(json("p"), 2), std::invalid_argument);
  CHECK_THROWS_AS(vector_from_json(json("e4"), 3), std::invalid_argument);
  CHECK(e_vector_to_json(unit_vector(3, 2)) == json("e3"));
  CHECK(e_vector_to_json(QVector{1, 1}) == json::array({"1", "1"}));
  CHECK_THROWS_AS(vector_from_json(json::array({"1"}), 2), std::invalid_argument);
}

TEST_CASE("triple round trip") {
  std::mt19937_64 rng(60);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + k % 4;
    const LieTriple t = test::random_triple(n, rng);
    CHECK(triple_from_json(json::parse(triple_to_json(t).dump()), n) == t);
  }
  const json doc = json::parse(R"({"a": "1/2", "A": [["0","-1"],["1","0"]], "X": ["1","0"]})");
  const LieTriple t = triple_from_json(doc, 2);
  CHECK(t.a == Rational(1, 2));
  CHECK(t.A == test::J2());
  CHECK_THROWS_AS(triple_from_json(json::parse(R"({"b": "1"})"), 2), std::invalid_argument);
  CHECK_THROWS_AS(triple_from_json(json::parse(R"({"A": [["0","1"],["1","0"]]})"), 2), std::invalid_argument);
}

TEST_CASE("algebra input") {
  const AlgebraInput in = algebra_input_from_json(json::parse(R"({"n": 2, "generators": [{"X": "e1"}, {"a": 1}]})"));
  CHECK(in.n == 2);
  REQUIRE(in.generators.size() == 2);
  CHECK(in.generators[0] == LieTriple::translation(unit_vector(2, 0)));
  CHECK(in.generators[1] == LieTriple::dilation(2));
  CHECK_THROWS_AS(algebra_input_from_json(json::parse(R"({"n": 0, "generators": []})")), std::invalid_argument);
  CHECK_THROWS_AS(algebra_input_from_json(json::parse(R"({"n": 2})")), std::invalid_argument);

  const Subalgebra g = full_algebra(2);
  const json out = algebra_to_json(g);
  CHECK(out["dim"] == 4);
  const AlgebraInput back = algebra_input_from_json(out);
  CHECK(lie_closure(2, back.generators) == g);
}

TEST_CASE("matrices") {
  const QMatrix m{{1, Rational(-2, 3)}, {0, 5}};
  CHECK(matrix_from_json(matrix_to_json(m), 2, 2) == m);
  CHECK_THROWS_AS(matrix_from_json(matrix_to_json(m), 3, 3), std::invalid_argument);
}

TEST_CASE("points and group specs") {
  const HPoint h{1, unit_vector(2, 0), -1};
  const HPoint back = hpoint_from_json(hpoint_to_json(h), 2);
  CHECK(back.vector() == h.vector());
  CHECK(hpoint_from_json(json::array({"1", "0", "0", "-1/2"}), 2).y == Rational(-1, 2));
  CHECK(group_spec_from_json(json("A|N"), 2).variant == TransitiveGroupSpec::Variant::AN);
  const json phi = {{"variant", "Aphi|N"}, {"Z", matrix_to_json(test::J2())}};
  const TransitiveGroupSpec s = group_spec_from_json(phi, 2);
  REQUIRE(s.Z);
  CHECK(*s.Z == test::J2());
}

TEST_CASE("classification report") {
  const QMatrix JW = skew_generator(3, 0, 1);
  const Subalgebra g = lie_closure(3, std::vector<LieTriple>{{0, JW, unit_vector(3, 2)},
                                                             LieTriple::translation(unit_vector(3, 0)),
                                                             LieTriple::translation(unit_vector(3, 1))});
  const json r = classification_to_json(classify(g));
  CHECK(r["type"] == 4);
  CHECK(r["U"] == json::array({"e3"}));
  CHECK(r["W"] == json::array({"e1", "e2"}));
  CHECK(r["psi"]["values"] == json::array({"e3"}));
  CHECK(r["phi"].is_null());
  const json d = group_description_to_json(group_type_of(classify(g)));
  CHECK(d["screw"]["variant"] == "U^Psi");
}
