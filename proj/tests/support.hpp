#pragma once

#include <random>

#include "holo/lie.hpp"

namespace holo::test {

// k/8 with k in [-16, 16]
inline Rational eighth(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(-16, 16);
  Rational r(k(rng), 8);
  r.canonicalize();
  return r;
}

inline LieTriple random_triple(std::size_t n, std::mt19937_64& rng) {
  LieTriple t = LieTriple::zero(n);
  t.a = eighth(rng);
  for (std::size_t i = 0; i < n; ++i) {
    t.X[i] = eighth(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      t.A(j, i) = eighth(rng);
      t.A(i, j) = -t.A(j, i);
    }
  }
  return t;
}

inline QVector random_vector(std::size_t n, std::mt19937_64& rng) {
  QVector v(n);
  for (auto& c : v) c = eighth(rng);
  return v;
}

inline QMatrix J2() { return skew_generator(2, 0, 1); }

}  // namespace holo::test
