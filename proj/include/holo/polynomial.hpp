#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

/// Univariate polynomial over Q, coefficients stored lowest degree first and
/// kept trimmed (no trailing zeros; the zero polynomial has no coefficients).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  QPoly monic() const;
  QPoly derivative() const;
  Rational operator()(const Rational& x) const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
/// Quotient and remainder; throws on division by the zero polynomial.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
/// Product of the distinct monic irreducible factors of p.
QPoly squarefree_part(const QPoly& p);

/// det(xI - m), computed exactly (Faddeev-LeVerrier).
QPoly characteristic_polynomial(const QMatrix& m);
QMatrix evaluate(const QPoly& p, const QMatrix& m);

/// Monic nontrivial proper factors of a squarefree polynomial over Q.
///
/// Candidates come from floating-point roots of a rescaled integer model of p
/// (subsets of roots closed under conjugation, rounded to integer
/// coefficients) and every returned factor is verified by exact division.
/// The list is ordered by degree and may be incomplete when coefficients are
/// too large for double precision.
std::vector<QPoly> rational_factors(const QPoly& squarefree, std::size_t max_candidates = 512);

}  // namespace holo
