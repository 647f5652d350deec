#include "holo/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace holo {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly({c}); }

QPoly QPoly::x() { return QPoly({Rational(0), Rational(1)}); }

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  const Rational lc = c.back();
  for (auto& x : c) x /= lc;
  return QPoly(std::move(c));
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return QPoly(std::move(d));
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = r[static_cast<std::size_t>(k)] / b.leading();
    q[static_cast<std::size_t>(k - db)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return QPoly::constant(1);
  const QPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

QPoly characteristic_polynomial(const QMatrix& m) {
  if (!m.square()) throw DimensionMismatch("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  // c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    const QMatrix am = m * mk;
    c[n - k] = -am.trace() / static_cast<long>(k);
  }
  return QPoly(std::move(c));
}

QMatrix evaluate(const QPoly& p, const QMatrix& m) {
  if (!m.square()) throw DimensionMismatch("evaluate polynomial at non-square matrix");
  const std::size_t n = m.rows();
  QMatrix acc(n, n);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

namespace {

mpz_class lcm_of_denominators(const QPoly& p) {
  mpz_class d = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  return d;
}

struct RootAtom {
  std::vector<std::complex<long double>> roots;
};

std::vector<RootAtom> root_atoms(const QPoly& s) {
  const int d = s.degree();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -s.coeffs()[static_cast<std::size_t>(i)].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  std::vector<std::complex<double>> roots(es.eigenvalues().data(), es.eigenvalues().data() + d);

  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r));
  const double tol = 1e-7 * scale;

  std::vector<RootAtom> atoms;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (std::abs(roots[i].imag()) <= tol) {
      atoms.push_back({{std::complex<long double>(roots[i].real(), 0.0L)}});
      continue;
    }
    std::size_t best = roots.size();
    double best_dist = 0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(roots[j] - std::conj(roots[i]));
      if (best == roots.size() || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == roots.size()) return {};
    used[best] = true;
    atoms.push_back({{std::complex<long double>(roots[i].real(), roots[i].imag()),
                      std::complex<long double>(roots[i].real(), -roots[i].imag())}});
  }
  return atoms;
}

}  // namespace

std::vector<QPoly> rational_factors(const QPoly& squarefree, std::size_t max_candidates) {
  const QPoly s = squarefree.monic();
  const int d = s.degree();
  std::vector<QPoly> out;
  if (d <= 1) return out;

  // t(x) = D^d s(x / D) is monic with integer coefficients; its monic factors are integral.
  const mpz_class D = lcm_of_denominators(s);
  std::vector<Rational> tc(static_cast<std::size_t>(d + 1));
  {
    mpz_class pw = 1;
    for (int k = d; k >= 0; --k) {
      tc[static_cast<std::size_t>(k)] = s.coeffs()[static_cast<std::size_t>(k)] * Rational(pw);
      pw *= D;
    }
  }
  const QPoly t(std::move(tc));
  const long double Dld = D.get_d();

  const auto atoms = root_atoms(s);
  if (atoms.empty()) return out;
  const std::size_t na = atoms.size();
  if (na > 20) return out;

  std::vector<std::pair<int, unsigned long>> subsets;
  for (unsigned long mask = 1; mask + 1 < (1UL << na); ++mask) {
    int deg = 0;
    for (std::size_t i = 0; i < na; ++i)
      if (mask & (1UL << i)) deg += static_cast<int>(atoms[i].roots.size());
    if (2 * deg <= d) subsets.emplace_back(deg, mask);
  }
  std::sort(subsets.begin(), subsets.end());
  if (subsets.size() > max_candidates) subsets.resize(max_candidates);

  auto already = [&out](const QPoly& p) { return std::find(out.begin(), out.end(), p) != out.end(); };

  for (const auto& [deg, mask] : subsets) {
    std::vector<std::complex<long double>> poly{1.0L};
    for (std::size_t i = 0; i < na; ++i) {
      if (!(mask & (1UL << i))) continue;
      for (const auto& r : atoms[i].roots) {
        const auto root = r * Dld;
        std::vector<std::complex<long double>> next(poly.size() + 1, 0.0L);
        for (std::size_t k = 0; k < poly.size(); ++k) {
          next[k + 1] += poly[k];
          next[k] -= root * poly[k];
        }
        poly = std::move(next);
      }
    }
    std::vector<Rational> hc(poly.size());
    bool ok = true;
    for (std::size_t k = 0; k < poly.size() && ok; ++k) {
      const long double v = std::round(poly[k].real());
      if (!std::isfinite(static_cast<double>(v)) || std::fabs(static_cast<double>(v)) > 9e15) {
        ok = false;
        break;
      }
      hc[k] = Rational(static_cast<double>(v));
    }
    if (!ok) continue;
    const QPoly ht(std::move(hc));
    if (ht.degree() != deg) continue;
    auto [q, r] = divmod(t, ht);
    if (!r.is_zero()) continue;
    // h(x) = D^{-deg} ht(D x)
    for (const QPoly* f : std::initializer_list<const QPoly*>{&ht, &q}) {
      std::vector<Rational> back(f->coeffs().size());
      Rational pw = 1;
      const Rational Dq{D};
      for (std::size_t k = 0; k < back.size(); ++k) {
        back[k] = f->coeffs()[k] * pw;
        pw *= Dq;
      }
      QPoly h = QPoly(std::move(back)).monic();
      if (h.degree() >= 1 && h.degree() < d && !already(h)) out.push_back(std::move(h));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) { return a.degree() < b.degree(); });
  return out;
}

}  // namespace holo
