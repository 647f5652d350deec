#pragma once

// Berard Bergery-Ikemakhen types of weakly irreducible subalgebras of
// so(V)_Rp, with B the so(E)-projection and B = B' + z(B):
//
//   1. (A + B) x N
//   2. B x N
//   3. (B' + {phi(z) + z : z in z(B)}) x N,       phi : z(B) -> A nonzero
//   4. (B' + {z + psi(z) : z in z(B)}) x N_W,     psi : z(B) -> U onto, E = U + W

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "holo/lie.hpp"
#include "holo/linalg.hpp"
#include "holo/similarity.hpp"

namespace holo {

class ClassificationError : public std::runtime_error {
 public:
  enum class Reason { NotWeaklyIrreducible, EmptyAlgebra, NotInNormalPosition };
  ClassificationError(Reason r, const std::string& what) : std::runtime_error(what), reason_(r) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

std::string to_string(ClassificationError::Reason r);

/// A linear map on z(B) given by its values on a basis of z(B).
struct PhiData {
  std::vector<QMatrix> center;
  std::vector<Rational> values;
};

struct PsiData {
  std::vector<QMatrix> center;
  std::vector<QVector> values;
};

struct BBIClassification {
  int type = 0;
  std::size_t n = 0;
  std::vector<QMatrix> B;
  std::vector<QMatrix> B_commutant;
  std::vector<QMatrix> center;
  /// Type 3: phi on `center`.
  std::optional<PhiData> phi;
  /// Type 4: psi on `center`, and E = U + W.
  std::optional<PsiData> psi;
  std::optional<Subspace> U;
  std::optional<Subspace> W;

  struct Witnesses {
    std::size_t pure_n_dim = 0;
    std::size_t pr_a_dim = 0;
    bool contains_dilation = false;
    bool phi_vanishes_on_commutant = true;
    bool B_annihilates_U = true;
    std::size_t psi_rank = 0;
  } witnesses;

  Rational phi_at(const QMatrix& z) const;
  QVector psi_at(const QMatrix& z) const;
};

/// Classifies a weakly irreducible g.  Throws ClassificationError.
BBIClassification classify(const Subalgebra& g);
/// Same for raw (n+2) x (n+2) matrices in the (p, e, q) basis; matrices
/// outside so(V)_Rp give NotInNormalPosition.
BBIClassification classify_matrices(std::size_t n, std::span<const QMatrix> mats);

Subalgebra construct_type1(std::size_t n, std::span<const QMatrix> B);
Subalgebra construct_type2(std::size_t n, std::span<const QMatrix> B);
/// phi.center must span z(B).
Subalgebra construct_type3(std::size_t n, std::span<const QMatrix> B, const PhiData& phi);

struct Type4Construction {
  Subalgebra algebra;
  bool psi_surjective = false;
};

/// psi.center must span z(B); psi values must lie in U = W^perp.
Type4Construction construct_type4(std::size_t n, std::span<const QMatrix> B, const Subspace& W, const PsiData& psi);

/// Evaluates a map given on a basis of z(B) at z; throws if z is outside the span.
Rational evaluate_phi(const PhiData& phi, const QMatrix& z);
QVector evaluate_psi(const PsiData& psi, const QMatrix& z);

/// Same linear map on the same space.
bool same_map(const PhiData& a, const PhiData& b);
bool same_map(const PsiData& a, const PsiData& b);

struct GroupDescription {
  int type = 0;
  std::string form;
  /// Lie algebra of H (skew n x n).
  std::vector<QMatrix> H;
  /// A^Phi for type 3, U^Psi for type 4.
  std::optional<ScrewGroup> screw;
  /// Type 4: the translation part W.
  std::optional<Subspace> W;
};

GroupDescription group_type_of(const BBIClassification& c);

// Catalog of compact subalgebras B of so(E) used for tests and `make`.

enum class CatalogB { Zero, SO2, SO3, SO2xSO2, SOn };

std::string to_string(CatalogB b);
CatalogB catalog_b_from_string(const std::string& s);
/// Smallest n for which the entry is a subalgebra of so(n).
std::size_t catalog_min_dim(CatalogB b);
/// Generators of the entry in the standard position (first coordinates).
std::vector<QMatrix> catalog_b(CatalogB b, std::size_t n);

/// Random rational rotation (Cayley transform of a small skew matrix).
QMatrix random_rotation(std::size_t n, std::mt19937_64& rng);

/// A constructed algebra together with the data it was built from.
struct CatalogInstance {
  int type = 0;
  std::size_t n = 0;
  CatalogB kind = CatalogB::Zero;
  std::vector<QMatrix> B;
  std::optional<PhiData> phi;
  std::optional<PsiData> psi;
  std::optional<Subspace> W;
  bool psi_surjective = true;
  Subalgebra algebra{1};
};

/// Whether the type can be built from this catalog entry in dimension n
/// (types 3 and 4 need z(B) != 0; a surjective psi needs dim U <= dim z(B)).
bool catalog_admissible(int type, CatalogB b, std::size_t n, bool surjective_psi = true);

/// Random admissible data: phi and psi with small rational values, W and B
/// moved by a random rational rotation when `conjugate` is set.
CatalogInstance make_catalog_instance(int type, CatalogB b, std::size_t n, std::mt19937_64& rng,
                                      bool conjugate = true, bool surjective_psi = true);

}  // namespace holo
