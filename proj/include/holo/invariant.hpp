#pragma once

// Weak irreducibility of subalgebras of so(V)_Rp, decided on both sides of
// the correspondence with similarity groups of E:
//
//  * E-side: the algebra acts on E by affine vector fields v -> M v + X.  It
//    is transitive iff no proper affine subspace is invariant.
//  * V-side: the algebra acts linearly on V.  It is weakly irreducible iff
//    it preserves no proper nondegenerate subspace of (V, eta).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "holo/lie.hpp"
#include "holo/linalg.hpp"
#include "holo/minkowski.hpp"

namespace holo {

/// Infinitesimal similarity v -> M v + X with M = a I + A.
struct AffineField {
  QMatrix M;
  QVector X;
};

std::vector<AffineField> affine_action(const Subalgebra& g);
AffineField affine_field(const LieTriple& t);

struct InvariantCertificate {
  enum class Kind { VSubspace, AffineSubspace, FixedPoint };

  Kind kind = Kind::VSubspace;
  /// Basis of the V-subspace, or of the linear part S of the affine subspace.
  std::vector<QVector> basis;
  /// x0 for affine subspaces and fixed points.
  QVector base_point;
  /// eta restricted to the V-subspace is nondegenerate.
  bool nondegenerate = false;
};

std::string to_string(InvariantCertificate::Kind kind);

/// M_i S in S and M_i x0 + X_i in S for every field, S proper.
bool verify_affine_certificate(std::size_t n, std::span<const AffineField> fields, const InvariantCertificate& c);
/// Every embedded basis element maps the subspace into itself; recomputes
/// the nondegeneracy flag and checks it.
bool verify_v_certificate(const Subalgebra& g, const InvariantCertificate& c);

struct SearchOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 64;
};

/// Proper invariant affine subspace of E, or nullopt when the action is
/// transitive.  Exact in both directions.
std::optional<InvariantCertificate> find_invariant_affine(std::size_t n, std::span<const AffineField> fields);

struct VSubspaceSearch {
  std::optional<InvariantCertificate> certificate;
  /// True when "none found" is proven rather than Monte-Carlo.
  bool exhaustive = false;
  std::size_t trials = 0;
};

VSubspaceSearch find_invariant_V_subspace(const Subalgebra& g, bool only_nondegenerate,
                                          const SearchOptions& options = {});

enum class Verdict { WeaklyIrreducible, Reducible };
enum class Method { ESide, VSide };
enum class Certainty { Exact, MonteCarlo };

struct WIVerdict {
  Verdict verdict = Verdict::Reducible;
  Method method = Method::ESide;
  Certainty certainty = Certainty::Exact;
  std::size_t trials = 0;
  std::optional<InvariantCertificate> certificate;

  bool weakly_irreducible() const { return verdict == Verdict::WeaklyIrreducible; }
};

std::string to_string(Verdict v);
std::string to_string(Method m);
std::string to_string(Certainty c);

/// E-side decider.
WIVerdict is_weakly_irreducible(const Subalgebra& g, const SearchOptions& options = {});
/// V-side oracle, independent of the E-side computation.
WIVerdict is_weakly_irreducible_v_side(const Subalgebra& g, const SearchOptions& options = {});

// Module-splitting core, shared by the V-side search.

/// Smallest subspace containing the seeds and invariant under the family.
Subspace spin(std::span<const QMatrix> family, std::span<const QVector> seeds);

/// Randomized search for proper nonzero common invariant subspaces: random
/// elements of the generated associative algebra, kernels of rational
/// factors of their characteristic polynomials, spun up under the family.
/// Invariant subspaces of the transposed family contribute their orthogonal
/// complements.  Every returned subspace is verified invariant.
std::vector<Subspace> split_invariant_subspaces(std::span<const QMatrix> family, std::mt19937_64& rng,
                                                std::size_t trials);

/// Basis of {T : T F = F T for all F in family}, optionally restricted to
/// T^T G = G T (self-adjoint for the form G).
std::vector<QMatrix> commutant(std::span<const QMatrix> family, const QMatrix* self_adjoint_gram = nullptr);

}  // namespace holo
