#pragma once

// JSON encodings.  Rationals are strings ("-3/2"); vectors are arrays of
// rationals, or a basis label ("p", "e1".."en", "q" in V; "e1".."en" in E)
// on input and for unit vectors in subspace bases on output.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "holo/classify.hpp"
#include "holo/hyperbolic.hpp"
#include "holo/invariant.hpp"
#include "holo/lie.hpp"
#include "holo/similarity.hpp"

namespace holo {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// Array of rationals.
json vector_to_json(const QVector& v);
/// Label for E-vectors that are unit basis vectors, array otherwise.
json e_vector_to_json(const QVector& v);
/// Accepts arrays (strings or integers) and labels; `ambient_v` selects the
/// V labels p, e_i, q over the E labels e_i.
QVector vector_from_json(const json& j, std::size_t dim, bool ambient_v = false);

json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);
json float_matrix_to_json(const Eigen::MatrixXd& m);
json float_vector_to_json(const Eigen::VectorXd& v);
Eigen::VectorXd float_vector_from_json(const json& j, std::size_t dim);

json triple_to_json(const LieTriple& t);
LieTriple triple_from_json(const json& j, std::size_t n);

/// {"n": n, "generators": [triple...]} or {"n": n, "matrices": [...]}.
struct AlgebraInput {
  std::size_t n = 0;
  std::vector<LieTriple> generators;
  std::vector<QMatrix> matrices;
};

AlgebraInput algebra_input_from_json(const json& j);
json algebra_to_json(const Subalgebra& g);

json subspace_to_json(const Subspace& s);
json certificate_to_json(const InvariantCertificate& c);
json verdict_to_json(const WIVerdict& v);
json classification_to_json(const BBIClassification& c);
json group_description_to_json(const GroupDescription& d);
json screw_to_json(const ScrewGroup& s);
json sim_to_json(const SimTransform& s);
json catalog_instance_to_json(const CatalogInstance& inst);

json hpoint_to_json(const HPoint& h);
HPoint hpoint_from_json(const json& j, std::size_t n);
TransitiveGroupSpec group_spec_from_json(const json& j, std::size_t n);
json transport_to_json(const Transport& t);
json simple_transitivity_to_json(const SimpleTransitivityReport& r);

}  // namespace holo
