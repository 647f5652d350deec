#include "holo/json_io.hpp"

#include <cctype>

namespace holo {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

std::optional<std::size_t> unit_index(const QVector& v) {
  std::optional<std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (idx || v[i] != 1) return std::nullopt;
    idx = i;
  }
  return idx;
}

QVector label_vector(const std::string& label, std::size_t dim, bool ambient_v) {
  if (ambient_v && label == "p") return unit_vector(dim, 0);
  if (ambient_v && label == "q") return unit_vector(dim, dim - 1);
  if (label.size() >= 2 && label[0] == 'e' &&
      std::all_of(label.begin() + 1, label.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const std::size_t i = std::stoul(label.substr(1));
    const std::size_t n = ambient_v ? dim - 2 : dim;
    if (i < 1 || i > n) bad("basis label '" + label + "' out of range");
    return unit_vector(dim, ambient_v ? i : i - 1);
  }
  bad("unknown basis label '" + label + "'");
}

json basis_json(const std::vector<QVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(e_vector_to_json(v));
  return a;
}

json matrices_json(const std::vector<QMatrix>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(matrix_to_json(m));
  return a;
}

}  // namespace

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
  if (!j.is_string()) bad("rational must be a string such as \"-3/2\" or an integer, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

json vector_to_json(const QVector& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(rational_to_json(c));
  return a;
}

json e_vector_to_json(const QVector& v) {
  if (auto i = unit_index(v)) return "e" + std::to_string(*i + 1);
  return vector_to_json(v);
}

QVector vector_from_json(const json& j, std::size_t dim, bool ambient_v) {
  if (j.is_string()) return label_vector(j.get<std::string>(), dim, ambient_v);
  if (!j.is_array()) bad("vector must be an array or a basis label, got " + j.dump());
  if (j.size() != dim) bad("vector has " + std::to_string(j.size()) + " entries, expected " + std::to_string(dim));
  QVector v;
  for (const auto& c : j) v.push_back(rational_from_json(c));
  return v;
}

json matrix_to_json(const QMatrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_to_json(m.row(r)));
  return a;
}

QMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) bad("matrix must be an array of " + std::to_string(rows) + " rows");
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const QVector row = vector_from_json(j[r], cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

json float_matrix_to_json(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    a.push_back(std::move(row));
  }
  return a;
}

json float_vector_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Eigen::VectorXd float_vector_from_json(const json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) bad("expected an array of " + std::to_string(dim) + " numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& c = j[i];
    if (c.is_number()) {
      v(static_cast<Eigen::Index>(i)) = c.get<double>();
    } else {
      v(static_cast<Eigen::Index>(i)) = rational_from_json(c).get_d();
    }
  }
  return v;
}

json triple_to_json(const LieTriple& t) {
  return {{"a", rational_to_json(t.a)}, {"A", matrix_to_json(t.A)}, {"X", vector_to_json(t.X)}};
}

LieTriple triple_from_json(const json& j, std::size_t n) {
  if (!j.is_object()) bad("triple must be an object with keys a, A, X");
  LieTriple t = LieTriple::zero(n);
  if (j.contains("a")) t.a = rational_from_json(j["a"]);
  if (j.contains("A")) t.A = matrix_from_json(j["A"], n, n);
  if (j.contains("X")) t.X = vector_from_json(j["X"], n);
  for (const auto& [key, value] : j.items())
    if (key != "a" && key != "A" && key != "X") bad("unknown key '" + key + "' in triple");
  try {
    t.validate();
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  return t;
}

AlgebraInput algebra_input_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n")) bad("algebra input must be an object with key n");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) bad("n must be a positive integer");
  AlgebraInput in;
  in.n = j["n"].get<std::size_t>();
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) bad("generators must be an array");
    for (const auto& g : j["generators"]) in.generators.push_back(triple_from_json(g, in.n));
  }
  if (j.contains("matrices")) {
    if (!j["matrices"].is_array()) bad("matrices must be an array");
    for (const auto& m : j["matrices"]) in.matrices.push_back(matrix_from_json(m, in.n + 2, in.n + 2));
  }
  if (!j.contains("generators") && !j.contains("matrices")) bad("algebra input needs generators or matrices");
  return in;
}

json algebra_to_json(const Subalgebra& g) {
  json gens = json::array();
  for (const auto& t : g.basis()) gens.push_back(triple_to_json(t));
  return {{"n", g.n()}, {"dim", g.dim()}, {"generators", gens}};
}

json subspace_to_json(const Subspace& s) { return basis_json(s.basis()); }

json certificate_to_json(const InvariantCertificate& c) {
  json j = {{"kind", to_string(c.kind)}};
  json basis = json::array();
  for (const auto& v : c.basis) basis.push_back(vector_to_json(v));
  j["basis"] = basis;
  if (c.kind == InvariantCertificate::Kind::VSubspace) {
    j["nondegenerate"] = c.nondegenerate;
  } else {
    j["base_point"] = vector_to_json(c.base_point);
  }
  return j;
}

json verdict_to_json(const WIVerdict& v) {
  return {{"verdict", to_string(v.verdict)},
          {"method", to_string(v.method)},
          {"certainty", to_string(v.certainty)},
          {"trials", v.trials},
          {"certificate", v.certificate ? certificate_to_json(*v.certificate) : json(nullptr)}};
}

json classification_to_json(const BBIClassification& c) {
  json j;
  j["type"] = c.type;
  j["n"] = c.n;
  j["B"] = matrices_json(c.B);
  j["B_commutant"] = matrices_json(c.B_commutant);
  j["zB"] = matrices_json(c.center);
  j["phi"] = nullptr;
  j["psi"] = nullptr;
  j["U"] = nullptr;
  j["W"] = nullptr;
  if (c.phi) {
    json values = json::array();
    for (const auto& v : c.phi->values) values.push_back(rational_to_json(v));
    j["phi"] = {{"basis", matrices_json(c.phi->center)}, {"values", values}};
  }
  if (c.psi) {
    json values = json::array();
    for (const auto& v : c.psi->values) values.push_back(e_vector_to_json(v));
    j["psi"] = {{"basis", matrices_json(c.psi->center)}, {"values", values}};
  }
  if (c.U) j["U"] = subspace_to_json(*c.U);
  if (c.W) j["W"] = subspace_to_json(*c.W);
  j["witnesses"] = {{"pure_N_dim", c.witnesses.pure_n_dim},
                    {"prA_dim", c.witnesses.pr_a_dim},
                    {"contains_dilation", c.witnesses.contains_dilation},
                    {"phi_vanishes_on_commutant", c.witnesses.phi_vanishes_on_commutant},
                    {"B_annihilates_U", c.witnesses.B_annihilates_U},
                    {"psi_rank", c.witnesses.psi_rank}};
  return j;
}

json screw_to_json(const ScrewGroup& s) {
  if (s.variant == ScrewGroup::Variant::ScrewDilation) return {{"variant", "A^Phi"}, {"Z", matrix_to_json(s.Z)}};
  return {{"variant", "U^Psi"}, {"U", basis_json(s.U)}, {"Zs", matrices_json(s.Zs)}};
}

json group_description_to_json(const GroupDescription& d) {
  json j = {{"type", d.type}, {"form", d.form}, {"H", matrices_json(d.H)}};
  j["screw"] = d.screw ? screw_to_json(*d.screw) : json(nullptr);
  j["W"] = d.W ? subspace_to_json(*d.W) : json(nullptr);
  return j;
}

json sim_to_json(const SimTransform& s) {
  return {{"lambda", s.lambda}, {"R", float_matrix_to_json(s.R)}, {"t", float_vector_to_json(s.t)}};
}

json catalog_instance_to_json(const CatalogInstance& inst) {
  json j = algebra_to_json(inst.algebra);
  json data = {{"type", inst.type}, {"B_kind", to_string(inst.kind)}, {"B", matrices_json(inst.B)}};
  if (inst.phi) {
    json values = json::array();
    for (const auto& v : inst.phi->values) values.push_back(rational_to_json(v));
    data["phi"] = {{"basis", matrices_json(inst.phi->center)}, {"values", values}};
  }
  if (inst.psi) {
    json values = json::array();
    for (const auto& v : inst.psi->values) values.push_back(e_vector_to_json(v));
    data["psi"] = {{"basis", matrices_json(inst.psi->center)}, {"values", values}};
    data["psi_surjective"] = inst.psi_surjective;
  }
  if (inst.W) data["W"] = subspace_to_json(*inst.W);
  j["construction"] = data;
  return j;
}

json hpoint_to_json(const HPoint& h) {
  return {{"x", rational_to_json(h.x)}, {"alpha", vector_to_json(h.alpha)}, {"y", rational_to_json(h.y)}};
}

HPoint hpoint_from_json(const json& j, std::size_t n) {
  if (j.is_array()) return HPoint::from_vector(vector_from_json(j, n + 2, true));
  if (!j.is_object() || !j.contains("x") || !j.contains("y")) bad("point must be {x, alpha, y} or an array of n+2 rationals");
  HPoint h;
  h.x = rational_from_json(j["x"]);
  h.y = rational_from_json(j["y"]);
  h.alpha = j.contains("alpha") ? vector_from_json(j["alpha"], n) : zeros(n);
  return h;
}

TransitiveGroupSpec group_spec_from_json(const json& j, std::size_t n) {
  TransitiveGroupSpec s;
  s.n = n;
  if (j.is_string()) {
    s.variant = variant_from_string(j.get<std::string>());
  } else {
    if (!j.is_object() || !j.contains("variant")) bad("group must be a variant name or an object with key variant");
    s.variant = variant_from_string(j["variant"].get<std::string>());
    if (j.contains("H"))
      for (const auto& m : j["H"]) s.H.push_back(matrix_from_json(m, n, n));
    if (j.contains("Z") && !j["Z"].is_null()) s.Z = matrix_from_json(j["Z"], n, n);
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  return s;
}

json transport_to_json(const Transport& t) {
  json j;
  j["exact"] = t.exact.has_value();
  j["matrix"] = t.exact ? matrix_to_json(*t.exact) : float_matrix_to_json(t.matrix);
  j["factors"] = {{"N", vector_to_json(t.X)},
                  {"A", rational_to_json(t.a)},
                  {"screw", t.screw ? float_matrix_to_json(*t.screw) : json(nullptr)}};
  j["residual"] = t.residual;
  return j;
}

json simple_transitivity_to_json(const SimpleTransitivityReport& r) {
  return {{"dimension", r.dimension},
          {"expected_dimension", r.expected_dimension},
          {"dimension_ok", r.dimension_ok},
          {"samples", r.samples},
          {"min_rank", r.min_rank},
          {"max_rank", r.max_rank},
          {"free", r.free},
          {"locally_transitive", r.locally_transitive},
          {"transport_ok", r.transport_ok ? json(*r.transport_ok) : json(nullptr)},
          {"simply_transitive", r.simply_transitive()}};
}

}  // namespace holo
