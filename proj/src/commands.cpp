#include "holo/commands.hpp"

#include <random>

#include "holo/acceptance.hpp"

namespace holo {

namespace {

json envelope(const std::string& command, const CommandOptions& o) {
  return {{"command", command}, {"version", kVersion}, {"seed", o.seed}, {"budget", o.budget}};
}

Subalgebra algebra_from(const AlgebraInput& in) {
  std::vector<LieTriple> triples = in.generators;
  for (const auto& m : in.matrices) triples.push_back(extract_triple(m));
  return lie_closure(in.n, triples);
}

bool span_is_closed(const AlgebraInput& in, const Subalgebra& closure) {
  std::vector<QVector> coords;
  for (const auto& t : in.generators) coords.push_back(triple_coordinates(t));
  return Subspace::span(algebra_dimension(in.n), coords).dim() == closure.dim();
}

std::size_t require_n(const json& j, const char* command) {
  if (!j.is_object() || !j.contains("n")) throw InputError(std::string(command) + " input needs n");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) throw InputError("n must be a positive integer");
  return j["n"].get<std::size_t>();
}

}  // namespace

CommandResult run_closure(const json& input, const CommandOptions& o) {
  const AlgebraInput in = algebra_input_from_json(input);
  const Subalgebra g = algebra_from(in);
  json r = envelope("closure", o);
  r["input_closed"] = in.matrices.empty() && span_is_closed(in, g);
  r["algebra"] = algebra_to_json(g);
  return {r, kStatusOk};
}

CommandResult run_check_wi(const json& input, const CommandOptions& o) {
  const Subalgebra g = algebra_from(algebra_input_from_json(input));
  const SearchOptions so{o.seed, o.budget};
  const WIVerdict e = is_weakly_irreducible(g, so);
  const WIVerdict v = is_weakly_irreducible_v_side(g, so);
  json r = envelope("check-wi", o);
  r["n"] = g.n();
  r["dim"] = g.dim();
  r["verdict"] = to_string(e.verdict);
  r["e_side"] = verdict_to_json(e);
  r["v_side"] = verdict_to_json(v);
  r["sides_agree"] = e.verdict == v.verdict;
  return {r, e.weakly_irreducible() ? kStatusOk : kStatusReducible};
}

CommandResult run_classify(const json& input, const CommandOptions& o) {
  const AlgebraInput in = algebra_input_from_json(input);
  json r = envelope("classify", o);
  try {
    const BBIClassification cls =
        in.matrices.empty() ? classify(lie_closure(in.n, in.generators)) : classify_matrices(in.n, in.matrices);
    r.update(classification_to_json(cls));
    r["group"] = group_description_to_json(group_type_of(cls));
  } catch (const ClassificationError& e) {
    r["error"] = {{"reason", to_string(e.reason())}, {"message", e.what()}};
    return {r, kStatusInput};
  }
  return {r, kStatusOk};
}

CommandResult run_boundary_act(const json& j, const CommandOptions& o) {
  const std::size_t n = require_n(j, "boundary-act");
  json r = envelope("boundary-act", o);
  std::vector<json> points;
  if (j.contains("Y")) points.push_back(j["Y"]);
  if (j.contains("points"))
    for (const auto& p : j["points"]) points.push_back(p);
  if (points.empty()) throw InputError("boundary-act input needs Y or points");

  json images = json::array();
  Eigen::MatrixXd g;
  if (j.contains("g")) {
    const QMatrix gq = matrix_from_json(j["g"], n + 2, n + 2);
    if (!fixes_line_p(gq)) throw InputError("g does not preserve the line R p");
    g = to_eigen(gq);
    for (const auto& p : points) images.push_back(vector_to_json(boundary_action(gq, vector_from_json(p, n))));
    r["exact"] = true;
  } else if (j.contains("triple")) {
    const LieTriple t = triple_from_json(j["triple"], n);
    const double s = j.value("s", 1.0);
    g = exp(t, s);
    for (const auto& p : points) images.push_back(float_vector_to_json(boundary_action(g, float_vector_from_json(p, n))));
    r["exact"] = false;
    json flows = json::array();
    for (const auto& p : points) flows.push_back(flow_check(t, float_vector_from_json(p, n)));
    r["flow_residuals"] = flows;
  } else {
    throw InputError("boundary-act input needs g (rational matrix) or triple");
  }
  r["images"] = images;
  r["sim"] = sim_to_json(extract_sim(g, o.tol));
  return {r, kStatusOk};
}

CommandResult run_transport(const json& j, const CommandOptions& o) {
  const std::size_t n = require_n(j, "transport");
  if (!j.contains("v") || !j.contains("w")) throw InputError("transport input needs n, v and w");
  const HPoint v = hpoint_from_json(j["v"], n);
  const HPoint w = hpoint_from_json(j["w"], n);
  if (!on_hyperboloid(v) || !on_hyperboloid(w)) throw InputError("v and w must lie on the hyperboloid");
  const TransitiveGroupSpec spec = group_spec_from_json(j.value("group", json("A|N")), n);
  json r = envelope("transport", o);
  r["group"] = to_string(spec.variant);
  r["v"] = hpoint_to_json(v);
  r["w"] = hpoint_to_json(w);
  r.update(transport_to_json(transport(v, w, spec, o.tol)));
  return {r, kStatusOk};
}

CommandResult run_make(const MakeOptions& m) {
  if (m.type < 1 || m.type > 4) throw InputError("type must be 1..4");
  if (m.n < 1) throw InputError("n must be positive");
  std::mt19937_64 rng(m.seed);
  const CatalogB b = catalog_b_from_string(m.B);
  if (!catalog_admissible(m.type, b, m.n, m.surjective))
    throw InputError("type " + std::to_string(m.type) + " cannot be built from " + m.B + " in dimension " +
                     std::to_string(m.n));
  const CatalogInstance inst = make_catalog_instance(m.type, b, m.n, rng, true, m.surjective);
  json r = {{"command", "make"}, {"version", kVersion}, {"seed", m.seed}};
  r.update(catalog_instance_to_json(inst));
  return {r, kStatusOk};
}

CommandResult run_selftest(const CommandOptions& o, double scale, std::string* log) {
  AcceptanceOptions options;
  options.seed = o.seed;
  options.budget = o.budget;
  options.scale = scale;
  json r = envelope("selftest", o);
  json criteria = json::array();
  bool all = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const CriterionResult res = run_criterion(id, options);
    if (log) *log += format_result(res) + "\n";
    all = all && res.passed;
    criteria.push_back({{"id", res.id},
                        {"name", res.name},
                        {"passed", res.passed},
                        {"instances", res.instances},
                        {"failures", res.failures}});
  }
  r["scale"] = options.scale;
  r["criteria"] = criteria;
  r["passed"] = all;
  return {r, all ? kStatusOk : kStatusInput};
}

}  // namespace holo
