// holo: closure, weak irreducibility, classification and transport from the
// command line.  Reports are JSON; exit 0 on success, 1 on input errors,
// 2 when check-wi finds the algebra REDUCIBLE, 3 on internal errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "holo/commands.hpp"

using namespace holo;

namespace {

struct Config {
  std::string input = "-";
  std::string inline_json;
  std::string output = "-";
  CommandOptions options;
  MakeOptions make;
};

constexpr int kExitInternal = 3;

json read_input(const Config& c) {
  std::string text;
  if (!c.inline_json.empty()) {
    text = c.inline_json;
  } else if (c.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(c.input);
    if (!in) throw InputError("cannot open input file '" + c.input + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

int emit(const Config& c, const CommandResult& r) {
  const std::string text = r.report.dump(2) + "\n";
  if (c.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(c.output);
    if (!out) throw InputError("cannot open output file '" + c.output + "'");
    out << text;
  }
  if (r.report.contains("error")) std::cerr << "error: " << r.report["error"]["message"].get<std::string>() << "\n";
  return r.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holo: subalgebras of so(1, n+1) fixing an isotropic line"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Config c;

  auto io = [&c](CLI::App* sub) {
    sub->add_option("--input,-i", c.input, "input JSON file, - for stdin")->capture_default_str();
    sub->add_option("--json", c.inline_json, "inline JSON input (overrides --input)");
    sub->add_option("--output,-o", c.output, "report file, - for stdout")->capture_default_str();
    sub->add_option("--seed", c.options.seed, "seed for randomized searches")->capture_default_str();
    sub->add_option("--budget", c.options.budget, "trial budget for randomized searches")->capture_default_str();
  };

  auto* closure = app.add_subcommand("closure", "Lie closure of a generator set");
  io(closure);
  auto* check = app.add_subcommand("check-wi", "decide weak irreducibility (exit 2 when REDUCIBLE)");
  io(check);
  auto* cls = app.add_subcommand("classify", "BBI type and defining data of a weakly irreducible algebra");
  io(cls);
  auto* act = app.add_subcommand("boundary-act", "action of a group element on E");
  io(act);
  act->add_option("--tol", c.options.tol, "tolerance for the similarity extraction")->capture_default_str();
  auto* tr = app.add_subcommand("transport", "group element taking v to w on the hyperboloid");
  io(tr);
  tr->add_option("--tol", c.options.tol, "tolerance for float transports")->capture_default_str();
  auto* make = app.add_subcommand("make", "build an algebra of a given type from the catalog");
  make->add_option("--type", c.make.type, "BBI type 1..4")->check(CLI::Range(1, 4))->capture_default_str();
  make->add_option("--B", c.make.B, "0, so2, so3, so2+so2 or son")->capture_default_str();
  make->add_option("--n", c.make.n, "dimension of E")->check(CLI::PositiveNumber)->capture_default_str();
  make->add_flag("!--non-surjective", c.make.surjective, "type 4 with psi not onto U");
  make->add_option("--seed", c.make.seed, "seed for the random data")->capture_default_str();
  make->add_option("--output,-o", c.output, "report file, - for stdout")->capture_default_str();
  auto* self = app.add_subcommand("selftest", "acceptance suite at reduced size");
  self->add_option("--seed", c.options.seed, "seed")->capture_default_str();
  self->add_option("--budget", c.options.budget, "V-side search budget")->capture_default_str();
  self->add_option("--output,-o", c.output, "report file, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; anything else is an input error
    return app.exit(e) == 0 ? 0 : kStatusInput;
  }

  try {
    if (*closure) return emit(c, run_closure(read_input(c), c.options));
    if (*check) return emit(c, run_check_wi(read_input(c), c.options));
    if (*cls) return emit(c, run_classify(read_input(c), c.options));
    if (*act) return emit(c, run_boundary_act(read_input(c), c.options));
    if (*tr) return emit(c, run_transport(read_input(c), c.options));
    if (*make) return emit(c, run_make(c.make));
    if (*self) {
      std::string log;
      const CommandResult r = run_selftest(c.options, 0.2, &log);
      std::cerr << log;
      return emit(c, r);
    }
  } catch (const std::invalid_argument& e) {  // InputError, DimensionMismatch, bad data
    std::cerr << "error: " << e.what() << "\n";
    return kStatusInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kStatusInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kStatusInput;
}
