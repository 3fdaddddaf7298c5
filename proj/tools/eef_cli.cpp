#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eef/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"integer exponential family models: kernels, Hilbert bases, exposed faces, limits"};
  app.set_version_flag("--version", "eef 0.1.0");
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "aligned tables instead of JSON");

  std::string model_path, density_path, expect, example_name;
  unsigned long oracle_bound = 0;
  std::vector<double> theta;
  long face_index = 0;
  double tol = 1e-9;
  int steps = 0;

  auto* kernel = app.add_subcommand("kernel", "integer kernel and confounding space");
  kernel->fallthrough();
  kernel->add_option("model", model_path, "model matrix file")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of the orthogonal monoid");
  hilbert->fallthrough();
  hilbert->add_option("model", model_path, "model matrix file")->required();
  auto* oracle_opt =
      hilbert->add_option("--oracle", oracle_bound, "cross-check against brute force up to this bound");

  auto* faces = app.add_subcommand("faces", "maximal exposed sets with certificates");
  faces->fallthrough();
  faces->add_option("model", model_path, "model matrix file")->required();

  auto* check = app.add_subcommand("check", "closure membership of a density");
  check->fallthrough();
  check->add_option("model", model_path, "model matrix file")->required();
  check->add_option("density", density_path, "one rational or decimal per line")->required();
  auto* expect_opt =
      check->add_option("--expect", expect, "fail unless the verdict is this kind");

  auto* limit = app.add_subcommand("limit", "Gibbs limit toward a face");
  limit->fallthrough();
  limit->add_option("model", model_path, "model matrix file")->required();
  limit->add_option("--theta", theta, "base parameter, comma separated (default zeros)")
      ->delimiter(',');
  limit->add_option("--face", face_index, "1-based face index, 0 for the full space");
  limit->add_option("--tol", tol, "convergence and clipping tolerance");

  auto* example = app.add_subcommand("example", "emit a built-in model file");
  example->fallthrough();
  example->add_option("name", example_name, "four-cycle or markov")->required();
  example->add_option("--steps", steps, "markov chain length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  using namespace eef::cli;
  if (kernel->parsed())
    return cmd_kernel(model_path, pretty, std::cout, std::cerr);
  if (hilbert->parsed()) {
    std::optional<unsigned long> bound;
    if (oracle_opt->count()) bound = oracle_bound;
    return cmd_hilbert(model_path, bound, pretty, std::cout, std::cerr);
  }
  if (faces->parsed())
    return cmd_faces(model_path, pretty, std::cout, std::cerr);
  if (check->parsed()) {
    std::optional<std::string> exp;
    if (expect_opt->count()) exp = expect;
    return cmd_check(model_path, density_path, exp, pretty, std::cout, std::cerr);
  }
  if (limit->parsed())
    return cmd_limit(model_path, theta, face_index, tol, pretty, std::cout, std::cerr);
  if (example->parsed())
    return cmd_example(example_name, steps, std::cout, std::cerr);
  return 2;
}
