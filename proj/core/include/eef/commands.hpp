#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace eef::cli {

// Subcommand bodies shared by the binary and the tests. Exit codes:
// 0 success, 1 mathematical failure, 2 usage or parse failure.

int cmd_kernel(const std::string& model_path, bool pretty, std::ostream& out,
               std::ostream& err);

int cmd_hilbert(const std::string& model_path,
                std::optional<unsigned long> oracle_bound, bool pretty,
                std::ostream& out, std::ostream& err);

int cmd_faces(const std::string& model_path, bool pretty, std::ostream& out,
              std::ostream& err);

int cmd_check(const std::string& model_path, const std::string& density_path,
              const std::optional<std::string>& expect, bool pretty,
              std::ostream& out, std::ostream& err);

int cmd_limit(const std::string& model_path, const std::vector<double>& theta,
              long face_index, double tol, bool pretty, std::ostream& out,
              std::ostream& err);

int cmd_example(const std::string& name, int steps, std::ostream& out,
                std::ostream& err);

}  // namespace eef::cli
