#include "eef/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "eef/models.hpp"
#include "eef/reports.hpp"

namespace eef::cli {

namespace {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

RatVector read_density_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open density file: " + path);
  RatVector values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') continue;
    auto last = trimmed.find_last_not_of(" \t\r");
    trimmed = trimmed.substr(first, last - first + 1);
    try {
      values.push_back(parse_rational(trimmed));
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (values.empty()) throw parse_error("density file is empty: " + path);
  return values;
}

}  // namespace

int cmd_kernel(const std::string& model_path, bool pretty, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const ModelMatrix m = read_model_file(model_path);
    const LatticeBasis k = kernel_basis(m);
    const auto conf = confounding_space(m);
    out << (pretty ? kernel_report_pretty(m, k, conf) : kernel_report_json(m, k, conf));
    return 0;
  });
}

int cmd_hilbert(const std::string& model_path,
                std::optional<unsigned long> oracle_bound, bool pretty,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ModelMatrix m = read_model_file(model_path);
    const LatticeBasis k = kernel_basis(m);
    const HilbertBasisSet basis = hilbert_basis(k);
    const auto redundant = redundant_elements(basis);
    std::optional<bool> agrees;
    if (oracle_bound) {
      const HilbertBasisSet oracle = brute_force_basis(k, *oracle_bound);
      agrees = oracle.vectors == basis.vectors;
    }
    if (pretty) {
      out << basis_pretty(basis, m.states, redundant);
      if (agrees) out << "oracle agrees: " << (*agrees ? "yes" : "no") << '\n';
    } else {
      out << basis_json(basis, redundant, agrees);
    }
    if (agrees && !*agrees) {
      err << "error: oracle disagrees with the completion search\n";
      return 1;
    }
    return 0;
  });
}

int cmd_faces(const std::string& model_path, bool pretty, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const ModelMatrix m = read_model_file(model_path);
    const LatticeBasis k = kernel_basis(m);
    const HilbertBasisSet basis = hilbert_basis(k);
    const auto faces = exposed_sets_from_basis(basis, m);
    out << (pretty ? faces_pretty(m, basis, faces) : faces_json(m, basis, faces));
    return 0;
  });
}

int cmd_check(const std::string& model_path, const std::string& density_path,
              const std::optional<std::string>& expect, bool pretty,
              std::ostream& out, std::ostream& err) {
  if (expect && *expect != "interior" && *expect != "border" && *expect != "outside") {
    err << "error: --expect must be interior, border, or outside\n";
    return 2;
  }
  return guarded(err, [&] {
    const ModelMatrix m = read_model_file(model_path);
    const RatVector values = read_density_file(density_path);
    if (values.size() != m.cols())
      throw parse_error("density has " + std::to_string(values.size()) +
                        " values, the model has " + std::to_string(m.cols()) +
                        " states");
    const Density q = Density::exact(m.states, values);
    const HilbertBasisSet basis = hilbert_basis(kernel_basis(m));
    const ClosureVerdict verdict = extended_membership(q, m, basis);
    out << (pretty ? verdict_pretty(m, verdict) : verdict_json(m, verdict));
    if (expect) {
      const char* kind = verdict.kind == Closure::interior ? "interior"
                         : verdict.kind == Closure::border ? "border"
                                                           : "outside";
      if (*expect != kind) {
        err << "error: expected " << *expect << ", got " << kind << '\n';
        return 1;
      }
    }
    return 0;
  });
}

int cmd_limit(const std::string& model_path, const std::vector<double>& theta,
              long face_index, double tol, bool pretty, std::ostream& out,
              std::ostream& err) {
  if (!(tol > 0)) {
    err << "error: --tol must be positive\n";
    return 2;
  }
  return guarded(err, [&] {
    const ModelMatrix m = read_model_file(model_path);
    std::vector<double> th = theta;
    if (th.empty()) th.assign(m.rows(), 0.0);
    if (th.size() != m.rows())
      throw parse_error("theta has " + std::to_string(th.size()) +
                        " entries, the model has " + std::to_string(m.rows()) +
                        " rows");
    ExposedSet face;
    if (face_index == 0) {
      const ModelMatrix ma = ensure_constant_row(m);
      for (std::size_t x = 0; x < m.cols(); ++x) face.states.push_back(x);
      face.certificate.assign(ma.rows(), Int(0));
    } else {
      const HilbertBasisSet basis = hilbert_basis(kernel_basis(m));
      const auto faces = exposed_sets_from_basis(basis, m);
      if (face_index < 0 || static_cast<std::size_t>(face_index) > faces.size())
        throw parse_error("face index out of range: have " +
                          std::to_string(faces.size()) + " proper faces");
      face = faces[face_index - 1];
    }
    const GibbsPath path = make_gibbs_path(face, ThetaParam{th});
    const LimitResult result = limit_of_path(m, path, tol);
    out << (pretty ? limit_pretty(m, face, result) : limit_json(m, face, result));
    return 0;
  });
}

int cmd_example(const std::string& name, int steps, std::ostream& out,
                std::ostream& err) {
  if (name == "four-cycle") {
    write_model(out, four_cycle_model());
    return 0;
  }
  if (name == "markov") {
    if (steps < 1 || steps > 12) {
      err << "error: markov requires --steps between 1 and 12\n";
      return 2;
    }
    write_model(out, markov_chain_model(steps));
    return 0;
  }
  err << "error: unknown example '" << name << "' (try four-cycle or markov)\n";
  return 2;
}

}  // namespace eef::cli
