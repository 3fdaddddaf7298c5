#include "eef/model.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace eef {

void StateSpace::validate() const {
  if (labels.empty()) throw math_error("state space is empty");
  if (mu.size() != labels.size())
    throw math_error("state space: mu length does not match labels");
  for (const Int& w : mu)
    if (w < 1) throw math_error("state space: mu must be >= 1");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw math_error("state space: duplicate label " + l);
}

void ModelMatrix::validate() const {
  states.validate();
  if (a.rows() == 0) throw math_error("model matrix has no rows");
  if (a.cols() != states.size())
    throw math_error("model matrix width does not match the state space");
  if (row_names.size() != a.rows())
    throw math_error("model matrix: row name count mismatch");
  std::unordered_set<std::string> seen;
  for (const auto& n : row_names)
    if (!seen.insert(n).second)
      throw math_error("model matrix: duplicate row name " + n);
}

ModelMatrix ensure_constant_row(const ModelMatrix& m) {
  m.validate();
  std::vector<Int> ones(m.cols(), Int(1));
  if (solve_in_rowspan(ones, m.a).has_value()) return m;
  ModelMatrix out;
  out.states = m.states;
  out.a = IntMatrix(m.rows() + 1, m.cols());
  for (std::size_t x = 0; x < m.cols(); ++x) out.a.at(0, x) = 1;
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t x = 0; x < m.cols(); ++x) out.a.at(j + 1, x) = m.a.at(j, x);
  std::string name = "I";
  while (std::find(m.row_names.begin(), m.row_names.end(), name) != m.row_names.end())
    name += "'";
  out.row_names.push_back(name);
  out.row_names.insert(out.row_names.end(), m.row_names.begin(), m.row_names.end());
  return out;
}

ModelMatrix nonnegative_shift(const ModelMatrix& m) {
  m.validate();
  std::vector<Int> ones(m.cols(), Int(1));
  if (!solve_in_rowspan(ones, m.a).has_value())
    throw math_error("nonnegative_shift: constant not in the row span, shifting would change the model");
  ModelMatrix out = m;
  for (std::size_t j = 0; j < out.rows(); ++j) {
    Int lo = out.a.at(j, 0);
    for (std::size_t x = 1; x < out.cols(); ++x)
      if (out.a.at(j, x) < lo) lo = out.a.at(j, x);
    if (lo < 0)
      for (std::size_t x = 0; x < out.cols(); ++x) out.a.at(j, x) -= lo;
  }
  return out;
}

IntMatrix weighted_rows(const ModelMatrix& m) {
  IntMatrix w(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t x = 0; x < m.cols(); ++x)
      w.at(j, x) = m.a.at(j, x) * m.states.mu[x];
  return w;
}

LatticeBasis kernel_basis(const ModelMatrix& m) {
  m.validate();
  IntMatrix w(m.rows() + 1, m.cols());
  for (std::size_t x = 0; x < m.cols(); ++x) w.at(0, x) = m.states.mu[x];
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t x = 0; x < m.cols(); ++x)
      w.at(j + 1, x) = m.a.at(j, x) * m.states.mu[x];
  return LatticeBasis{integer_kernel(w), true};
}

std::vector<RatVector> confounding_space(const ModelMatrix& m) {
  m.validate();
  const std::size_t n = m.cols();
  const std::size_t rows = m.rows();
  std::vector<RatVector> basis;
  if (n == 1) {
    for (std::size_t j = 0; j < rows; ++j) {
      RatVector e(rows, Rational(0));
      e[j] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  // c^T a constant iff c is orthogonal to every column difference.
  IntMatrix d(n - 1, rows);
  for (std::size_t x = 1; x < n; ++x)
    for (std::size_t j = 0; j < rows; ++j)
      d.at(x - 1, j) = m.a.at(j, x) - m.a.at(j, 0);
  IntMatrix k = integer_kernel(d);
  for (std::size_t i = 0; i < k.cols(); ++i) {
    RatVector c(rows);
    for (std::size_t j = 0; j < rows; ++j) c[j] = Rational(k.at(j, i));
    basis.push_back(std::move(c));
  }
  return basis;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Int parse_int(const std::string& tok, int line_no) {
  try {
    return Int(tok, 10);
  } catch (const std::invalid_argument&) {
    throw parse_error("line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
  }
}

}  // namespace

ModelMatrix read_model(std::istream& in) {
  std::vector<std::string> labels, row_names;
  std::vector<Int> mu;
  std::string line;
  int line_no = 0;
  long m = -1, n = -1;
  std::vector<std::vector<Int>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    trimmed = trimmed.substr(first);
    if (trimmed[0] == '#') {
      auto header = [&](const std::string& key) -> std::optional<std::string> {
        std::string prefix = "#" + key + ":";
        std::string spaced = "# " + key + ":";
        if (trimmed.rfind(prefix, 0) == 0) return trimmed.substr(prefix.size());
        if (trimmed.rfind(spaced, 0) == 0) return trimmed.substr(spaced.size());
        return std::nullopt;
      };
      if (auto v = header("labels")) {
        labels = split_ws(*v);
      } else if (auto v = header("rownames")) {
        row_names = split_ws(*v);
      } else if (auto v = header("mu")) {
        mu.clear();
        for (const auto& tok : split_ws(*v)) mu.push_back(parse_int(tok, line_no));
      }
      continue;
    }
    auto toks = split_ws(trimmed);
    if (m < 0) {
      if (toks.size() != 2)
        throw parse_error("line " + std::to_string(line_no) + ": expected 'm n'");
      try {
        m = std::stol(toks[0]);
        n = std::stol(toks[1]);
      } catch (const std::exception&) {
        throw parse_error("line " + std::to_string(line_no) + ": expected 'm n'");
      }
      if (m < 1 || n < 1)
        throw parse_error("line " + std::to_string(line_no) + ": dimensions must be positive");
      continue;
    }
    if (static_cast<long>(rows.size()) == m)
      throw parse_error("line " + std::to_string(line_no) + ": extra row beyond the declared " +
                        std::to_string(m));
    if (static_cast<long>(toks.size()) != n)
      throw parse_error("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                        " entries, got " + std::to_string(toks.size()));
    std::vector<Int> row;
    row.reserve(n);
    for (const auto& tok : toks) row.push_back(parse_int(tok, line_no));
    rows.push_back(std::move(row));
  }
  if (m < 0) throw parse_error("missing 'm n' header line");
  if (static_cast<long>(rows.size()) != m)
    throw parse_error("expected " + std::to_string(m) + " matrix rows, got " +
                      std::to_string(rows.size()));
  ModelMatrix model;
  if (labels.empty())
    for (long x = 0; x < n; ++x) labels.push_back("x" + std::to_string(x + 1));
  if (static_cast<long>(labels.size()) != n)
    throw parse_error("labels count does not match n");
  if (row_names.empty())
    for (long j = 0; j < m; ++j) row_names.push_back("T" + std::to_string(j + 1));
  if (static_cast<long>(row_names.size()) != m)
    throw parse_error("rownames count does not match m");
  if (mu.empty()) mu.assign(n, Int(1));
  if (static_cast<long>(mu.size()) != n)
    throw parse_error("mu count does not match n");
  model.states = StateSpace{std::move(labels), std::move(mu)};
  model.row_names = std::move(row_names);
  model.a = IntMatrix(m, n);
  for (long j = 0; j < m; ++j)
    for (long x = 0; x < n; ++x) model.a.at(j, x) = rows[j][x];
  try {
    model.validate();
  } catch (const math_error& e) {
    throw parse_error(e.what());
  }
  return model;
}

ModelMatrix read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open model file: " + path);
  return read_model(in);
}

void write_model(std::ostream& out, const ModelMatrix& m) {
  out << "# labels:";
  for (const auto& l : m.states.labels) out << ' ' << l;
  out << '\n' << "# rownames:";
  for (const auto& r : m.row_names) out << ' ' << r;
  out << '\n';
  bool unit_mu = true;
  for (const Int& w : m.states.mu)
    if (w != 1) unit_mu = false;
  if (!unit_mu) {
    out << "# mu:";
    for (const Int& w : m.states.mu) out << ' ' << w.get_str();
    out << '\n';
  }
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t j = 0; j < m.rows(); ++j) {
    for (std::size_t x = 0; x < m.cols(); ++x) {
      if (x) out << ' ';
      out << m.a.at(j, x).get_str();
    }
    out << '\n';
  }
}

}  // namespace eef
