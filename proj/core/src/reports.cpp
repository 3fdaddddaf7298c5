#include "eef/reports.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace eef {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_int(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ordered_json json_int_vector(const std::vector<Int>& v) {
  ordered_json a = ordered_json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

ordered_json json_rat_vector(const RatVector& v) {
  ordered_json a = ordered_json::array();
  for (const Rational& x : v) a.push_back(to_string(x));
  return a;
}

ordered_json face_object(const ModelMatrix& m, const ExposedSet& face) {
  ordered_json f;
  ordered_json labels = ordered_json::array();
  for (std::size_t x : face.states) labels.push_back(m.states.labels.at(x));
  f["states"] = std::move(labels);
  f["certificate"] = json_int_vector(face.certificate);
  ordered_json gens = ordered_json::array();
  for (std::size_t g : face.generators) gens.push_back(g + 1);
  f["generators"] = std::move(gens);
  return f;
}

ordered_json density_object(const Density& d) {
  ordered_json o;
  ordered_json labels = ordered_json::array();
  for (const auto& l : d.states().labels) labels.push_back(l);
  o["labels"] = std::move(labels);
  ordered_json values = ordered_json::array();
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (d.is_exact())
      values.push_back(to_string(d.exact_value(x)));
    else
      values.push_back(d.value(x));
  }
  o["values"] = std::move(values);
  return o;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Fixed-width table: first column left-aligned, the rest right-aligned.
std::string table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      if (c == 0)
        out << std::left << std::setw(width[c]) << row[c] << std::right;
      else
        out << std::setw(width[c]) << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string combination(const std::vector<Int>& coeff,
                        const std::vector<std::string>& names) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    if (coeff[j] == 0) continue;
    if (coeff[j] > 0 && !first) out << " + ";
    if (coeff[j] < 0) out << (first ? "-" : " - ");
    Int a = abs(coeff[j]);
    if (a != 1) out << a.get_str() << "*";
    out << names[j];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

}  // namespace

std::string kernel_report_json(const ModelMatrix& m, const LatticeBasis& k,
                               const std::vector<RatVector>& confounding) {
  ordered_json j;
  j["n"] = m.cols();
  j["m"] = m.rows();
  ordered_json labels = ordered_json::array();
  for (const auto& l : m.states.labels) labels.push_back(l);
  j["labels"] = std::move(labels);
  j["rank"] = m.cols() - k.dimension();
  ordered_json cols = ordered_json::array();
  for (std::size_t c = 0; c < k.dimension(); ++c) {
    ordered_json col = ordered_json::array();
    for (std::size_t x = 0; x < k.n_states(); ++x) col.push_back(json_int(k.k.at(x, c)));
    cols.push_back(std::move(col));
  }
  j["kernel"] = std::move(cols);
  ordered_json conf = ordered_json::array();
  for (const auto& c : confounding) conf.push_back(json_rat_vector(c));
  j["confounding"] = std::move(conf);
  return dump(j);
}

std::string kernel_report_pretty(const ModelMatrix& m, const LatticeBasis& k,
                                 const std::vector<RatVector>& confounding) {
  std::ostringstream out;
  out << "model: " << m.rows() << " rows, " << m.cols() << " states\n";
  out << "rank: " << (m.cols() - k.dimension()) << "\n";
  out << "kernel dimension: " << k.dimension() << "\n";
  if (k.dimension() > 0) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"state"};
    for (std::size_t c = 0; c < k.dimension(); ++c)
      head.push_back("w" + std::to_string(c + 1));
    cells.push_back(std::move(head));
    for (std::size_t x = 0; x < k.n_states(); ++x) {
      std::vector<std::string> row{m.states.labels[x]};
      for (std::size_t c = 0; c < k.dimension(); ++c)
        row.push_back(k.k.at(x, c).get_str());
      cells.push_back(std::move(row));
    }
    out << table(cells);
  }
  out << "confounding dimension: " << confounding.size() << "\n";
  for (std::size_t i = 0; i < confounding.size(); ++i) {
    out << "c" << (i + 1) << ":";
    for (const Rational& v : confounding[i]) out << ' ' << to_string(v);
    out << '\n';
  }
  return out.str();
}

std::string basis_json(const HilbertBasisSet& basis,
                       const std::vector<std::size_t>& redundant,
                       std::optional<bool> oracle_agrees) {
  ordered_json j;
  j["n"] = basis.n_states();
  ordered_json vecs = ordered_json::array();
  for (const auto& v : basis.vectors) vecs.push_back(json_int_vector(v));
  j["vectors"] = std::move(vecs);
  ordered_json red = ordered_json::array();
  for (std::size_t i : redundant) red.push_back(i + 1);
  j["redundant"] = std::move(red);
  if (oracle_agrees) j["oracle_agrees"] = *oracle_agrees;
  return dump(j);
}

std::string basis_pretty(const HilbertBasisSet& basis, const StateSpace& states,
                         const std::vector<std::size_t>& redundant) {
  std::ostringstream out;
  out << "hilbert basis: " << basis.size() << " elements over " << basis.n_states()
      << " states\n";
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"state"};
  for (std::size_t j = 0; j < basis.size(); ++j)
    head.push_back("b" + std::to_string(j + 1));
  cells.push_back(std::move(head));
  for (std::size_t x = 0; x < basis.n_states(); ++x) {
    std::vector<std::string> row{states.labels.at(x)};
    for (std::size_t j = 0; j < basis.size(); ++j)
      row.push_back(basis.vectors[j][x].get_str());
    cells.push_back(std::move(row));
  }
  out << table(cells);
  out << "redundant:";
  if (redundant.empty()) out << " none";
  for (std::size_t i : redundant) out << " b" << (i + 1);
  out << '\n';
  return out.str();
}

std::string faces_json(const ModelMatrix& m, const HilbertBasisSet& basis,
                       const std::vector<ExposedSet>& faces) {
  const ModelMatrix ma = ensure_constant_row(m);
  ordered_json j;
  ordered_json rows = ordered_json::array();
  for (const auto& r : ma.row_names) rows.push_back(r);
  j["rows"] = std::move(rows);
  ordered_json fs = ordered_json::array();
  for (const auto& f : faces) fs.push_back(face_object(m, f));
  j["faces"] = std::move(fs);
  ordered_json exps = ordered_json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto coeff = face_indicator_expansion(m, basis.vectors[i]);
    ordered_json e;
    e["element"] = i + 1;
    if (coeff)
      e["coefficients"] = json_rat_vector(*coeff);
    else
      e["coefficients"] = nullptr;
    exps.push_back(std::move(e));
  }
  j["expansions"] = std::move(exps);
  return dump(j);
}

std::string faces_pretty(const ModelMatrix& m, const HilbertBasisSet& basis,
                         const std::vector<ExposedSet>& faces) {
  const ModelMatrix ma = ensure_constant_row(m);
  std::ostringstream out;
  out << "exposed sets: " << faces.size() << "\n";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    out << "S" << (f.generators.size() == 1 ? std::to_string(f.generators[0] + 1)
                                            : std::to_string(i + 1))
        << " (" << f.states.size() << " states): {";
    for (std::size_t k = 0; k < f.states.size(); ++k) {
      if (k) out << ", ";
      out << m.states.labels[f.states[k]];
    }
    out << "}\n  certificate: " << combination(f.certificate, ma.row_names) << "\n";
  }
  out << "indicator expansions F_j = 1 - b_j over (";
  for (std::size_t r = 0; r < ma.row_names.size(); ++r) {
    if (r) out << ", ";
    out << ma.row_names[r];
  }
  out << "):\n";
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"row"};
  for (std::size_t j = 0; j < basis.size(); ++j)
    head.push_back("F" + std::to_string(j + 1));
  cells.push_back(std::move(head));
  std::vector<std::optional<RatVector>> coeffs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    coeffs.push_back(face_indicator_expansion(m, basis.vectors[j]));
  for (std::size_t r = 0; r < ma.row_names.size(); ++r) {
    std::vector<std::string> row{ma.row_names[r]};
    for (std::size_t j = 0; j < basis.size(); ++j)
      row.push_back(coeffs[j] ? to_string((*coeffs[j])[r]) : "?");
    cells.push_back(std::move(row));
  }
  out << table(cells);
  return out.str();
}

namespace {

const char* kind_name(Closure kind) {
  switch (kind) {
    case Closure::interior: return "interior";
    case Closure::border: return "border";
    default: return "outside";
  }
}

}  // namespace

std::string verdict_json(const ModelMatrix& m, const ClosureVerdict& verdict) {
  ordered_json j;
  j["kind"] = kind_name(verdict.kind);
  if (verdict.face)
    j["face"] = face_object(m, *verdict.face);
  else
    j["face"] = nullptr;
  if (verdict.theta) {
    ordered_json t = ordered_json::array();
    for (double v : verdict.theta->coords) t.push_back(v);
    j["theta"] = std::move(t);
  } else {
    j["theta"] = nullptr;
  }
  return dump(j);
}

std::string verdict_pretty(const ModelMatrix& m, const ClosureVerdict& verdict) {
  std::ostringstream out;
  out << "verdict: " << kind_name(verdict.kind) << "\n";
  if (verdict.face) {
    out << "face: {";
    for (std::size_t k = 0; k < verdict.face->states.size(); ++k) {
      if (k) out << ", ";
      out << m.states.labels[verdict.face->states[k]];
    }
    out << "}\n";
    const ModelMatrix ma = ensure_constant_row(m);
    out << "certificate: " << combination(verdict.face->certificate, ma.row_names)
        << "\n";
  }
  if (verdict.theta) {
    out << "theta:";
    for (double v : verdict.theta->coords) out << ' ' << format_double(v);
    out << "\n";
  }
  return out.str();
}

std::string limit_json(const ModelMatrix& m, const ExposedSet& face,
                       const LimitResult& result) {
  ordered_json j;
  j["face"] = face_object(m, face);
  j["beta_stop"] = result.beta_stop;
  j["tv_gap"] = result.tv_gap;
  j["density"] = density_object(result.density);
  return dump(j);
}

std::string limit_pretty(const ModelMatrix& m, const ExposedSet& face,
                         const LimitResult& result) {
  std::ostringstream out;
  out << "face: {";
  for (std::size_t k = 0; k < face.states.size(); ++k) {
    if (k) out << ", ";
    out << m.states.labels[face.states[k]];
  }
  out << "}\n";
  out << "stopped at beta = " << format_double(result.beta_stop)
      << ", tv gap = " << format_double(result.tv_gap) << "\n";
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"state", "p"});
  for (std::size_t x = 0; x < result.density.size(); ++x)
    cells.push_back({m.states.labels[x], format_double(result.density.value(x))});
  out << table(cells);
  return out.str();
}

std::string density_json(const Density& d) { return dump(density_object(d)); }

}  // namespace eef
