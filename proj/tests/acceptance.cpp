// Acceptance gate: one pass/fail line per criterion, with detail indented
// below it. An optional argument selects a single criterion by number.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "eef/border.hpp"
#include "eef/models.hpp"
#include "fourcycle_tables.hpp"

using namespace eef;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Int> table_column(int j) {
  std::vector<Int> b(fourcycle::kStates);
  for (int x = 0; x < fourcycle::kStates; ++x) b[x] = fourcycle::kB[x][j];
  return b;
}

std::set<std::vector<long>> as_long_set(const std::vector<std::vector<Int>>& vs) {
  std::set<std::vector<long>> out;
  for (const auto& v : vs) {
    std::vector<long> w;
    w.reserve(v.size());
    for (const auto& e : v) w.push_back(e.get_si());
    out.insert(std::move(w));
  }
  return out;
}

std::size_t rat_rank(std::vector<RatVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool rat_in_span(const RatVector& v, const std::vector<RatVector>& rows) {
  auto ext = rows;
  ext.push_back(v);
  return rat_rank(ext) == rat_rank(rows);
}

// 1. The four-cycle kernel monoid has exactly the 24 known zero-one
// generators, found in under ten seconds.
bool criterion1(std::ostream& log) {
  auto start = Clock::now();
  auto basis = hilbert_basis(kernel_basis(four_cycle_model()));
  double elapsed = seconds_since(start);
  log << "found " << basis.size() << " generators in " << elapsed << " s\n";
  bool ok = elapsed < 10.0;
  if (basis.size() != 24) ok = false;
  for (const auto& b : basis.vectors)
    for (const auto& e : b)
      if (e != 0 && e != 1) {
        log << "non-binary entry found\n";
        ok = false;
      }
  std::set<std::vector<long>> expected;
  for (int j = 0; j < fourcycle::kBasis; ++j) {
    std::vector<long> col(fourcycle::kStates);
    for (int x = 0; x < fourcycle::kStates; ++x) col[x] = fourcycle::kB[x][j];
    expected.insert(std::move(col));
  }
  if (as_long_set(basis.vectors) != expected) {
    log << "generator set differs from the reference table\n";
    ok = false;
  }
  return ok;
}

// 2. The expansion of each complement 1 - b_j over the model rows matches the
// reference coefficient table exactly.
bool criterion2(std::ostream& log) {
  auto m = four_cycle_model();
  bool ok = true;
  for (int j = 0; j < fourcycle::kBasis; ++j) {
    auto coeff = face_indicator_expansion(m, table_column(j));
    if (!coeff || coeff->size() != fourcycle::kRows) {
      log << "column " << (j + 1) << ": no expansion in the row span\n";
      ok = false;
      continue;
    }
    for (int r = 0; r < fourcycle::kRows; ++r)
      if ((*coeff)[r] != make_rational(fourcycle::kF16[r][j], 16)) {
        log << "column " << (j + 1) << ", row " << r << ": got "
            << to_string((*coeff)[r]) << ", want "
            << to_string(make_rational(fourcycle::kF16[r][j], 16)) << "\n";
        ok = false;
      }
  }
  // Anchor: first reference column is 3/4 - 1/4 D + 1/4 C + 1/4 DC.
  auto anchor = face_indicator_expansion(m, table_column(0));
  RatVector want = {make_rational(3, 4), make_rational(-1, 4), make_rational(1, 4),
                    Rational(0),         Rational(0),          Rational(0),
                    Rational(0),         make_rational(1, 4),  Rational(0)};
  if (!anchor || *anchor != want) {
    log << "anchor expansion differs\n";
    ok = false;
  }
  if (ok) log << "all 24 expansions match the reference table\n";
  return ok;
}

// 3. No generator of the four-cycle monoid is redundant.
bool criterion3(std::ostream& log) {
  auto basis = hilbert_basis(kernel_basis(four_cycle_model()));
  auto red = redundant_elements(basis);
  log << "redundant elements: " << red.size() << "\n";
  return red.empty();
}

// 4. The confounding space of the n-step chain equals span{(1,1,0,0,0,0),
// (0,0,1,1,1,1)} for n = 1..5, computed in under five seconds at n = 5,
// and contains (n,n,1,1,1,1).
bool criterion4(std::ostream& log) {
  const RatVector c1 = {Rational(1), Rational(1), Rational(0),
                        Rational(0), Rational(0), Rational(0)};
  const RatVector c2 = {Rational(0), Rational(0), Rational(1),
                        Rational(1), Rational(1), Rational(1)};
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    auto start = Clock::now();
    auto conf = confounding_space(markov_chain_model(n));
    double elapsed = seconds_since(start);
    bool match = conf.size() == 2 && conf[0] == c1 && conf[1] == c2;
    RatVector probe = {Rational(n), Rational(n), Rational(1),
                       Rational(1), Rational(1), Rational(1)};
    bool spanned = rat_in_span(probe, conf);
    log << "n=" << n << ": dimension " << conf.size() << ", basis "
        << (match ? "matches" : "differs") << ", (n,n,1,1,1,1) "
        << (spanned ? "in span" : "outside") << ", " << elapsed << " s\n";
    if (n == 5 && elapsed >= 5.0) ok = false;
    if (!match || !spanned) ok = false;
    if (n == 1 && !match && conf.size() == 3) {
      log << "  at n=1 the single transition leaves three free directions\n";
      log << "  (N01 and N10 each appear in one trajectory), so the\n";
      log << "  confounding space is 3-dimensional and the expected\n";
      log << "  2-dimensional basis cannot be recovered there\n";
    }
  }
  return ok;
}

// 5. The transition counts of every trajectory satisfy the four linear
// identities in (x0, sum of interior states, xn, sum of adjacent products).
bool criterion5(std::ostream& log) {
  bool ok = true;
  long checked = 0;
  for (int n = 1; n <= 6; ++n) {
    auto m = markov_chain_model(n);
    for (std::size_t x = 0; x < m.cols(); ++x) {
      const std::string& t = m.states.labels[x];
      long x0 = t[0] - '0', xn = t[n] - '0', mid = 0, prod = 0;
      for (int i = 1; i < n; ++i) mid += t[i] - '0';
      for (int i = 1; i <= n; ++i) prod += (t[i - 1] - '0') * (t[i] - '0');
      if (m.a.at(2, x) != n - x0 - 2 * mid - xn + prod ||
          m.a.at(3, x) != mid + xn - prod || m.a.at(4, x) != x0 + mid - prod ||
          m.a.at(5, x) != prod) {
        log << "identity fails for trajectory " << t << "\n";
        ok = false;
      }
      ++checked;
    }
  }
  log << "checked " << checked << " trajectories for n = 1..6\n";
  return ok;
}

// 6. On random models the completion search agrees with the brute-force
// enumeration up to one past the largest entry it produced.
bool criterion6(std::ostream& log) {
  std::mt19937_64 rng(606060);
  std::uniform_int_distribution<std::size_t> nrows(1, 4), nstates(1, 7);
  std::uniform_int_distribution<long> entry(0, 2);
  bool ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    ModelMatrix m;
    const std::size_t n = nstates(rng), r = nrows(rng);
    m.a = IntMatrix(r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t x = 0; x < n; ++x) m.a.at(i, x) = entry(rng);
    m.states.mu.assign(n, Int(1));
    for (std::size_t x = 0; x < n; ++x)
      m.states.labels.push_back("s" + std::to_string(x));
    for (std::size_t i = 0; i < r; ++i)
      m.row_names.push_back("T" + std::to_string(i));

    auto k = kernel_basis(m);
    auto fast = hilbert_basis(k);
    unsigned long bound = 1;
    for (const auto& b : fast.vectors)
      for (const auto& e : b)
        if (e.get_ui() + 1 > bound) bound = e.get_ui() + 1;
    auto slow = brute_force_basis(k, bound);
    if (fast.vectors != slow.vectors) {
      log << "trial " << trial << ": disagreement on a " << r << "x" << n
          << " model\n";
      ok = false;
    }
  }
  if (ok) log << "50 random models agree with the brute-force oracle\n";
  return ok;
}

// 7. Monomial densities with zero-one parameters round-trip through the
// membership decision: full support lands interior, a partial pattern lands
// on the border with face equal to the common zero set.
bool criterion7(std::ostream& log) {
  bool ok = true;
  long tested = 0, skipped = 0;

  auto run_pattern = [&](const ModelMatrix& m, const HilbertBasisSet& basis,
                         const std::vector<int>& pattern) {
    std::vector<bool> alive(m.cols(), true);
    bool all_one = true;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (pattern[j]) continue;
      all_one = false;
      for (std::size_t x = 0; x < m.cols(); ++x)
        if (basis.vectors[j][x] != 0) alive[x] = false;
    }
    std::vector<std::size_t> survivors;
    for (std::size_t x = 0; x < m.cols(); ++x)
      if (alive[x]) survivors.push_back(x);
    if (survivors.empty()) {
      ++skipped;
      return;
    }
    RatVector zeta(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) zeta[j] = pattern[j];
    auto d = b_model_density(basis, m.states, ZetaParam{zeta});
    auto v = extended_membership(d, m, basis);
    ++tested;
    if (all_one) {
      if (v.kind != Closure::interior) {
        log << "full-support pattern not interior\n";
        ok = false;
      }
      return;
    }
    if (v.kind != Closure::border || !v.face || v.face->states != survivors) {
      log << "partial pattern did not land on the expected face\n";
      ok = false;
    }
  };

  ModelMatrix ind;
  ind.states.labels = {"00", "01", "10", "11"};
  ind.states.mu.assign(4, Int(1));
  ind.row_names = {"R", "C"};
  ind.a = IntMatrix{{1, 1, 0, 0}, {1, 0, 1, 0}};
  auto ind_basis = hilbert_basis(kernel_basis(ind));
  for (int mask = 0; mask < (1 << ind_basis.size()); ++mask) {
    std::vector<int> pattern(ind_basis.size());
    for (std::size_t j = 0; j < ind_basis.size(); ++j) pattern[j] = (mask >> j) & 1;
    run_pattern(ind, ind_basis, pattern);
  }

  auto fc = four_cycle_model();
  auto fc_basis = hilbert_basis(kernel_basis(fc));
  std::mt19937_64 rng(707070);
  std::uniform_int_distribution<std::size_t> zero_count(0, 3);
  std::uniform_int_distribution<std::size_t> position(0, fc_basis.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> pattern(fc_basis.size(), 1);
    std::size_t zeros = zero_count(rng);
    for (std::size_t z = 0; z < zeros; ++z) pattern[position(rng)] = 0;
    run_pattern(fc, fc_basis, pattern);
  }
  log << "tested " << tested << " patterns (" << skipped
      << " skipped for empty support)\n";
  return ok;
}

// 8. From the uniform base point, the limit along each four-cycle face's path
// is the uniform density on that face, reached in under a second.
bool criterion8(std::ostream& log) {
  auto m = four_cycle_model();
  auto basis = hilbert_basis(kernel_basis(m));
  auto faces = exposed_sets_from_basis(basis, m);
  bool ok = faces.size() == 24;
  double worst_tv = 0, worst_time = 0;
  for (const auto& face : faces) {
    auto start = Clock::now();
    auto path = make_gibbs_path(face, ThetaParam{std::vector<double>(9, 0.0)});
    auto r = limit_of_path(m, path, 1e-9);
    double elapsed = seconds_since(start);
    std::vector<double> target(m.cols(), 0.0);
    for (std::size_t x : face.states) target[x] = 1.0 / double(face.states.size());
    double tv = tv_distance(r.density, Density::floating(m.states, target));
    worst_tv = std::max(worst_tv, tv);
    worst_time = std::max(worst_time, elapsed);
    if (tv >= 1e-8 || elapsed >= 1.0) ok = false;
  }
  log << "24 faces, worst tv " << worst_tv << ", worst time " << worst_time
      << " s\n";
  return ok;
}

// 9. The implicit binomial identities hold exactly for random positive
// rational monomial densities.
bool criterion9(std::ostream& log) {
  std::mt19937_64 rng(909090);
  std::uniform_int_distribution<long> pick(1, 9);
  bool ok = true;
  ModelMatrix ind;
  ind.states.labels = {"00", "01", "10", "11"};
  ind.states.mu.assign(4, Int(1));
  ind.row_names = {"R", "C"};
  ind.a = IntMatrix{{1, 1, 0, 0}, {1, 0, 1, 0}};
  for (const auto& m : {ind, four_cycle_model()}) {
    auto basis = hilbert_basis(kernel_basis(m));
    for (int trial = 0; trial < 100; ++trial) {
      RatVector zeta(basis.size());
      for (auto& z : zeta) z = make_rational(pick(rng), pick(rng));
      auto d = b_model_density(basis, m.states, ZetaParam{zeta});
      if (!check_implicit(d, basis.kernel)) {
        log << "identity failed on a " << m.cols() << "-state model, trial "
            << trial << "\n";
        ok = false;
      }
    }
  }
  if (ok) log << "200 random monomial densities satisfy the identities\n";
  return ok;
}

struct Entry {
  int id;
  bool (*fn)(std::ostream&);
};

}  // namespace

int main(int argc, char** argv) {
  const Entry entries[] = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                           {4, criterion4}, {5, criterion5}, {6, criterion6},
                           {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 9) {
      std::cerr << "usage: " << argv[0] << " [criterion 1-9]\n";
      return 2;
    }
  }
  bool all_ok = true;
  for (const auto& e : entries) {
    if (only && e.id != only) continue;
    std::ostringstream detail;
    bool ok;
    try {
      ok = e.fn(detail);
    } catch (const std::exception& ex) {
      ok = false;
      detail << "exception: " << ex.what() << "\n";
    }
    std::cout << "criterion " << e.id << ": " << (ok ? "PASS" : "FAIL") << "\n";
    std::istringstream lines(detail.str());
    std::string line;
    while (std::getline(lines, line)) std::cout << "  " << line << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
