#include <sstream>

#include "doctest.h"
#include "eef/model.hpp"
#include "eef/models.hpp"
#include "helpers.hpp"

using namespace eef;
using namespace testutil;

namespace {

IntMatrix kernel_row_hnf(const LatticeBasis& b) {
  return hermite_normal_form(b.k.transposed()).h;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("read_model parses headers, dimensions and entries") {
  std::istringstream in(
      "# labels: aa ab ba bb\n"
      "# rownames: R C\n"
      "# mu: 1 2 1 2\n"
      "2 4\n"
      "1 1 0 0\n"
      "1 0 1 0\n");
  auto m = read_model(in);
  CHECK(m.states.labels == std::vector<std::string>{"aa", "ab", "ba", "bb"});
  CHECK(m.states.mu[1] == 2);
  CHECK(m.row_names == std::vector<std::string>{"R", "C"});
  CHECK(m.a == IntMatrix{{1, 1, 0, 0}, {1, 0, 1, 0}});
}

TEST_CASE("read_model fills defaults when headers are absent") {
  std::istringstream in("1 3\n0 1 2\n");
  auto m = read_model(in);
  CHECK(m.states.labels == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(m.row_names == std::vector<std::string>{"T1"});
  for (const auto& w : m.states.mu) CHECK(w == 1);
}

TEST_CASE("read_model reports the offending line") {
  auto expect_mention = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      read_model(in);
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_mention("2 2\n1 1\n1 x\n", "3");
  expect_mention("2 2\n1 1 1\n1 0\n", "2");
  expect_mention("0 2\n", "1");
  expect_mention("", "missing 'm n'");
  expect_mention("2 2\n1 1\n", "expected 2 matrix rows");
}

TEST_CASE("read_model rejects duplicate labels and short mu") {
  std::istringstream dup(
      "# labels: a a\n"
      "1 2\n"
      "1 0\n");
  CHECK_THROWS_AS(read_model(dup), parse_error);
  std::istringstream shortmu(
      "# mu: 1\n"
      "1 2\n"
      "1 0\n");
  CHECK_THROWS_AS(read_model(shortmu), parse_error);
}

TEST_CASE("write_model then read_model round trips") {
  for (const auto& m : {four_cycle_model(), markov_chain_model(2), independence_model()}) {
    std::ostringstream out;
    write_model(out, m);
    std::istringstream in(out.str());
    auto back = read_model(in);
    CHECK(back.a == m.a);
    CHECK(back.states.labels == m.states.labels);
    CHECK(back.states.mu == m.states.mu);
    CHECK(back.row_names == m.row_names);
  }
}

TEST_CASE("ensure_constant_row prepends only when needed") {
  auto ind = independence_model();
  auto with = ensure_constant_row(ind);
  REQUIRE(with.rows() == 3);
  CHECK(with.row_names[0] == "I");
  for (std::size_t x = 0; x < 4; ++x) CHECK(with.a.at(0, x) == 1);
  // Idempotent: the ones row is now in the span.
  auto again = ensure_constant_row(with);
  CHECK(again.a == with.a);

  auto fc = four_cycle_model();
  CHECK(ensure_constant_row(fc).a == fc.a);
}

TEST_CASE("ensure_constant_row avoids a name collision") {
  auto m = independence_model();
  m.row_names[0] = "I";
  auto with = ensure_constant_row(m);
  CHECK(with.row_names[0] != with.row_names[1]);
}

TEST_CASE("nonnegative_shift clears negative entries, kernel unchanged") {
  auto fc = four_cycle_model();
  auto shifted = nonnegative_shift(fc);
  for (std::size_t i = 0; i < shifted.rows(); ++i)
    for (std::size_t x = 0; x < shifted.cols(); ++x) CHECK(shifted.a.at(i, x) >= 0);
  CHECK(kernel_row_hnf(kernel_basis(fc)) == kernel_row_hnf(kernel_basis(shifted)));
}

TEST_CASE("nonnegative_shift requires the constant in the row span") {
  ModelMatrix m;
  m.states.labels = {"a", "b"};
  m.states.mu.assign(2, Int(1));
  m.row_names = {"T"};
  m.a = IntMatrix{{1, -1}};
  CHECK_THROWS_AS(nonnegative_shift(m), math_error);
}

TEST_CASE("kernel_basis columns annihilate the weighted statistics") {
  ModelMatrix m = independence_model();
  m.states.mu = {Int(1), Int(2), Int(3), Int(4)};
  auto basis = kernel_basis(m);
  auto w = weighted_rows(ensure_constant_row(m));
  REQUIRE(basis.k.rows() == 4);
  for (std::size_t c = 0; c < basis.k.cols(); ++c) {
    auto v = basis.k.col(c);
    for (std::size_t i = 0; i < w.rows(); ++i) {
      Int s(0);
      for (std::size_t x = 0; x < w.cols(); ++x) s += w.at(i, x) * v[x];
      CHECK(s == 0);
    }
    // The plain mu row is covered through the constant statistic.
    Int s(0);
    for (std::size_t x = 0; x < 4; ++x) s += m.states.mu[x] * v[x];
    CHECK(s == 0);
  }
}

TEST_CASE("kernel_basis of the independence model") {
  auto basis = kernel_basis(independence_model());
  REQUIRE(basis.dimension() == 1);
  CHECK(basis.k.col(0) == std::vector<Int>{Int(1), Int(-1), Int(-1), Int(1)});
}

TEST_CASE("weighted_rows multiplies each column by its weight") {
  auto m = independence_model();
  m.states.mu = {Int(2), Int(1), Int(1), Int(3)};
  auto w = weighted_rows(m);
  CHECK(w == IntMatrix{{2, 1, 0, 0}, {2, 0, 1, 0}});
}

TEST_CASE("confounding vectors make c^T a constant across states") {
  for (int steps = 1; steps <= 4; ++steps) {
    auto m = markov_chain_model(steps);
    for (const auto& c : confounding_space(m)) {
      Rational first(0);
      for (std::size_t x = 0; x < m.cols(); ++x) {
        Rational s(0);
        for (std::size_t i = 0; i < m.rows(); ++i) s += c[i] * Rational(m.a.at(i, x));
        if (x == 0)
          first = s;
        else
          CHECK(s == first);
      }
    }
  }
}

TEST_CASE("confounding_space is empty for an identifiable model") {
  CHECK(confounding_space(independence_model()).empty());
}

TEST_CASE("confounding_space on one state is everything") {
  ModelMatrix m;
  m.states.labels = {"x"};
  m.states.mu = {Int(1)};
  m.row_names = {"T1", "T2"};
  m.a = IntMatrix{{3}, {5}};
  auto c = confounding_space(m);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == RatVector{Rational(1), Rational(0)});
  CHECK(c[1] == RatVector{Rational(0), Rational(1)});
}

TEST_CASE("four_cycle_model layout") {
  auto m = four_cycle_model();
  REQUIRE(m.rows() == 9);
  REQUIRE(m.cols() == 16);
  CHECK(m.states.labels.front() == "++++");
  CHECK(m.states.labels.back() == "----");
  // State "+-+-" has (D,C,B,A) = (+,-,+,-): BA = -1, CB = -1, DC = -1, DA = -1.
  std::size_t x = 5;
  REQUIRE(m.states.labels[x] == "+-+-");
  CHECK(m.a.at(5, x) == -1);
  CHECK(m.a.at(6, x) == -1);
  CHECK(m.a.at(7, x) == -1);
  CHECK(m.a.at(8, x) == -1);
  // Single-spin rows really are the spins.
  CHECK(m.a.at(1, x) == 1);
  CHECK(m.a.at(2, x) == -1);
}

TEST_CASE("markov_chain_model counts transitions") {
  auto m = markov_chain_model(2);
  REQUIRE(m.cols() == 8);
  // Trajectory 000: starts at 0, two 0->0 transitions.
  std::size_t x = 0;
  REQUIRE(m.states.labels[x] == "000");
  CHECK(m.a.col(x) == std::vector<Int>{Int(1), Int(0), Int(2), Int(0), Int(0), Int(0)});
  auto m3 = markov_chain_model(3);
  // Trajectory 0101: 0->1 twice, 1->0 once.
  std::size_t y = 5;
  REQUIRE(m3.states.labels[y] == "0101");
  CHECK(m3.a.col(y) == std::vector<Int>{Int(1), Int(0), Int(0), Int(2), Int(1), Int(0)});
}

TEST_CASE("markov_chain_model rejects out-of-range step counts") {
  CHECK_THROWS_AS(markov_chain_model(0), math_error);
  CHECK_THROWS_AS(markov_chain_model(13), math_error);
}

TEST_CASE("transition counts satisfy the sufficient-statistic identities") {
  // With S = sum of interior states, E = final state, P = sum of products of
  // consecutive states: N00 = n - X0 - 2S - E + P + X0*X1-correction pattern,
  // written below exactly as linear identities in those aggregates.
  for (int n = 1; n <= 6; ++n) {
    auto m = markov_chain_model(n);
    for (std::size_t x = 0; x < m.cols(); ++x) {
      const std::string& traj = m.states.labels[x];
      long x0 = traj[0] - '0';
      long mid = 0, prod = 0;
      for (int t = 1; t < n; ++t) mid += traj[t] - '0';
      long xn = traj[n] - '0';
      for (int t = 1; t <= n; ++t) prod += (traj[t - 1] - '0') * (traj[t] - '0');
      CHECK(m.a.at(2, x) == n - x0 - 2 * mid - xn + prod);
      CHECK(m.a.at(3, x) == mid + xn - prod);
      CHECK(m.a.at(4, x) == x0 + mid - prod);
      CHECK(m.a.at(5, x) == prod);
    }
  }
}

}  // TEST_SUITE
