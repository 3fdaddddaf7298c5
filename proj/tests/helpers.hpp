#pragma once

#include <cstdlib>
#include <random>

#include "eef/linalg.hpp"
#include "eef/model.hpp"

namespace testutil {

using eef::Int;
using eef::IntMatrix;
using eef::Rational;
using eef::RatVector;

// Seeded from EEF_SEED when set so failures can be replayed.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
  std::uint64_t seed = 20260815ull;
  if (const char* s = std::getenv("EEF_SEED")) seed = std::strtoull(s, nullptr, 10);
  return std::mt19937_64(seed + 0x9e3779b97f4a7c15ull * salt);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                               std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> pick(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = pick(rng);
  return m;
}

// Fraction-free elimination; exact integer determinant.
inline Int bareiss_det(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw eef::math_error("determinant of a non-square matrix");
  if (n == 0) return 1;
  Int sign(1), prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap == k) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

// Plain rational Gaussian elimination, independent of the HNF code path.
inline std::size_t rational_rank(const IntMatrix& m) {
  std::vector<RatVector> rows(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = Rational(m.at(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// v lies in the rational row span of m iff appending it leaves the rank alone.
inline bool in_row_span(const std::vector<Int>& v, const IntMatrix& m) {
  IntMatrix ext(m.rows() + 1, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) ext.at(i, j) = m.at(i, j);
  for (std::size_t j = 0; j < m.cols(); ++j) ext.at(m.rows(), j) = v[j];
  return rational_rank(ext) == rational_rank(m);
}

inline bool hnf_shape_ok(const IntMatrix& h, std::size_t rank) {
  long prev_col = -1;
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h.at(i, p) == 0) ++p;
    if (p == h.cols()) return false;
    if (static_cast<long>(p) <= prev_col) return false;
    prev_col = static_cast<long>(p);
    if (h.at(i, p) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h.at(k, p) < 0 || h.at(k, p) >= h.at(i, p)) return false;
  }
  for (std::size_t i = rank; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) return false;
  return true;
}

inline eef::ModelMatrix independence_model() {
  eef::ModelMatrix m;
  m.states.labels = {"00", "01", "10", "11"};
  m.states.mu.assign(4, Int(1));
  m.row_names = {"R", "C"};
  m.a = IntMatrix{{1, 1, 0, 0}, {1, 0, 1, 0}};
  return m;
}

inline eef::ModelMatrix identity3_model() {
  eef::ModelMatrix m;
  m.states.labels = {"a", "b", "c"};
  m.states.mu.assign(3, Int(1));
  m.row_names = {"T1", "T2", "T3"};
  m.a = IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  return m;
}

inline eef::ModelMatrix single_row_model() {
  eef::ModelMatrix m;
  m.states.labels = {"u", "v"};
  m.states.mu.assign(2, Int(1));
  m.row_names = {"T"};
  m.a = IntMatrix{{1, 1}};
  return m;
}

}  // namespace testutil
