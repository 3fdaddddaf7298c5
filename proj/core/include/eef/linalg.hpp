#pragma once

#include <optional>

#include "eef/matrix.hpp"

namespace eef {

struct HnfResult {
  IntMatrix h;       // row-style Hermite normal form, h = u * input
  IntMatrix u;       // unimodular row transform
  std::size_t rank;  // number of nonzero rows of h
};

// Row-style HNF: pivots positive and strictly right-moving, zeros below each
// pivot, entries above a pivot reduced into [0, pivot), zero rows last.
// Exact throughout; pivots are chosen by smallest nonzero absolute value.
HnfResult hermite_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Basis of the saturated integer kernel {y : m*y = 0}, returned as the
// columns of an n x l matrix with l = cols(m) - rank(m). Columns are
// primitive and canonically ordered, so equal lattices compare equal.
IntMatrix integer_kernel(const IntMatrix& m);

// Rational c with c^T m = v^T, free coordinates pinned to zero; nullopt when
// v is outside the row span. Unique when the rows of m are independent.
std::optional<RatVector> solve_in_rowspan(const RatVector& v, const IntMatrix& m);
std::optional<RatVector> solve_in_rowspan(const std::vector<Int>& v, const IntMatrix& m);

// True when y is an integer combination of the rows of basis_rows.
bool in_row_lattice(const std::vector<Int>& y, const IntMatrix& basis_rows);

}  // namespace eef
