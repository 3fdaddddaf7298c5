#pragma once

#include <iosfwd>
#include <string>

#include "eef/linalg.hpp"

namespace eef {

// Finite state space with a positive integer base measure.
struct StateSpace {
  std::vector<std::string> labels;
  std::vector<Int> mu;  // one weight per state, each >= 1

  std::size_t size() const { return labels.size(); }
  void validate() const;
};

// Integer-valued canonical statistics, one row per statistic.
struct ModelMatrix {
  StateSpace states;
  IntMatrix a;  // m x n, column x = statistics evaluated at state x
  std::vector<std::string> row_names;

  std::size_t rows() const { return a.rows(); }
  std::size_t cols() const { return a.cols(); }
  void validate() const;
};

// Columns span the saturated integer kernel of the mu-weighted statistics
// (constant statistic included).
struct LatticeBasis {
  IntMatrix k;  // n x l
  bool weighted = true;

  std::size_t dimension() const { return k.cols(); }
  std::size_t n_states() const { return k.rows(); }
};

// Returns the model unchanged when the all-ones row already lies in the row
// span, otherwise prepends it (named "I").
ModelMatrix ensure_constant_row(const ModelMatrix& m);

// Shifts each row with a negative entry by a multiple of the all-ones row so
// its minimum becomes zero. Requires the constant in the row span.
ModelMatrix nonnegative_shift(const ModelMatrix& m);

// Kernel of the (m+1) x n matrix whose rows are mu and each statistic
// weighted by mu.
LatticeBasis kernel_basis(const ModelMatrix& m);

// The mu-weighted rows used by kernel_basis, without the leading mu row:
// entry (j, x) = a(j, x) * mu(x).
IntMatrix weighted_rows(const ModelMatrix& m);

// Basis of {c : c^T a is a constant vector}. Canonical reduced-echelon form.
std::vector<RatVector> confounding_space(const ModelMatrix& m);

// Text format: optional "# labels:", "# rownames:", "# mu:" header lines,
// then "m n", then m rows of n integers.
ModelMatrix read_model(std::istream& in);
ModelMatrix read_model_file(const std::string& path);
void write_model(std::ostream& out, const ModelMatrix& m);

}  // namespace eef
