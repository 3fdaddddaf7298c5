#include "eef/linalg.hpp"

#include <utility>

namespace eef {

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

// row[target] -= q * row[source]
void row_axpy(IntMatrix& m, std::size_t target, std::size_t source, const Int& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(target, c) -= q * m.at(source, c);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t pr = 0;
  for (std::size_t col = 0; col < h.cols() && pr < h.rows(); ++col) {
    // Euclidean elimination below the pivot row, smallest pivot first.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = pr; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == h.rows() || cmp(abs(h.at(i, col)), abs(h.at(best, col))) < 0)
          best = i;
      }
      if (best == h.rows()) break;  // no pivot in this column
      swap_rows(h, pr, best);
      swap_rows(u, pr, best);
      bool leftover = false;
      for (std::size_t i = pr + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = h.at(i, col) / h.at(pr, col);  // truncated
        if (q != 0) {
          row_axpy(h, i, pr, q);
          row_axpy(u, i, pr, q);
        }
        if (h.at(i, col) != 0) leftover = true;
      }
      if (!leftover) {
        if (h.at(pr, col) < 0) {
          negate_row(h, pr);
          negate_row(u, pr);
        }
        for (std::size_t i = 0; i < pr; ++i) {
          Int q = floor_div(h.at(i, col), h.at(pr, col));
          if (q != 0) {
            row_axpy(h, i, pr, q);
            row_axpy(u, i, pr, q);
          }
        }
        ++pr;
        break;
      }
    }
  }
  return HnfResult{std::move(h), std::move(u), pr};
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  HnfResult t = hermite_normal_form(m.transposed());
  const std::size_t l = n - t.rank;
  if (l == 0) return IntMatrix(n, 0);
  // Rows of the transform opposite zero rows of h form a saturated basis;
  // a second HNF pass makes the output canonical.
  IntMatrix raw(l, n);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t x = 0; x < n; ++x) raw.at(i, x) = t.u.at(t.rank + i, x);
  IntMatrix canon = hermite_normal_form(raw).h;
  IntMatrix k(n, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t x = 0; x < n; ++x) k.at(x, i) = canon.at(i, x);
  return k;
}

std::optional<RatVector> solve_in_rowspan(const RatVector& v, const IntMatrix& m) {
  if (v.size() != m.cols())
    throw math_error("solve_in_rowspan: length mismatch");
  const std::size_t n = m.cols();
  const std::size_t unknowns = m.rows();
  // One equation per state: sum_j c_j m(j, x) = v(x).
  std::vector<RatVector> a(n, RatVector(unknowns + 1));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < unknowns; ++j) a[x][j] = Rational(m.at(j, x));
    a[x][unknowns] = v[x];
  }
  std::size_t pr = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && pr < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = pr; i < n; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    std::swap(a[pr], a[piv]);
    Rational inv = a[pr][col];
    for (auto& e : a[pr]) e /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pr || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t c = col; c <= unknowns; ++c) a[i][c] -= f * a[pr][c];
    }
    pivot_col.push_back(col);
    ++pr;
  }
  for (std::size_t i = pr; i < n; ++i)
    if (a[i][unknowns] != 0) return std::nullopt;
  RatVector c(unknowns, Rational(0));
  for (std::size_t i = 0; i < pr; ++i) c[pivot_col[i]] = a[i][unknowns];
  return c;
}

std::optional<RatVector> solve_in_rowspan(const std::vector<Int>& v, const IntMatrix& m) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return solve_in_rowspan(r, m);
}

bool in_row_lattice(const std::vector<Int>& y, const IntMatrix& basis_rows) {
  if (y.size() != basis_rows.cols())
    throw math_error("in_row_lattice: length mismatch");
  HnfResult r = hermite_normal_form(basis_rows);
  std::vector<Int> rem = y;
  std::size_t col = 0;
  for (std::size_t i = 0; i < r.rank; ++i) {
    while (col < r.h.cols() && r.h.at(i, col) == 0) ++col;
    const Int& pivot = r.h.at(i, col);
    if (rem[col] % pivot != 0) return false;
    Int q = rem[col] / pivot;
    if (q != 0)
      for (std::size_t c = col; c < rem.size(); ++c) rem[c] -= q * r.h.at(i, c);
  }
  for (const Int& e : rem)
    if (e != 0) return false;
  return true;
}

}  // namespace eef
