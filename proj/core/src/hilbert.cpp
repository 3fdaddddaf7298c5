#include "eef/hilbert.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eef {

namespace {

// Degree-major order with ties broken by descending lexicographic comparison.
bool canonical_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int da(0), db(0);
  for (const Int& v : a) da += v;
  for (const Int& v : b) db += v;
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::vector<Int>> to_int_vectors(const std::vector<std::vector<long>>& in) {
  std::vector<std::vector<Int>> out;
  out.reserve(in.size());
  for (const auto& v : in) {
    std::vector<Int> w;
    w.reserve(v.size());
    for (long e : v) w.emplace_back(e);
    out.push_back(std::move(w));
  }
  return out;
}

bool dominated_by_any(const std::vector<long>& t, const std::vector<std::vector<long>>& found) {
  for (const auto& m : found) {
    bool leq = true;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (m[i] > t[i]) {
        leq = false;
        break;
      }
    if (leq) return true;
  }
  return false;
}

HilbertBasisSet finish(std::vector<std::vector<Int>> vectors, const LatticeBasis& k) {
  std::sort(vectors.begin(), vectors.end(), canonical_less);
  return HilbertBasisSet{std::move(vectors), k};
}

}  // namespace

HilbertBasisSet hilbert_basis(const LatticeBasis& k) {
  const std::size_t n = k.n_states();
  const std::size_t l = k.dimension();
  if (n == 0) throw math_error("hilbert_basis: empty state space, the cone is {0}");
  if (l == 0) {
    std::vector<std::vector<Int>> units;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Int> e(n, Int(0));
      e[i] = 1;
      units.push_back(std::move(e));
    }
    return finish(std::move(units), k);
  }

  // Column i of the kernel matrix read per state: step[i][c] = k(i, c).
  std::vector<std::vector<Int>> step(n, std::vector<Int>(l));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < l; ++c) step[i][c] = k.k.at(i, c);

  struct Node {
    std::vector<long> y;
    std::vector<Int> val;  // y summed against step, zero iff y is a solution
  };

  std::vector<std::vector<long>> found;
  std::vector<Node> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Node node;
    node.y.assign(n, 0);
    node.y[i] = 1;
    node.val = step[i];
    bool zero = true;
    for (const Int& v : node.val)
      if (v != 0) {
        zero = false;
        break;
      }
    if (zero)
      found.push_back(node.y);
    else
      frontier.push_back(std::move(node));
  }

  constexpr std::size_t kBudget = 4'000'000;
  std::size_t generated = n;
  while (!frontier.empty()) {
    std::map<std::vector<long>, std::vector<Int>> next;
    for (const Node& node : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        Int inner(0);
        for (std::size_t c = 0; c < l; ++c) inner += node.val[c] * step[i][c];
        if (inner >= 0) continue;  // growth rule: only step against the residual
        std::vector<long> y = node.y;
        ++y[i];
        if (next.count(y) || dominated_by_any(y, found)) continue;
        std::vector<Int> val = node.val;
        for (std::size_t c = 0; c < l; ++c) val[c] += step[i][c];
        if (++generated > kBudget)
          throw math_error("hilbert_basis: search budget exceeded");
        next.emplace(std::move(y), std::move(val));
      }
    }
    frontier.clear();
    for (auto& [y, val] : next) {
      bool zero = true;
      for (const Int& v : val)
        if (v != 0) {
          zero = false;
          break;
        }
      if (zero) {
        if (!dominated_by_any(y, found)) found.push_back(y);
      } else {
        frontier.push_back(Node{y, std::move(val)});
      }
    }
  }

  if (found.empty()) throw math_error("hilbert_basis: the cone is {0}");
  return finish(to_int_vectors(found), k);
}

HilbertBasisSet brute_force_basis(const LatticeBasis& k, unsigned long bound) {
  const std::size_t n = k.n_states();
  const std::size_t l = k.dimension();
  if (bound < 1) throw math_error("brute_force_basis: bound must be >= 1");
  if (n == 0) throw math_error("brute_force_basis: empty state space");
  double cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    cells *= static_cast<double>(bound + 1);
    if (cells > 1e8) throw math_error("brute_force_basis: enumeration too large");
  }

  std::set<std::vector<long>> solutions;
  std::vector<long> y(n, 0);
  const long top = static_cast<long>(bound);
  while (true) {
    // odometer step
    std::size_t pos = 0;
    while (pos < n && y[pos] == top) y[pos++] = 0;
    if (pos == n) break;
    ++y[pos];
    bool ortho = true;
    for (std::size_t c = 0; c < l && ortho; ++c) {
      Int dot(0);
      for (std::size_t i = 0; i < n; ++i)
        if (y[i]) dot += Int(y[i]) * k.k.at(i, c);
      if (dot != 0) ortho = false;
    }
    if (ortho) solutions.insert(y);
  }

  std::vector<std::vector<long>> keep;
  for (const auto& s : solutions) {
    bool reducible = false;
    std::vector<long> rest(n);
    for (const auto& a : solutions) {
      if (a == s) continue;
      bool fits = true;
      for (std::size_t i = 0; i < n; ++i) {
        rest[i] = s[i] - a[i];
        if (rest[i] < 0) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      if (solutions.count(rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) keep.push_back(s);
  }
  if (keep.empty()) throw math_error("brute_force_basis: no solutions within the bound");
  return finish(to_int_vectors(keep), k);
}

namespace {

bool decompose_rec(std::vector<Int>& rem, const std::vector<std::vector<Int>>& vs,
                   std::size_t j, std::optional<std::size_t> skip,
                   const std::vector<std::vector<bool>>& tail_support,
                   std::vector<Int>& alpha) {
  const std::size_t n = rem.size();
  bool rem_zero = true;
  for (const Int& v : rem)
    if (v != 0) {
      rem_zero = false;
      break;
    }
  if (rem_zero) {
    for (std::size_t i = j; i < vs.size(); ++i) alpha[i] = 0;
    return true;
  }
  // Mass sitting where no remaining vector has support can never be cleared.
  for (std::size_t x = 0; x < n; ++x)
    if (rem[x] > 0 && !tail_support[j][x]) return false;
  if (j == vs.size()) return false;
  if (skip && *skip == j) {
    alpha[j] = 0;
    return decompose_rec(rem, vs, j + 1, skip, tail_support, alpha);
  }
  // Cap the multiplicity by the tightest coordinate ratio.
  Int cap(-1);
  for (std::size_t x = 0; x < n; ++x) {
    if (vs[j][x] == 0) continue;
    Int q = rem[x] / vs[j][x];
    if (cap < 0 || q < cap) cap = q;
    if (cap == 0) break;
  }
  if (cap < 0) cap = 0;  // zero vector cannot occur in a basis, defensive
  for (Int a = cap; a >= 0; --a) {
    std::vector<Int> next(n);
    for (std::size_t x = 0; x < n; ++x) next[x] = rem[x] - a * vs[j][x];
    alpha[j] = a;
    if (decompose_rec(next, vs, j + 1, skip, tail_support, alpha)) return true;
  }
  return false;
}

std::optional<std::vector<Int>> decompose_impl(const std::vector<Int>& b,
                                               const std::vector<std::vector<Int>>& vs,
                                               std::optional<std::size_t> skip) {
  for (const Int& v : b)
    if (v < 0) return std::nullopt;
  const std::size_t n = b.size();
  std::vector<std::vector<bool>> tail_support(vs.size() + 1,
                                              std::vector<bool>(n, false));
  for (std::size_t j = vs.size(); j-- > 0;) {
    tail_support[j] = tail_support[j + 1];
    if (skip && *skip == j) continue;
    for (std::size_t x = 0; x < n; ++x)
      if (vs[j][x] > 0) tail_support[j][x] = true;
  }
  std::vector<Int> rem = b;
  std::vector<Int> alpha(vs.size(), Int(0));
  if (decompose_rec(rem, vs, 0, skip, tail_support, alpha)) return alpha;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Int>> decompose(const std::vector<Int>& b,
                                          const HilbertBasisSet& basis) {
  return decompose_impl(b, basis.vectors, std::nullopt);
}

std::optional<std::vector<Int>> decompose(const std::vector<Int>& b,
                                          const std::vector<std::vector<Int>>& vectors,
                                          std::size_t exclude_index) {
  return decompose_impl(b, vectors, exclude_index);
}

std::vector<std::size_t> redundant_elements(const HilbertBasisSet& basis) {
  const std::size_t n = basis.n_states();
  std::vector<std::vector<bool>> zero_set;
  for (const auto& v : basis.vectors) {
    std::vector<bool> z(n);
    for (std::size_t x = 0; x < n; ++x) z[x] = (v[x] == 0);
    zero_set.push_back(std::move(z));
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < zero_set.size(); ++j) {
    bool empty = true;
    for (std::size_t x = 0; x < n; ++x)
      if (zero_set[j][x]) {
        empty = false;
        break;
      }
    if (empty) {
      out.push_back(j);
      continue;
    }
    // Meet of all other zero sets containing this one.
    std::vector<bool> meet(n, true);
    bool any = false;
    for (std::size_t i = 0; i < zero_set.size(); ++i) {
      if (i == j) continue;
      bool contains = true;
      for (std::size_t x = 0; x < n; ++x)
        if (zero_set[j][x] && !zero_set[i][x]) {
          contains = false;
          break;
        }
      if (!contains) continue;
      any = true;
      for (std::size_t x = 0; x < n; ++x) meet[x] = meet[x] && zero_set[i][x];
    }
    if (any && meet == zero_set[j]) out.push_back(j);
  }
  return out;
}

}  // namespace eef
