#pragma once
// Exact dense linear solve: rows are scaled to integers, eliminated with
// the fraction-free (Bareiss) recurrence, and back-substituted over the
// rationals. Pivots take the first row with a nonzero entry, so the result
// and the elimination path are deterministic.

#include "quadharm/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace quadharm {

struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

// Solves mat * x = rhs for square mat; throws SingularSystem otherwise.
inline std::vector<Rat> solve_exact(const std::vector<std::vector<Rat>>& mat,
                                    const std::vector<Rat>& rhs) {
  const std::size_t n = mat.size();
  if (n == 0) return {};
  if (rhs.size() != n) throw std::invalid_argument("rhs length mismatch");

  // Augmented integer matrix, each row cleared of denominators.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (mat[i].size() != n) throw std::invalid_argument("matrix is not square");
    Int scale(1);
    for (const auto& v : mat[i]) scale = boost::multiprecision::lcm(scale, denominator(v));
    scale = boost::multiprecision::lcm(scale, denominator(rhs[i]));
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = numerator(mat[i][j]) * (scale / denominator(mat[i][j]));
    a[i][n] = numerator(rhs[i]) * (scale / denominator(rhs[i]));
  }

  Int prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) throw SingularSystem("singular linear system");
    if (pivot != k) std::swap(a[pivot], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rat(a[i][j]) * x[j];
    x[i] = acc / Rat(a[i][i]);
  }
  return x;
}

}  // namespace quadharm
