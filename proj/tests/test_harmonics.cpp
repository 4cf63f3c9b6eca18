#include "quadharm/blocks.hpp"
#include "quadharm/harmonics.hpp"
#include "quadharm/linsolve.hpp"
#include "quadharm/monomial.hpp"
#include "quadharm/polynomial.hpp"
#include "quadharm/polynomial_io.hpp"
#include "quadharm/sphere.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <vector>

using namespace quadharm;

namespace {

// Independent count of dim H_k(R^d): the rank-nullity of the exact Laplacian
// matrix from degree-k monomial coefficients to degree-(k-2) ones, reduced by
// fraction-free elimination right here.
Int harmonic_dim_by_rank(unsigned d, unsigned k) {
  std::vector<Monomial> domain, image;
  std::function<void(Monomial&, unsigned, unsigned, std::vector<Monomial>&)> gen =
      [&](Monomial& m, unsigned pos, unsigned left, std::vector<Monomial>& out) {
        if (pos + 1 == d) {
          m.e[pos] = left;
          out.push_back(m);
          return;
        }
        for (unsigned e = 0; e <= left; ++e) {
          m.e[pos] = e;
          gen(m, pos + 1, left - e, out);
        }
      };
  Monomial scratch(d);
  gen(scratch, 0, k, domain);
  if (k >= 2) gen(scratch, 0, k - 2, image);

  std::map<Monomial, std::size_t, GrlexLess> row_of;
  for (std::size_t i = 0; i < image.size(); ++i) row_of[image[i]] = i;

  std::vector<std::vector<Rat>> mat(image.size(), std::vector<Rat>(domain.size(), Rat(0)));
  for (std::size_t c = 0; c < domain.size(); ++c) {
    Polynomial lap = Polynomial::term(d, domain[c], Rat(1)).laplacian();
    for (const auto& [mono, coeff] : lap.terms()) mat[row_of.at(mono)][c] = coeff;
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < domain.size() && rank < mat.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < mat.size() && mat[pivot][col] == 0) ++pivot;
    if (pivot == mat.size()) continue;
    std::swap(mat[rank], mat[pivot]);
    for (std::size_t r = 0; r < mat.size(); ++r) {
      if (r == rank || mat[r][col] == 0) continue;
      Rat f = mat[r][col] / mat[rank][col];
      for (std::size_t c2 = col; c2 < domain.size(); ++c2) mat[r][c2] -= f * mat[rank][c2];
    }
    ++rank;
  }
  return Int(domain.size()) - Int(rank);
}

bool proportional(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const auto& [m, c] = *p.terms().begin();
  auto it = q.terms().find(m);
  if (it == q.terms().end()) return false;
  Rat scale = c / it->second;
  return p == scale * q;
}

}  // namespace

TEST_CASE("dimension formula against a rank oracle") {
  for (unsigned d : {2u, 3u, 4u})
    for (unsigned k = 0; k <= 5; ++k)
      CHECK(harmonic_space_dim(d, k) == harmonic_dim_by_rank(d, k));
  CHECK(harmonic_space_dim(2, 8) == 2);
  CHECK(harmonic_space_dim(3, 8) == 17);
  CHECK(harmonic_space_dim(1, 0) == 1);
  CHECK(harmonic_space_dim(1, 1) == 1);
  CHECK(harmonic_space_dim(1, 2) == 0);
}

TEST_CASE("degree-one entries span the coordinates") {
  HarmonicBasis b2 = HarmonicBasis::build(2, 2);
  CHECK(b2.count_at_degree(1) == 2);
  CHECK(proportional(b2.at(1, 0, 1).y, Polynomial::variable(2, 2)));
  CHECK(proportional(b2.at(1, 1, 1).y, Polynomial::variable(2, 1)));

  HarmonicBasis b3 = HarmonicBasis::build(3, 2);
  CHECK(b3.count_at_degree(1) == 3);
  std::vector<bool> hit(3, false);
  for (const auto& [idx, e] : b3.entries()) {
    if (idx.k != 1) continue;
    for (unsigned j = 1; j <= 3; ++j)
      if (proportional(e.y, Polynomial::variable(3, j))) hit[j - 1] = true;
  }
  CHECK((hit[0] && hit[1] && hit[2]));
}

TEST_CASE("per-degree counts match the dimension formula") {
  for (unsigned d : {2u, 3u, 4u}) {
    HarmonicBasis basis = HarmonicBasis::build(d, 8);
    for (unsigned k = 0; k <= 8; ++k)
      CHECK(Int(basis.count_at_degree(k)) == harmonic_space_dim(d, k));
  }
}

TEST_CASE("entries are homogeneous harmonics") {
  HarmonicBasis basis = HarmonicBasis::build(3, 6);
  for (const auto& [idx, e] : basis.entries()) {
    CHECK(e.y.laplacian().is_zero());
    CHECK(e.y.degree() == static_cast<int>(idx.k));
    CHECK(e.y == e.y.homogeneous_component(idx.k));
    CHECK(e.norm_sq.sign() == 1);
  }
}

TEST_CASE("orthogonality") {
  for (unsigned d : {2u, 3u}) {
    unsigned K = d == 2 ? 8 : 6;
    HarmonicBasis basis = HarmonicBasis::build(d, K);
    std::vector<const BasisEntry*> flat;
    std::vector<BasisIndex> idx;
    for (const auto& [i, e] : basis.entries()) {
      flat.push_back(&e);
      idx.push_back(i);
    }
    for (std::size_t a = 0; a < flat.size(); ++a)
      for (std::size_t b = a + 1; b < flat.size(); ++b) {
        if (inner_product(flat[a]->y, flat[b]->y).is_zero()) continue;
        CAPTURE(idx[a].k, idx[a].s, idx[a].l, idx[b].k, idx[b].s, idx[b].l);
        FAIL("distinct basis entries are not orthogonal");
      }
  }
}

TEST_CASE("coordinate-squared action is tridiagonal in the degree ladder") {
  // x_d^2 Y_{k,(s,l)} = a~_n Y_{k+2,(s,l)} + b~_n |x|^2 Y_{k,(s,l)}
  //                   + g~_n |x|^4 Y_{k-2,(s,l)},  n = k - s,
  // as exact polynomials, with the squared Jacobi recurrence supplying the
  // coefficients (the g~ term truncates away for n < 2).
  for (unsigned d : {2u, 3u}) {
    HarmonicBasis basis = HarmonicBasis::build(d, 8);
    Polynomial xd = Polynomial::variable(d, d);
    for (const auto& [idx, e] : basis.entries()) {
      if (idx.k + 2 > basis.max_degree()) continue;
      unsigned n = idx.k - idx.s;
      auto sq = squared_recurrence(n, alpha_for(idx.s, d));
      Polynomial lhs = xd * xd * e.y;
      Polynomial rhs = sq.a_tilde * basis.at(idx.k + 2, idx.s, idx.l).y +
                       sq.b_tilde * substitute_radial(e.y, 2);
      if (n >= 2) rhs += sq.g_tilde * substitute_radial(basis.at(idx.k - 2, idx.s, idx.l).y, 4);
      CAPTURE(d, idx.k, idx.s, idx.l);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("blocks do not depend on the family label") {
  HarmonicBasis basis = HarmonicBasis::build(3, 6);
  REQUIRE(basis.family_size(1, 1) >= 2);
  BlockMatrix b1 = assemble_block(basis, 2, 1, 1);
  BlockMatrix b2 = assemble_block(basis, 2, 1, 2);
  CHECK(b1.diag == b2.diag);
  CHECK(b1.upper == b2.upper);
  CHECK(b1.lower == b2.lower);
  CHECK(b1.norm_ratio_sq == b2.norm_ratio_sq);
}
