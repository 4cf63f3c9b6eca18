#include "quadharm/blocks.hpp"
#include "quadharm/harmonics.hpp"
#include "quadharm/sphere.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace quadharm;

namespace {
const Rat kTol = Rat(Int(1), Int(1) << 40);

bool overlap(const RatInterval& a, const RatInterval& b) {
  return a.lo <= b.hi && b.lo <= a.hi;
}
}  // namespace

TEST_CASE("one-by-one blocks") {
  for (unsigned d : {2u, 3u, 4u}) {
    BlockMatrix b = block_from_recurrence(d, 0, 0);
    REQUIRE(b.size == 1);
    CHECK(b.diag[0] == Rat(1, d));

    EigenResult cp = smallest_eigenvalue_charpoly(b, kTol);
    CHECK(cp.lambda.lo == Rat(1, d));
    CHECK(cp.lambda.hi == Rat(1, d));

    EigenResult jz = smallest_eigenvalue_jacobizero(d, 0, 0, kTol);
    CHECK(jz.lambda.contains(Rat(1, d)));
    CHECK(jz.lambda.width() <= kTol);
  }
}

TEST_CASE("entries match direct sphere inner products") {
  // 2x2 block on harmonic degrees {0, 2} of the s=0 family in the plane,
  // rebuilt from scratch as quadratic-form entries of x_2^2.
  HarmonicBasis basis = HarmonicBasis::build(2, 4);
  BlockMatrix b = assemble_block(basis, 1, 0, 1);
  REQUIRE(b.size == 2);

  Polynomial w = Polynomial::variable(2, 2) * Polynomial::variable(2, 2);
  const Polynomial& y0 = basis.at(0, 0, 1).y;
  const Polynomial& y2 = basis.at(2, 0, 1).y;

  CHECK(rayleigh_quotient(w, y0) == b.diag[0]);
  CHECK(rayleigh_quotient(w, y2) == b.diag[1]);

  Rat cross = ratio(inner_product(w * y0, y2), norm_squared(y2)) *
              ratio(inner_product(w * y2, y0), norm_squared(y0));
  CHECK(cross == b.sym_offdiag_sq[0]);
  CHECK(cross == b.upper[0] * b.lower[0]);

  // the operator is tridiagonal in the degree ladder: skipping a rung pairs
  // to zero
  HarmonicBasis tall = HarmonicBasis::build(2, 6);
  CHECK(inner_product(w * tall.at(0, 0, 1).y, tall.at(4, 0, 1).y).is_zero());
  CHECK(inner_product(w * tall.at(2, 0, 1).y, tall.at(6, 0, 1).y).is_zero());
}

TEST_CASE("two eigenvalue routes agree") {
  for (unsigned d : {2u, 3u}) {
    for (unsigned m = 0; m <= 4; ++m) {
      for (unsigned s = 0; s <= 2 * m; s += 2) {
        if (harmonic_space_dim(d - 1, s) == 0) continue;
        BlockMatrix b = block_from_recurrence(d, m, s);
        EigenResult cp = smallest_eigenvalue_charpoly(b, kTol);
        EigenResult jz = smallest_eigenvalue_jacobizero(d, m, s, kTol);
        CAPTURE(d, m, s);
        CHECK(overlap(cp.lambda, jz.lambda));
        CHECK(cp.lambda.width() <= kTol);
        CHECK(jz.lambda.width() <= kTol);

        // spectrum of the x_d^2 form lives strictly inside (0,1)
        CHECK(cp.lambda.lo > 0);
        CHECK(cp.lambda.hi < 1);

        // and the bracket is consistent with the Gershgorin discs of the
        // reduced symmetric form
        CHECK(cp.lambda.hi >= gershgorin_lower(b));
        CHECK(cp.lambda.lo <= gershgorin_upper(b));
      }
    }
  }
}

TEST_CASE("odd factor degrees sit above their even neighbours") {
  unsigned strictly_above = 0, total = 0;
  for (unsigned d : {3u, 4u}) {
    for (unsigned m = 1; m <= 4; ++m) {
      for (unsigned s = 1; s <= 2 * m; s += 2) {
        if (harmonic_space_dim(d - 1, s) == 0) continue;
        BlockMatrix b = block_from_recurrence(d, m, s);
        EigenResult odd = smallest_eigenvalue_charpoly(b, kTol);
        EigenResult even = odd_block_interlacing_bound(d, m, s, kTol);
        CAPTURE(d, m, s);
        // the even neighbour is a certified lower bound: a contradiction
        // would need the odd bracket to end below the even one's start
        CHECK(!(odd.lambda.hi < even.lambda.lo));
        ++total;
        if (odd.lambda.lo > even.lambda.hi) ++strictly_above;
      }
    }
  }
  INFO("strictly above in " << strictly_above << " of " << total << " blocks");
  CHECK(total > 0);
}

TEST_CASE("route and shape preconditions") {
  CHECK_THROWS_AS(smallest_eigenvalue_jacobizero(3, 2, 1, kTol), std::domain_error);
  CHECK_THROWS_AS(odd_block_interlacing_bound(3, 2, 2, kTol), std::domain_error);
  CHECK_THROWS_AS(block_from_recurrence(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(block_from_recurrence(3, 2, 5), std::invalid_argument);

  HarmonicBasis basis = HarmonicBasis::build(2, 4);
  CHECK_THROWS_AS(assemble_block(basis, 3, 0, 1), std::invalid_argument);
}

TEST_CASE("characteristic polynomial of a 2x2 block") {
  BlockMatrix b = block_from_recurrence(2, 1, 0);
  UPoly p = block_charpoly(b);
  UPoly t = UPoly::x();
  UPoly expect = (UPoly::constant(b.diag[0]) - t) * (UPoly::constant(b.diag[1]) - t) -
                 UPoly::constant(b.sym_offdiag_sq[0]);
  CHECK(p == expect);
}
