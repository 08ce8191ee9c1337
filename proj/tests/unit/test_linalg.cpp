#include <doctest.h>

#include "unimod/linalg.hpp"

using namespace unimod;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  RatMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("determinant and rank over the rationals") {
  const RatMatrix a2 = mat({{2, -1}, {-1, 2}});
  CHECK(determinant(a2) == Rat(3));
  CHECK(rank(a2) == 2);
  const RatMatrix sing = mat({{1, 2, 3}, {2, 4, 6}, {Rat(1, 2), 0, 1}});
  CHECK(rank(sing) == 2);
  CHECK(determinant(sing) == Rat(0));
}

TEST_CASE("inverse times matrix is the identity") {
  const RatMatrix m = mat({{4, 1, 0}, {1, 3, Rat(1, 2)}, {0, Rat(1, 2), 2}});
  CHECK(inverse(m) * m == RatMatrix::Identity(3, 3));
  CHECK_THROWS(solve(RatMatrix(RatMatrix::Zero(2, 2)), RatMatrix(RatMatrix::Identity(2, 2))));
}

TEST_CASE("LDL detects definiteness") {
  CHECK(ldl(mat({{2, 1}, {1, 2}})).positive_definite);
  CHECK_FALSE(ldl(mat({{1, 2}, {2, 1}})).positive_definite);
  const auto d = ldl(mat({{4, 2}, {2, 5}}));
  CHECK(d.pivots(0) == Rat(4));
  CHECK(d.pivots(1) == Rat(4));
}

TEST_CASE("row_basis spans the same lattice") {
  // (1/2,1/2), (1,0), (0,1) span the lattice with basis (1/2,1/2), (1,0)
  const RatMatrix rows = mat({{Rat(1, 2), Rat(1, 2)}, {1, 0}, {0, 1}});
  const RatMatrix b = row_basis(rows);
  CHECK(b.rows() == 2);
  const Rat d = determinant(b);
  CHECK((d == Rat(1, 2) || d == Rat(-1, 2)));
  // each input row is an integer combination of the basis
  const RatMatrix coords = rows * inverse(b);
  CHECK(is_integral(coords));
}

TEST_CASE("complete_to_unimodular keeps the first row") {
  RatVector c(4);
  c << Rat(6), Rat(10), Rat(15), Rat(0);
  const RatMatrix w = complete_to_unimodular(c);
  CHECK(w.row(0).transpose() == c);
  CHECK(is_integral(w));
  const Rat d = determinant(w);
  CHECK((d == Rat(1) || d == Rat(-1)));
}

TEST_CASE("common denominator") {
  CHECK(common_denominator(mat({{Rat(1, 4), Rat(1, 6)}, {1, Rat(5, 9)}})) == 36);
}

}
