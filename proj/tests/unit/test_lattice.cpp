#include <doctest.h>

#include "unimod/codes.hpp"
#include "unimod/constructions.hpp"
#include "unimod/lattice.hpp"
#include "unimod/qseries.hpp"

#include <random>

using namespace unimod;

namespace {

Lattice a2() {
  RatMatrix g(2, 2);
  g << Rat(2), Rat(-1), Rat(-1), Rat(2);
  return Lattice::from_gram(g, "A2");
}

Lattice d4() {
  RatMatrix b = RatMatrix::Zero(4, 4);
  for (int k = 0; k < 3; ++k) {
    b(k, k) = Rat(1);
    b(k, k + 1) = Rat(-1);
  }
  b(3, 2) = Rat(1);
  b(3, 3) = Rat(1);
  return Lattice::from_generators(b, Rat(1), "D4");
}

// U·Z^n for a random unimodular U built from a primitive first row
Lattice scrambled_z(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  RatVector c(n);
  c(0) = Rat(1);
  for (int i = 1; i < n; ++i) c(i) = Rat(d(rng));
  RatMatrix u = complete_to_unimodular(c);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) u.row(i) += Rat(d(rng)) * u.row(j);
  return Lattice::from_generators(u, Rat(1), "scrambled");
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("unimodularity and parity") {
  CHECK(check_unimodular(z_lattice(5)).parity == Parity::Odd);
  CHECK(check_unimodular(code_to_odd_lattice(hamming8_fixture())).parity == Parity::Even);
  const auto c = check_unimodular(a2());
  CHECK_FALSE(c.unimodular());
  CHECK(c.det == Rat(3));
  CHECK(check_unimodular(d4()).det == Rat(4));
}

TEST_CASE("Gram matrix must be symmetric positive definite") {
  RatMatrix g(2, 2);
  g << Rat(1), Rat(2), Rat(2), Rat(1);
  CHECK_THROWS(Lattice::from_gram(g));
  g << Rat(1), Rat(0), Rat(1), Rat(1);
  CHECK_THROWS(Lattice::from_gram(g));
}

TEST_CASE("root systems") {
  const auto e = enumerate_short(a2(), Rat(2));
  CHECK(e.counts.at(Rat(2)) == 6);
  CHECK(minimal_norm(a2()) == Rat(2));
  CHECK(enumerate_short(d4(), Rat(2)).counts.at(Rat(2)) == 24);
  const Lattice e8 = code_to_odd_lattice(hamming8_fixture());
  const auto c = enumerate_short(e8, Rat(4)).counts;
  CHECK(c.at(Rat(2)) == 240);
  CHECK(c.at(Rat(4)) == 2160);
  CHECK(c.at(Rat(1)) == 0);
}

TEST_CASE("theta of Z^n by enumeration equals θ3^n") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const QSeries t = theta_by_enumeration(z_lattice(n), Rat(5));
    CHECK(t.truncation() == 21);
    CHECK(t == theta3(21).pow(n));
  }
}

TEST_CASE("theta is invariant under change of basis") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CAPTURE(seed);
    const Lattice L = scrambled_z(6, seed);
    CHECK(check_unimodular(L).parity == Parity::Odd);
    CHECK(theta_by_enumeration(L, Rat(4)) == theta3(17).pow(6));
    CHECK(shadow_by_enumeration(L, Rat(4)) == theta2(17).pow(6).truncated(17));
  }
}

TEST_CASE("shadow of Z^n is (Z + 1/2)^n") {
  for (int n = 1; n <= 9; ++n) {
    CAPTURE(n);
    const Rat r(4);
    CHECK(shadow_by_enumeration(z_lattice(n), r) == theta2(17).pow(n).truncated(17));
  }
}

TEST_CASE("characteristic vector and shadow cosets") {
  const Lattice z = z_lattice(4);
  const RatVector y = characteristic_vector(z);
  for (int i = 0; i < 4; ++i) CHECK(y(i).num() % 2 != 0);
  const auto [s1, s3] = shadow_cosets(z);
  CHECK(s1.base.dim() == 4);
  // Z^4: the two cosets each hold 8 of the 16 vectors (±1/2)^4
  CHECK(enumerate_short(s1, Rat(1)).counts.at(Rat(1)) == 8);
  CHECK(enumerate_short(s3, Rat(1)).counts.at(Rat(1)) == 8);
}

TEST_CASE("even sublattice and dual") {
  const Lattice z = z_lattice(4);
  const Lattice e = even_sublattice(z);
  CHECK(determinant(e.gram) == Rat(4));
  CHECK(check_unimodular(e).parity == Parity::NotUnimodular);
  const Lattice d = dual(a2());
  CHECK(determinant(d.gram) == Rat(1, 3));
  CHECK(minimal_norm(d) == Rat(2, 3));
  CHECK(enumerate_short(d, Rat(2, 3)).counts.at(Rat(2, 3)) == 6);
}

TEST_CASE("inner products use the Gram matrix") {
  RatVector x(2), y(2);
  x << Rat(1), Rat(0);
  y << Rat(0), Rat(1);
  CHECK(inner(a2(), x, y) == Rat(-1));
  CHECK(norm(a2(), x + y) == Rat(2));
}

TEST_CASE("short vectors come in ± pairs with exact norms") {
  const Lattice L = scrambled_z(5, 7);
  const auto sv = short_vectors(L, Rat(2));
  REQUIRE(sv.coords.size() == 10 + 40);
  for (std::size_t k = 0; k < sv.coords.size(); k += 2) {
    RatVector v(5), w(5);
    for (int i = 0; i < 5; ++i) {
      v(i) = Rat(sv.coords[k][i]);
      w(i) = Rat(sv.coords[k + 1][i]);
    }
    CHECK(v == RatVector(-w));
    CHECK(norm(L, v) == sv.norms[k]);
  }
}

TEST_CASE("worker count does not change the result") {
  const Lattice L = code_to_odd_lattice(hamming8_fixture());
  EnumerateOptions one, many;
  one.workers = 1;
  many.workers = 6;
  CHECK(enumerate_short(L, Rat(6), one).counts.counts == enumerate_short(L, Rat(6), many).counts.counts);
}

TEST_CASE("collected vectors have the reported norms") {
  EnumerateOptions o;
  o.collect_vectors = true;
  const auto e = enumerate_short(d4(), Rat(4), o);
  CHECK(e.vectors.size() == e.counts.total());
  for (const auto& v : e.vectors) CHECK(norm(d4(), v) <= Rat(4));
}

TEST_CASE("span_in builds a sublattice") {
  RatMatrix rows(2, 4);
  rows << Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(1);
  const Lattice s = span_in(z_lattice(4), rows);
  CHECK(s.dim() == 2);
  CHECK(s.gram == RatMatrix(RatMatrix::Identity(2, 2) * Rat(2)));
}

}
