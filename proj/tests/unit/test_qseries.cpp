#include <doctest.h>

#include "unimod/qseries.hpp"

using namespace unimod;

namespace {

constexpr long T = 64;

QSeries poly(std::initializer_list<std::pair<long, long>> terms, long trunc) {
  QSeries::Terms t;
  for (const auto& [e, c] : terms) t[e] = Rat(c);
  return QSeries(t, trunc);
}

}  // namespace

TEST_SUITE("qseries") {

TEST_CASE("theta identities to 64 quarters") {
  const QSeries t2 = theta2(T), t3 = theta3(T), t4 = theta4(T);
  CHECK((t3.pow(4) - t2.pow(4) - t4.pow(4)).is_zero());
  CHECK((delta8(T) * Rat(16) - t2.pow(4) * t4.pow(4)).is_zero());
  CHECK((g2(T) + h2(T) - QSeries::monomial(Rat(1), 0, T)).is_zero());
  CHECK((t3 * t4 - theta4(T / 2).substitute_q2().pow(2)).is_zero());
}

TEST_CASE("theta series of Z") {
  CHECK(theta3(17) == poly({{0, 1}, {4, 2}, {16, 2}}, 17));
  CHECK(theta4(17) == poly({{0, 1}, {4, -2}, {16, 2}}, 17));
  CHECK(theta2(26) == poly({{1, 2}, {9, 2}, {25, 2}}, 26));
}

TEST_CASE("delta8 and theta3^8 against the Python oracle") {
  const QSeries d = delta8(40);
  const long dv[] = {1, -8, 28, -64, 126, -224, 344, -512, 757};
  for (int m = 1; m <= 9; ++m) CHECK(d.coeff_q(m) == Rat(dv[m - 1]));
  CHECK(d.coeff_q(0) == Rat(0));
  const QSeries t8 = theta3(40).pow(8);
  const long tv[] = {1, 16, 112, 448, 1136, 2016, 3136, 5504, 9328, 12112};
  for (int m = 0; m < 10; ++m) CHECK(t8.coeff_q(m) == Rat(tv[m]));
}

TEST_CASE("level-one forms give E8 and Leech") {
  const long t = 4 * 9;
  const QSeries e4 = eisenstein_e4(t);
  CHECK(e4.coeff_q(2) == Rat(240));
  CHECK(e4.coeff_q(4) == Rat(2160));
  CHECK(e4.coeff_q(1) == Rat(0));
  const QSeries leech = e4.pow(3) - cusp_delta24(t) * Rat(720);
  CHECK(leech.coeff_q(2) == Rat(0));
  CHECK(leech.coeff_q(4) == Rat(196560));
  CHECK(leech.coeff_q(6) == Rat(16773120));
  // theta of E8 equals (θ2^8 + θ3^8 + θ4^8)/2
  const QSeries e8 = (theta2(t).pow(8) + theta3(t).pow(8) + theta4(t).pow(8)) * Rat(1, 2);
  CHECK((e8 - e4).is_zero());
}

TEST_CASE("truncation follows the product rule") {
  const QSeries a = poly({{4, 1}}, 20), b = poly({{0, 1}}, 12);
  const QSeries p = a * b;
  CHECK(p.truncation() == 16);  // min(20 + 0, 12 + 4)
  CHECK(p.coeff(4) == Rat(1));
  CHECK_THROWS(p.coeff(16));
}

TEST_CASE("inverse and powers") {
  const QSeries t4 = theta4(T);
  CHECK((t4 * t4.inverse() - QSeries::monomial(Rat(1), 0, T)).is_zero());
  CHECK(t4.pow(3) == t4 * t4 * t4);
  CHECK(t4.pow(0) == QSeries::monomial(Rat(1), 0, T));
}

TEST_CASE("pretty printing uses reduced exponents") {
  const QSeries s = poly({{1, 0}, {8, 252}}, 12) + QSeries::monomial(Rat(9, 4), 1, 12);
  CHECK(s.pretty() == "9/4*q^(1/4) + 252*q^2 + O(q^3)");
}

}
