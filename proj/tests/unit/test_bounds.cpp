#include <doctest.h>

#include "unimod/bounds.hpp"

using namespace unimod;

namespace {

std::vector<Rat> ints(std::initializer_list<long> v) {
  std::vector<Rat> r;
  for (const long x : v) r.emplace_back(x);
  return r;
}

const Branch* branch_with(const FeasibilityReport& r, const Rat& a_last) {
  for (const auto& b : r.branches)
    if (!b.coeffs.empty() && b.coeffs.back() == a_last) return &b;
  return nullptr;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("odd scan matches the Python oracle for n = 1..48") {
  // frozen from tests/oracles/scan_oracle.py
  const int expected[49] = {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3,
                            3, 3, 3, 3, 3, 3, 4, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 5};
  for (int n = 1; n <= 48; ++n) {
    CAPTURE(n);
    CHECK(mu_upper(n).odd_mu == expected[n]);
  }
}

TEST_CASE("prefix solve") {
  const ThetaFit f = solve_prefix(33, 4);
  REQUIRE(f.coeffs.size() == 5);
  CHECK(*f.coeffs[0] == Rat(1));
  CHECK(*f.coeffs[1] == Rat(-66));
  CHECK(*f.coeffs[2] == Rat(660));
  CHECK(*f.coeffs[3] == Rat(-880));
  CHECK_FALSE(f.coeffs[4]);
  CHECK(f.free_indices() == std::vector<int>{4});
  CHECK_THROWS(solve_prefix(9, 3));  // only a_0, a_1 exist
  CHECK_THROWS(lattice_theta(f, 20));
}

TEST_CASE("n = 9, mu = 2 is non-integral") {
  const auto r = feasibility_scan(9, 2);
  CHECK(r.verdict == Verdict::Infeasible);
  CHECK(r.reason == Reason::NonIntegral);
  REQUIRE(r.branches.size() == 1);
  const Branch& b = r.branches[0];
  CHECK(b.coeffs == ints({1, -18}));
  CHECK(b.lattice.coeff_q(2) == Rat(252));
  CHECK(b.shadow.coeff(1) == Rat(9, 4));
  CHECK(b.shadow.valuation() == 1);
}

TEST_CASE("n = 33: the a_4 dichotomy and the rank obstruction") {
  const ThetaFit f = solve_prefix(33, 4);
  const long T = 4 * 5;
  for (const long a4 : {0L, 1L, 32768L, 65536L}) {
    const QSeries L = lattice_theta(f.assigned({Rat(a4)}), T);
    const QSeries S = shadow_theta(f.assigned({Rat(a4)}), 12);
    CHECK(L.coeff_q(4) == Rat(70290 + a4));
    CHECK(S.coeff(1) == Rat(a4, 32768));
    CHECK(S.coeff(9) == Rat(110) - Rat(63 * a4, 32768));
  }
  const auto r = feasibility_scan(33, 4);
  CHECK(r.verdict == Verdict::Infeasible);
  CHECK(r.survivors == 0);
  CHECK(r.rejected == 2);
  const Branch* big = branch_with(r, Rat(65536));
  const Branch* zero = branch_with(r, Rat(0));
  REQUIRE(big);
  REQUIRE(zero);
  CHECK(big->rejection == Reason::Negative);
  CHECK(*big->violated_exponent == 9);
  CHECK(*big->violated_value == Rat(-16));
  CHECK(zero->rejection == Reason::RankObstruction);
  REQUIRE(zero->gram);
  CHECK(zero->gram->contradiction);
  CHECK(zero->gram->allowed == std::vector<Rat>{Rat(1, 4)});
  CHECK(zero->gram->gram_rank == 55);
  CHECK(zero->shadow.coeff(9) == Rat(110));
}

TEST_CASE("gram obstruction") {
  // 55 vectors of norm 9/4 in one coset of a 33-dim lattice of min 4
  const auto g = gram_obstruction(33, Rat(9, 4), 55, 4);
  CHECK(g.contradiction);
  CHECK(g.allowed == std::vector<Rat>{Rat(1, 4)});
  CHECK(g.gram_rank == 55);
  // 32 orthogonal vectors of norm 2 fit exactly in dimension 32
  const auto h = gram_obstruction(32, Rat(2), 32, 4);
  CHECK_FALSE(h.contradiction);
  CHECK(h.allowed == std::vector<Rat>{Rat(0)});
  CHECK(h.gram_rank == 32);
  CHECK(gram_obstruction(32, Rat(2), 33, 4).contradiction);
  // several admissible inner products: nothing can be concluded
  const auto w = gram_obstruction(20, Rat(5), 1000, 2);
  CHECK_FALSE(w.contradiction);
  CHECK(w.allowed.size() > 1);
}

TEST_CASE("gram obstruction is sound on small realizable cases") {
  // k ≤ n pairwise orthogonal vectors of norm s always exist (scaled unit
  // vectors), so T_set = {0} with k ≤ n must never be a contradiction; a
  // singleton {b}, b > 0, with k > n always is
  int orthogonal = 0, positive = 0;
  for (int n = 1; n <= 6; ++n)
    for (int s4 = 1; s4 <= 16; ++s4)
      for (int mu = 1; mu <= 6; ++mu) {
        const Rat s(s4, 4);
        for (long k = 2; k <= n + 2; ++k) {
          const auto g = gram_obstruction(n, s, k, mu);
          if (g.allowed.size() != 1) {
            CHECK_FALSE(g.contradiction);
            continue;
          }
          const Rat b = g.allowed[0];
          CAPTURE(n);
          CAPTURE(s4);
          CAPTURE(mu);
          CAPTURE(k);
          if (b.is_zero() && k <= n) {
            ++orthogonal;
            CHECK_FALSE(g.contradiction);
          }
          if (b.sign() > 0 && k > n) {
            ++positive;
            CHECK(g.contradiction);
          }
        }
      }
  CHECK(orthogonal > 0);
  CHECK(positive > 0);
}

TEST_CASE("n = 13 needs the rank argument") {
  const auto r = feasibility_scan(13, 2);
  CHECK(r.verdict == Verdict::Infeasible);
  CHECK(r.reason == Reason::RankObstruction);
}

TEST_CASE("n = 32 feasible branch") {
  const auto r = feasibility_scan(32, 4);
  CHECK(r.verdict == Verdict::Feasible);
  const Branch* b = r.first_survivor();
  REQUIRE(b);
  CHECK(b->coeffs == ints({1, -64, 576, -1024, 0}));
  CHECK(b->lattice.coeff_q(4) == Rat(81344));
  CHECK(b->lattice.coeff_q(5) == Rat(2097152));
  CHECK(b->lattice.coeff_q(6) == Rat(32251904));
  CHECK(b->shadow.coeff(8) == Rat(64));
  CHECK(b->shadow.coeff(16) == Rat(144896));
  CHECK(b->shadow.coeff(24) == Rat(64797440));
  CHECK(b->shadow.valuation() == 8);
}

TEST_CASE("n = 34 open case") {
  const auto r = feasibility_scan(34, 4);
  CHECK(r.verdict == Verdict::Feasible);
  const Branch* b = r.first_survivor();
  REQUIRE(b);
  CHECK(b->coeffs == ints({1, -68, 748, -816, 0}));
  CHECK(b->lattice.coeff_q(4) == Rat(60180));
  CHECK(b->lattice.coeff_q(5) == Rat(2075904));
  CHECK(b->shadow.coeff(10) == Rat(204));
  CHECK(b->shadow.coeff(18) == Rat(758200));
  CHECK(b->shadow.coeff(26) == Rat(274625820));
  CHECK(b->shadow.valuation() == 10);
}

TEST_CASE("survivors satisfy every stated condition") {
  for (const auto& [n, mu] : {std::pair{23, 3}, {30, 3}, {36, 4}, {41, 4}}) {
    CAPTURE(n);
    ScanOptions o;
    o.exhaustive = true;
    const auto r = feasibility_scan(n, mu, ScanWindow::defaults(n, mu), o);
    REQUIRE(r.survivors > 0);
    for (const auto& b : r.branches) {
      if (b.rejection != Reason::None) continue;
      CHECK(b.lattice.coeff(0) == Rat(1));
      for (const auto& [e, c] : b.lattice.terms()) {
        CHECK(c.is_integer());
        CHECK(c.sign() >= 0);
        if (e > 0) {
          CHECK(e >= 4 * mu);
          CHECK(c.num() % 2 == 0);
        }
      }
      for (const auto& [e, c] : b.shadow.terms()) {
        CHECK(c.is_integer());
        CHECK(c.sign() >= 0);
        CHECK(c.num() % 2 == 0);
        CHECK(e % 8 == n % 8);  // shadow norms are n/4 mod 2
      }
    }
  }
}

TEST_CASE("even extremal scan") {
  CHECK(!even_extremal_scan(12));
  const auto e8 = even_extremal_scan(8);
  REQUIRE(e8);
  CHECK(e8->mu == 2);
  CHECK(even_extremal_scan(24)->mu == 4);
  CHECK(even_extremal_scan(32)->mu == 4);
  CHECK(even_extremal_scan(48)->mu == 6);
  CHECK(even_extremal_scan(24)->series.coeff_q(4) == Rat(196560));
}

TEST_CASE("certificate is the larger of the two scans") {
  const auto c24 = mu_upper(24);
  CHECK(c24.odd_mu == 3);
  CHECK(c24.even_mu == 4);
  CHECK(c24.mu_upper == 4);
  const auto c7 = mu_upper(7);
  CHECK(c7.mu_upper == 1);
  CHECK(c7.odd_reports.back().verdict == Verdict::Feasible);
  CHECK_THROWS(mu_upper(0));
  CHECK_THROWS(mu_upper(49));
}

TEST_CASE("table1 upper bounds match the known values") {
  const int table[41] = {0, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 2, 1, 2, 2, 2, 2, 2, 2, 2,
                         2, 2, 3, 4, 3, 3, 3, 3, 3, 3, 3, 4, 3, 4, 4, 4, 4, 4, 4, 4};
  const auto rows = table1(1, 40, {}, 4);
  REQUIRE(rows.size() == 40);
  for (const auto& row : rows) {
    CAPTURE(row.cert.dim);
    CHECK(row.cert.mu_upper == table[row.cert.dim]);
    REQUIRE(row.lower);
    CHECK(row.lower->mu <= row.cert.mu_upper);
  }
  CHECK(known_lower_bound(25)->mu == 2);
  CHECK(known_lower_bound(25)->external);
  CHECK_FALSE(known_lower_bound(30)->external);
}

TEST_CASE("names") {
  CHECK(to_string(Verdict::Feasible) == "feasible");
  CHECK(to_string(Reason::RankObstruction) == "rank obstruction");
}

}
