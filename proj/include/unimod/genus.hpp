// Genus-average theta series of odd unimodular lattices and the mass
// bound on the number of lattices without vectors of norm 1 or 2.
#pragma once

#include "unimod/qseries.hpp"
#include "unimod/rational.hpp"

#include <vector>

namespace unimod {

/// θ3^n Σ c_j (g2^j + h2^j). α_i is the q^i coefficient of θ3^n Σ c_j g2^j.
struct AverageTheta {
  int dim = 0;
  std::vector<Rat> c;   // c_0..c_[n/4]
  QSeries series;       // integer powers of q
  long horizon = 0;     // the conditions α_4i = 2^(n−2) α_i were checked for 4i < horizon
};

/// Solves α_0 = 0, α_4i = 2^(n−2) α_i (i = 1..[n/4]−1) and constant term 1,
/// then checks the remaining conditions below `horizon` (in powers of q;
/// 0 means 4([n/4] + 2)).
AverageTheta solve_cj(int n, long horizon = 0);

struct MassBound {
  Rat mass;
  Rat small_total;  // A1 + A2
  Rat m0_lower;     // M (1 − (A1 + A2)/2)
  Rat count_lower;  // 2 M0
  bool vacuous = false;
};

MassBound mass_count_bound(const Rat& mass, const AverageTheta& avg);

/// 1.407 × 10^21, the four-digit value of the dimension-33 mass.
Rat default_mass_33();

}  // namespace unimod
