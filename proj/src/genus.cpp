#include "unimod/genus.hpp"

#include "unimod/linalg.hpp"

#include <stdexcept>

namespace unimod {

AverageTheta solve_cj(int n, long horizon) {
  if (n <= 4) throw std::invalid_argument("the average formula needs n > 4");
  const int K = n / 4;
  if (horizon == 0) horizon = 4L * (K + 2);
  if (horizon <= 4L * (K - 1)) throw std::invalid_argument("horizon too small for the defining conditions");
  const long T = 4 * horizon;  // quarters
  const QSeries t3n = theta3(T).pow(n), g = g2(T), h = h2(T);
  std::vector<QSeries> A, B;
  for (int j = 0; j <= K; ++j) {
    A.push_back((t3n * g.pow(j)).truncated(T));
    B.push_back((t3n * h.pow(j)).truncated(T));
  }
  // rows in order of preference: α_0 = 0, normalization, α_4i = 2^(n−2) α_i
  // for i = 1..K−1, then surplus i ≥ K; a row is kept only if it raises the
  // rank (for n ≡ 4 mod 8 the first K + 1 rows are dependent)
  auto condition = [&](long i) {
    RatMatrix r(1, K + 1);
    for (int j = 0; j <= K; ++j) r(0, j) = A[j].coeff_q(4 * i) - pow2(n - 2) * A[j].coeff_q(i);
    return r;
  };
  RatMatrix M(0, K + 1);
  RatMatrix rhs(0, 1);
  auto keep = [&](const RatMatrix& row, const Rat& value) {
    RatMatrix t(M.rows() + 1, K + 1);
    t << M, row;
    if (rank(t) == t.rows()) {
      M = t;
      RatMatrix b(rhs.rows() + 1, 1);
      b << rhs, RatMatrix::Constant(1, 1, value);
      rhs = b;
    }
  };
  RatMatrix r0(1, K + 1), norm(1, K + 1);
  for (int j = 0; j <= K; ++j) {
    r0(0, j) = A[j].coeff_q(0);
    norm(0, j) = A[j].coeff_q(0) + B[j].coeff_q(0);
  }
  keep(r0, Rat(0));
  keep(norm, Rat(1));
  for (long i = 1; M.rows() <= K && 4 * i < horizon; ++i) keep(condition(i), Rat(0));
  if (M.rows() <= K)
    throw std::invalid_argument("solve: singular matrix (rank " + std::to_string(M.rows()) + ")");
  const RatMatrix c = solve(M, rhs);

  AverageTheta out;
  out.dim = n;
  out.horizon = horizon;
  QSeries s(T), alpha(T);
  for (int j = 0; j <= K; ++j) {
    out.c.push_back(c(j, 0));
    s += (A[j] + B[j]) * c(j, 0);
    alpha += A[j] * c(j, 0);
  }
  for (long i = 1; 4 * i < horizon; ++i)
    if (alpha.coeff_q(4 * i) != pow2(n - 2) * alpha.coeff_q(i))
      throw std::runtime_error("consistency check failed: alpha_" + std::to_string(4 * i) + " != 2^" +
                               std::to_string(n - 2) + " alpha_" + std::to_string(i));
  out.series = s;
  return out;
}

MassBound mass_count_bound(const Rat& mass, const AverageTheta& avg) {
  if (mass.sign() <= 0) throw std::invalid_argument("mass must be positive");
  if (avg.series.truncation() <= 8) throw std::invalid_argument("average series must be known through q^2");
  MassBound b;
  b.mass = mass;
  b.small_total = avg.series.coeff_q(1) + avg.series.coeff_q(2);
  if (b.small_total >= Rat(2)) {
    b.vacuous = true;
    return b;
  }
  b.m0_lower = mass * (Rat(1) - b.small_total / Rat(2));
  b.count_lower = b.m0_lower * Rat(2);
  return b;
}

Rat default_mass_33() { return Rat(1407) * pow(Rat(10), 18); }

}  // namespace unimod
