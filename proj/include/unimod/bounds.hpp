// Upper bounds on the highest minimal norm of odd and even unimodular lattices.
//
// An odd unimodular theta series is written in the basis Δ8^j·θ3^(n−8j),
// j = 0..[n/8]; the same coefficients give the shadow series through
// (−1)^j 16^(−j) θ4(q²)^(8j) θ2^(n−8j). A candidate minimal norm μ fixes
// a_0..a_{μ−1}; the remaining coefficients are resolved shadow term by
// shadow term and each branch is tested against the integrality, sign,
// parity and shadow-count conditions plus the Gram-rank obstruction.
#pragma once

#include "unimod/qseries.hpp"
#include "unimod/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unimod {

/// Coefficients a_0..a_{[n/8]}; std::nullopt marks a FREE entry.
struct ThetaFit {
  int dim = 0;
  std::vector<std::optional<Rat>> coeffs;

  static ThetaFit resolved(int dim, std::vector<Rat> a);
  bool is_resolved() const;
  std::vector<int> free_indices() const;
  /// Copy with the FREE entries replaced, in increasing index order.
  ThetaFit assigned(const std::vector<Rat>& free_values) const;
};

/// a_0..a_{μ−1} making the expansion 1 + 0q + ... + 0q^(μ−1); the rest FREE.
ThetaFit solve_prefix(int n, int mu);

/// Σ a_j Δ8^j θ3^(n−8j), truncated at T quarters.
QSeries lattice_theta(const ThetaFit& fit, long T);
/// Σ (−1)^j 16^(−j) a_j θ4(q²)^(8j) θ2^(n−8j), truncated at T quarters.
QSeries shadow_theta(const ThetaFit& fit, long T);

struct GramVerdict {
  bool contradiction = false;
  /// Inner products admissible for two distinct, non-antipodal shadow
  /// vectors of norm s in one coset.
  std::vector<Rat> allowed;
  /// Gram matrix (s − b)I + bJ when `allowed` is a singleton {b}.
  std::optional<Rat> diagonal, off_diagonal;
  long gram_rank = 0;
  std::string detail;
};

/// Can k shadow vectors of norm s in one coset fit in n dimensions when the
/// lattice has minimal norm ≥ mu?
GramVerdict gram_obstruction(int n, const Rat& s, long k, int mu);

enum class Verdict { Feasible, Infeasible };

enum class Reason {
  None,
  NonIntegral,
  Negative,
  Parity,
  ShadowCount,
  RankObstruction,
  ResidualFree,
};

std::string to_string(Verdict v);
std::string to_string(Reason r);

/// One fully (or partially, when residual) resolved choice of free parameters.
struct Branch {
  std::vector<Rat> coeffs;  // a_0..a_J (resolved entries only when residual)
  Reason rejection = Reason::None;
  std::string detail;
  /// Quarter exponent and value (or k for rank failures) of the violated quantity.
  std::optional<long> violated_exponent;
  std::optional<Rat> violated_value;
  bool lattice_side = false;
  std::optional<GramVerdict> gram;
  QSeries lattice, shadow;
};

struct ScanWindow {
  long shadow_trunc = 0;   // quarters; default n + 32
  long lattice_trunc = 0;  // quarters; default covers q^0..q^(μ+4)
  static ScanWindow defaults(int n, int mu);
};

struct ScanOptions {
  /// Keep resolving after the first surviving branch.
  bool exhaustive = false;
  /// Limit on stored Branch records (counts are always exact).
  std::size_t max_recorded = 64;
};

struct FeasibilityReport {
  int dim = 0;
  int mu = 0;
  ScanWindow window;
  Verdict verdict = Verdict::Infeasible;
  Reason reason = Reason::None;
  ThetaFit prefix;
  std::vector<Branch> branches;
  std::size_t survivors = 0;
  std::size_t rejected = 0;
  /// Indices j of a_j that the window could not resolve (Feasible-with-residual).
  std::vector<int> residual_free;

  const Branch* first_survivor() const;
};

FeasibilityReport feasibility_scan(int n, int mu, const ScanWindow& window, const ScanOptions& opts = {});
inline FeasibilityReport feasibility_scan(int n, int mu) {
  return feasibility_scan(n, mu, ScanWindow::defaults(n, mu));
}

struct EvenScan {
  int mu = 0;
  QSeries series;  // in q (norms), even exponents only
};

/// Largest even μ admitting a weight-n/2 level-one form 1 + O(q^μ) with
/// nonnegative even coefficients; std::nullopt unless 8 | n.
std::optional<EvenScan> even_extremal_scan(int n);

struct BoundCertificate {
  int dim = 0;
  int mu_upper = 0;
  int odd_mu = 0;
  std::optional<int> even_mu;
  std::vector<FeasibilityReport> odd_reports;  // in decreasing μ, last one Feasible
  std::optional<EvenScan> even;
};

struct ScanConfig {
  /// Overrides the shadow truncation (quarters) when > 0.
  long shadow_trunc = 0;
};

BoundCertificate mu_upper(int n, const ScanConfig& cfg = {});

/// Best known lower bound for n ≤ 40 with its provenance; the scanner never
/// produces these.
struct KnownLowerBound {
  int mu = 0;
  std::string provenance;
  bool external = false;
};
std::optional<KnownLowerBound> known_lower_bound(int n);

struct TableRow {
  BoundCertificate cert;
  std::optional<KnownLowerBound> lower;
};

/// Certificates for n = from..to; `workers` > 1 fans dimensions out.
std::vector<TableRow> table1(int from, int to, const ScanConfig& cfg = {}, unsigned workers = 1);

}  // namespace unimod
