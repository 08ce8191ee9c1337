// Truncated formal q-series with exact rational coefficients.
//
// Exponents are stored as integers in units of 1/4 ("quarters"): the key e
// stands for q^(e/4). A series is known below its truncation; terms at or
// above it are unknown, not zero. Integer-exponent series are the special
// case e ≡ 0 (mod 4), and shadow series live on the quarter grid.
#pragma once

#include "unimod/rational.hpp"

#include <map>
#include <string>

namespace unimod {

class QSeries {
public:
  using Terms = std::map<long, Rat>;

  QSeries() = default;
  /// Zero series known below `truncation`.
  explicit QSeries(long truncation) : trunc_(truncation) {}
  QSeries(Terms terms, long truncation);

  /// c·q^(e/4) known below `truncation`.
  static QSeries monomial(const Rat& c, long e, long truncation);

  long truncation() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  /// Coefficient at q^(e/4); throws if e is at or beyond the truncation.
  Rat coeff(long e) const;
  /// Coefficient at the integer power q^m.
  Rat coeff_q(long m) const { return coeff(4 * m); }
  bool is_zero() const { return terms_.empty(); }
  /// Smallest stored exponent, or the truncation for a (known) zero series.
  long valuation() const { return terms_.empty() ? trunc_ : terms_.begin()->first; }

  QSeries truncated(long t) const;
  /// q → q^2: doubles every quarter exponent and the truncation.
  QSeries substitute_q2() const;
  QSeries pow(long k) const;
  QSeries inverse() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rat& c);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rat& c) { return a *= c; }
  friend QSeries operator*(const Rat& c, QSeries a) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator-() const { return *this * Rat(-1); }

  /// Coefficient-wise equality on the common known range.
  bool agrees_with(const QSeries& o) const;
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

  /// "c * q^(e/4) + ... + O(q^(T/4))"
  std::string str() const;
  /// Reduced exponents, e.g. "9/4*q^(1/4) + 252*q^2 + O(q^3)"; at most `max_terms` terms.
  std::string pretty(std::size_t max_terms = 8) const;

private:
  void set(long e, Rat c);

  Terms terms_;
  long trunc_ = 0;
};

// Jacobi theta series, eta-type products and the level-one forms used for
// even lattices. T is always a truncation in quarter units.
QSeries theta2(long T);
QSeries theta3(long T);
QSeries theta4(long T);
/// q ∏ (1 − q^(2m−1))^8 (1 − q^(4m))^8
QSeries delta8(long T);
/// 16 q ∏ ((1 + q^(2m)) / (1 + q^(2m−1)))^8
QSeries g2(long T);
/// ∏ ((1 − q^(2m−1)) / (1 + q^(2m−1)))^8
QSeries h2(long T);
/// 1 + 240 Σ σ_3(m) x^m in the nome x = q^2.
QSeries eisenstein_e4(long T);
/// x ∏ (1 − x^m)^24 in the nome x = q^2.
QSeries cusp_delta24(long T);

}  // namespace unimod
