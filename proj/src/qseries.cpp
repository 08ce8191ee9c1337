#include "unimod/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace unimod {

QSeries::QSeries(Terms terms, long truncation) : trunc_(truncation) {
  for (auto& [e, c] : terms)
    if (e < trunc_ && !c.is_zero()) terms_.emplace(e, std::move(c));
}

QSeries QSeries::monomial(const Rat& c, long e, long truncation) {
  return QSeries(Terms{{e, c}}, truncation);
}

Rat QSeries::coeff(long e) const {
  if (e >= trunc_)
    throw std::out_of_range("coefficient at q^(" + std::to_string(e) + "/4) is beyond truncation " +
                            std::to_string(trunc_));
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void QSeries::set(long e, Rat c) {
  if (e >= trunc_) return;
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = std::move(c);
}

QSeries QSeries::truncated(long t) const {
  QSeries out(*this);
  out.trunc_ = std::min(trunc_, t);
  out.terms_.erase(out.terms_.lower_bound(out.trunc_), out.terms_.end());
  return out;
}

QSeries QSeries::substitute_q2() const {
  QSeries out(2 * trunc_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(2 * e, c);
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  *this = truncated(o.trunc_);
  for (const auto& [e, c] : o.terms_) {
    if (e >= trunc_) break;
    set(e, coeff(e) + c);
  }
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  // a is known below Ta and starts at va; the product is known below min(Ta + vb, Tb + va)
  const long t = std::min(a.trunc_ + b.valuation(), b.trunc_ + a.valuation());
  QSeries out(t);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const long e = ea + eb;
      if (e >= t) break;
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

QSeries QSeries::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return monomial(Rat(1), 0, trunc_);
  std::optional<QSeries> result;
  QSeries base = *this;
  while (true) {
    if (k & 1) result = result ? *result * base : base;
    k >>= 1;
    if (k == 0) break;
    base = base * base;
  }
  return *result;
}

QSeries QSeries::inverse() const {
  if (terms_.empty() || terms_.begin()->first != 0 || valuation() != 0)
    throw std::domain_error("series is not invertible at this order");
  const Rat c0 = terms_.begin()->second;
  const Rat inv0 = Rat(1) / c0;
  QSeries out(trunc_);
  out.terms_[0] = inv0;
  for (long e = 1; e < trunc_; ++e) {
    Rat s;
    for (auto it = std::next(terms_.begin()); it != terms_.end() && it->first <= e; ++it) {
      const auto r = out.terms_.find(e - it->first);
      if (r != out.terms_.end()) s += it->second * r->second;
    }
    if (!s.is_zero()) out.terms_[e] = -s * inv0;
  }
  return out;
}

bool QSeries::agrees_with(const QSeries& o) const {
  const long t = std::min(trunc_, o.trunc_);
  return truncated(t).terms_ == o.truncated(t).terms_;
}

std::string QSeries::str() const {
  std::ostringstream os;
  for (const auto& [e, c] : terms_) os << c << " * q^(" << e << "/4) + ";
  os << "O(q^(" << trunc_ << "/4))";
  return os.str();
}

namespace {

std::string exponent_text(long e) {
  const long g = std::gcd(e < 0 ? -e : e, 4L);
  const long num = e / (g == 0 ? 1 : g), den = 4 / (g == 0 ? 4 : g);
  if (den == 1) return std::to_string(num);
  return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace

std::string QSeries::pretty(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) {
    if (n == max_terms) {
      os << " + ...";
      break;
    }
    if (n > 0) os << (c.sign() < 0 ? " - " : " + ");
    const Rat a = n > 0 ? abs(c) : c;
    if (e == 0)
      os << a;
    else if (a == Rat(1))
      os << "q^" << exponent_text(e);
    else
      os << a << "*q^" << exponent_text(e);
    ++n;
  }
  if (n == 0) os << "0";
  os << " + O(q^" << exponent_text(trunc_) << ")";
  return os.str();
}

// ---- constructors ---------------------------------------------------------

QSeries theta3(long T) {
  QSeries::Terms t;
  for (long m = 0; 4 * m * m < T; ++m) t[4 * m * m] = Rat(m == 0 ? 1 : 2);
  return QSeries(std::move(t), T);
}

QSeries theta4(long T) {
  QSeries::Terms t;
  for (long m = 0; 4 * m * m < T; ++m) t[4 * m * m] = Rat(m == 0 ? 1 : (m % 2 ? -2 : 2));
  return QSeries(std::move(t), T);
}

QSeries theta2(long T) {
  QSeries::Terms t;
  for (long m = 0; (2 * m + 1) * (2 * m + 1) < T; ++m) t[(2 * m + 1) * (2 * m + 1)] = Rat(2);
  return QSeries(std::move(t), T);
}

namespace {

// (1 + sign·q^(e/4))^power, truncated at T
QSeries binomial_factor(long e, int sign, long power, long T) {
  return QSeries(QSeries::Terms{{0, Rat(1)}, {e, Rat(sign)}}, T).pow(power);
}

}  // namespace

QSeries delta8(long T) {
  // each factor (1 − q^k)^8 only matters while 4k < T
  QSeries r = QSeries::monomial(Rat(1), 4, T);
  for (long m = 1; 4 * (2 * m - 1) < T; ++m) {
    r = r * binomial_factor(4 * (2 * m - 1), -1, 8, T);
    if (16 * m < T) r = r * binomial_factor(16 * m, -1, 8, T);
  }
  return r.truncated(T);
}

QSeries g2(long T) {
  QSeries num = QSeries::monomial(Rat(16), 4, T);
  QSeries den = QSeries::monomial(Rat(1), 0, T);
  for (long m = 1; 4 * (2 * m - 1) < T; ++m) {
    if (8 * m < T) num = num * binomial_factor(8 * m, +1, 8, T);
    den = den * binomial_factor(4 * (2 * m - 1), +1, 8, T);
  }
  return (num * den.inverse()).truncated(T);
}

QSeries h2(long T) {
  QSeries num = QSeries::monomial(Rat(1), 0, T);
  QSeries den = QSeries::monomial(Rat(1), 0, T);
  for (long m = 1; 4 * (2 * m - 1) < T; ++m) {
    num = num * binomial_factor(4 * (2 * m - 1), -1, 8, T);
    den = den * binomial_factor(4 * (2 * m - 1), +1, 8, T);
  }
  return (num * den.inverse()).truncated(T);
}

QSeries eisenstein_e4(long T) {
  QSeries::Terms t{{0, Rat(1)}};
  for (long m = 1; 8 * m < T; ++m) {
    long s = 0;
    for (long d = 1; d <= m; ++d)
      if (m % d == 0) s += d * d * d;
    t[8 * m] = Rat(240 * s);
  }
  return QSeries(std::move(t), T);
}

QSeries cusp_delta24(long T) {
  QSeries r = QSeries::monomial(Rat(1), 8, T);
  for (long m = 1; 8 * m < T; ++m) r = r * binomial_factor(8 * m, -1, 24, T);
  return r.truncated(T);
}

}  // namespace unimod
