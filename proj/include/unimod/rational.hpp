// Exact rational scalar used throughout the library.
//
// Rat is a value type over GMP's mpq_class, always kept in lowest terms with a
// positive denominator. It deliberately has no expression templates so it can
// be used as an Eigen scalar.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace unimod {

using Int = mpz_class;

class Rat {
public:
  Rat() = default;
  Rat(int v) : v_(v) {}
  Rat(long v) : v_(v) {}
  Rat(long long v) : v_(static_cast<long>(v)) {}
  Rat(const Int& v) : v_(v) {}
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p/q", an integer, or an exact decimal such as "1.407e21".
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Int floor() const;
  Int ceil() const;
  double to_double() const { return v_.get_d(); }
  long to_long() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  /// Decimal rendering with `sig` significant digits, e.g. "3.07480e-5".
  std::string decimal(int sig = 6) const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { Rat r; r.v_ = -v_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// 2^e for any integer e (negative allowed).
Rat pow2(long e);
/// r^e for e >= 0.
Rat pow(const Rat& r, unsigned long e);

std::string to_string(const Int& v);
Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

}  // namespace unimod

namespace Eigen {
template <>
struct NumTraits<unimod::Rat> : GenericNumTraits<unimod::Rat> {
  typedef unimod::Rat Real;
  typedef unimod::Rat NonInteger;
  typedef unimod::Rat Nested;
  typedef unimod::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 20
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
