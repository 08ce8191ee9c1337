#include "unimod/rational.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace unimod {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  std::string buf(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(buf, 10) == 0;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto fail = [&]() -> Rat {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    Int p, q;
    if (!parse_int(text.substr(0, slash), p) || !parse_int(text.substr(slash + 1), q) || q == 0)
      return fail();
    return Rat(p, q);
  }
  Int whole;
  if (parse_int(text, whole)) return Rat(whole);

  // exact decimal: [sign] digits [. digits] [e|E [sign] digits]
  std::string_view mant = text;
  long exp10 = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    Int ex;
    if (!parse_int(text.substr(e + 1), ex) || !ex.fits_slong_p()) return fail();
    exp10 = ex.get_si();
    mant = text.substr(0, e);
  }
  std::string digits;
  bool neg = false;
  std::size_t i = 0;
  if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
    neg = mant[0] == '-';
    i = 1;
  }
  bool seen_point = false, seen_digit = false;
  for (; i < mant.size(); ++i) {
    const char c = mant[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exp10;
    } else {
      return fail();
    }
  }
  if (!seen_digit) return fail();
  Int m(digits, 10);
  if (neg) m = -m;
  Int ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  return exp10 >= 0 ? Rat(Int(m * ten_pow)) : Rat(m, ten_pow);
}

Int Rat::floor() const {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

Int Rat::ceil() const {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

long Rat::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::range_error("rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::decimal(int sig) const {
  if (is_zero()) return "0";
  // scale into [10^(sig-1), 10^sig) exactly, then round half away from zero
  Rat a = abs(*this);
  long e = static_cast<long>(std::floor(std::log10(a.to_double())));
  auto scaled = [&](long ex) {
    const long shift = sig - 1 - ex;
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    return shift >= 0 ? a * Rat(t) : a / Rat(t);
  };
  Int lo, hi;
  mpz_ui_pow_ui(lo.get_mpz_t(), 10, static_cast<unsigned long>(sig - 1));
  hi = lo * 10;
  Rat s = scaled(e);
  while (s < Rat(lo)) s = scaled(--e);
  while (s >= Rat(hi)) s = scaled(++e);
  Int m = (s + Rat(1, 2)).floor();
  if (m == hi) {
    m = lo;
    ++e;
  }
  std::string ds = m.get_str();
  std::ostringstream os;
  if (sign() < 0) os << '-';
  if (e >= -4 && e < sig) {
    // plain notation, as printf's %g would choose
    if (e < 0) os << "0." << std::string(static_cast<std::size_t>(-e - 1), '0') << ds;
    else {
      os << ds.substr(0, static_cast<std::size_t>(e) + 1);
      if (ds.size() > static_cast<std::size_t>(e) + 1) os << '.' << ds.substr(static_cast<std::size_t>(e) + 1);
    }
    return os.str();
  }
  os << ds[0];
  if (ds.size() > 1) os << '.' << ds.substr(1);
  os << 'e' << e;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow2(long e) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rat(p) : Rat(Int(1), p);
}

Rat pow(const Rat& r, unsigned long e) {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), r.raw().get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), r.raw().get_den_mpz_t(), e);
  return Rat(out);
}

std::string to_string(const Int& v) { return v.get_str(); }

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace unimod
