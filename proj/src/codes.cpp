#include "unimod/codes.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

namespace unimod {

BinaryCode::BinaryCode(int length, std::vector<std::uint64_t> rows, std::string name)
    : n_(length), rows_(std::move(rows)), name_(std::move(name)) {
  if (n_ < 1 || n_ > 64) throw std::invalid_argument("code length must be in 1..64");
  const std::uint64_t mask = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
  std::vector<std::uint64_t> echelon;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r] & ~mask) throw std::invalid_argument("generator row " + std::to_string(r + 1) + " is longer than the code");
    std::uint64_t v = rows_[r];
    for (const auto e : echelon)
      if (v & (std::uint64_t{1} << std::countr_zero(e))) v ^= e;
    if (v == 0) throw std::invalid_argument("generator row " + std::to_string(r + 1) + " is linearly dependent");
    echelon.push_back(v);
  }
}

std::string BinaryCode::str() const {
  std::string out;
  for (const auto r : rows_) {
    for (int i = 0; i < n_; ++i) out.push_back((r >> i) & 1 ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::map<int, unsigned long long> weight_enumerator(const BinaryCode& c) {
  const int k = c.dimension();
  if (k > 28)
    throw std::invalid_argument("weight enumeration needs dimension <= 28 (got " + std::to_string(k) +
                                "); use a smaller fixture");
  std::vector<unsigned long long> counts(static_cast<std::size_t>(c.length()) + 1, 0);
  std::uint64_t word = 0;
  counts[0] = 1;
  // Gray-code walk: step i flips the generator at the lowest set bit of i
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    word ^= c.rows()[static_cast<std::size_t>(std::countr_zero(i))];
    ++counts[static_cast<std::size_t>(std::popcount(word))];
  }
  std::map<int, unsigned long long> out;
  for (std::size_t w = 0; w < counts.size(); ++w)
    if (counts[w]) out[static_cast<int>(w)] = counts[w];
  return out;
}

bool is_self_dual(const BinaryCode& c) {
  if (2 * c.dimension() != c.length()) return false;
  const auto& r = c.rows();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i; j < r.size(); ++j)
      if (std::popcount(r[i] & r[j]) % 2) return false;
  return true;
}

bool is_doubly_even(const BinaryCode& c) {
  const auto& r = c.rows();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (std::popcount(r[i]) % 4) return false;
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (std::popcount(r[i] & r[j]) % 2) return false;
  }
  return true;
}

Lattice code_to_odd_lattice(const BinaryCode& c) {
  const int n = c.length();
  if (!is_self_dual(c)) throw std::invalid_argument("code is not self-dual");
  if (!is_doubly_even(c)) throw std::invalid_argument("code is not doubly-even");
  if (n % 8) throw std::invalid_argument("code length is not divisible by 8");
  const int rows = 1 + c.dimension() + 2 * (n - 1);
  RatMatrix gens = RatMatrix::Zero(rows, n);
  int r = 0;
  gens(r, 0) = Rat(-3);
  for (int i = 1; i < n; ++i) gens(r, i) = Rat(1);
  ++r;
  for (const auto row : c.rows()) {
    for (int i = 0; i < n; ++i)
      if ((row >> i) & 1) gens(r, i) = Rat(2);
    ++r;
  }
  // 4(e_0 ± e_i) span all of 4(e_i ± e_j)
  for (int i = 1; i < n; ++i) {
    gens(r, 0) = Rat(4);
    gens(r++, i) = Rat(4);
    gens(r, 0) = Rat(4);
    gens(r++, i) = Rat(-4);
  }
  Lattice L = Lattice::from_generators(gens, Rat(1, 8), c.name().empty() ? "code lattice" : "lattice(" + c.name() + ")");
  const auto chk = check_unimodular(L);
  if (!chk.unimodular()) throw std::runtime_error("code lattice is not unimodular: " + chk.detail);
  return L;
}

BinaryCode rm2_5_fixture() {
  // evaluations of the monomials of degree <= 2 in x_0..x_4 at the 32 points
  std::vector<std::uint64_t> rows;
  auto eval = [](auto&& f) {
    std::uint64_t r = 0;
    for (int p = 0; p < 32; ++p)
      if (f(p)) r |= std::uint64_t{1} << p;
    return r;
  };
  rows.push_back(eval([](int) { return true; }));
  for (int a = 0; a < 5; ++a) rows.push_back(eval([a](int p) { return (p >> a) & 1; }));
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) rows.push_back(eval([a, b](int p) { return ((p >> a) & (p >> b)) & 1; }));
  BinaryCode c(32, rows, "RM(2,5)");
  if (!is_self_dual(c) || !is_doubly_even(c)) throw std::logic_error("RM(2,5) fixture failed its self-check");
  return c;
}

BinaryCode golay_fixture() {
  // cyclic [23,12] code with g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11, plus a parity bit
  const std::uint64_t g = (1u << 0) | (1u << 2) | (1u << 4) | (1u << 5) | (1u << 6) | (1u << 10) | (1u << 11);
  std::vector<std::uint64_t> rows;
  for (int s = 0; s < 12; ++s) {
    std::uint64_t r = g << s;
    if (std::popcount(r) % 2) r |= std::uint64_t{1} << 23;
    rows.push_back(r);
  }
  BinaryCode c(24, rows, "Golay");
  if (!is_self_dual(c) || !is_doubly_even(c)) throw std::logic_error("Golay fixture failed its self-check");
  return c;
}

BinaryCode hamming8_fixture() {
  const std::vector<std::uint64_t> rows{0b00001111, 0b00111100, 0b11110000, 0b10101010};
  BinaryCode c(8, rows, "Hamming[8,4]");
  if (!is_self_dual(c) || !is_doubly_even(c)) throw std::logic_error("Hamming fixture failed its self-check");
  return c;
}

BinaryCode parse_code(std::istream& in, std::string name) {
  std::vector<std::uint64_t> rows;
  int length = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string bits;
    for (const char ch : line)
      if (ch != ' ' && ch != '\t' && ch != '\r') bits.push_back(ch);
    if (bits.empty() || bits[0] == '#') continue;
    if (bits.size() > 64) throw std::invalid_argument("line " + std::to_string(lineno) + ": row longer than 64");
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') r |= std::uint64_t{1} << i;
      else if (bits[i] != '0')
        throw std::invalid_argument("line " + std::to_string(lineno) + ": unexpected character '" +
                                    std::string(1, bits[i]) + "'");
    }
    if (length < 0) length = static_cast<int>(bits.size());
    else if (length != static_cast<int>(bits.size()))
      throw std::invalid_argument("line " + std::to_string(lineno) + ": row length " + std::to_string(bits.size()) +
                                  " differs from " + std::to_string(length));
    rows.push_back(r);
  }
  if (length < 0) throw std::invalid_argument("code file has no rows");
  return BinaryCode(length, std::move(rows), std::move(name));
}

BinaryCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read code file " + path);
  return parse_code(in, path);
}

}  // namespace unimod
