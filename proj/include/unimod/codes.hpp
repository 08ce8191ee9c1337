// Binary linear codes of length ≤ 64 and the odd-lattice construction
// from doubly-even self-dual codes.
#pragma once

#include "unimod/lattice.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace unimod {

class BinaryCode {
public:
  BinaryCode() = default;
  /// Bit i of a row is coordinate i. Rows must be linearly independent.
  BinaryCode(int length, std::vector<std::uint64_t> rows, std::string name = {});

  int length() const { return n_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  const std::string& name() const { return name_; }

  /// Rows as 0/1 strings.
  std::string str() const;

private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
  std::string name_;
};

/// weight → number of codewords; needs dimension ≤ 28.
std::map<int, unsigned long long> weight_enumerator(const BinaryCode& c);
bool is_self_dual(const BinaryCode& c);
bool is_doubly_even(const BinaryCode& c);

/// Spanned by c(−3, 1^(n−1)), c·2u for u ∈ C and c(±4, ±4, 0^(n−2)), c = 1/√8.
Lattice code_to_odd_lattice(const BinaryCode& c);

/// Second-order Reed–Muller code RM(2,5), [32,16,8].
BinaryCode rm2_5_fixture();
/// Extended binary Golay code, [24,12,8].
BinaryCode golay_fixture();
/// Extended Hamming code, [8,4,4].
BinaryCode hamming8_fixture();

/// One 0/1 row per line; blank lines and lines starting with '#' are skipped.
/// Errors name the offending line.
BinaryCode parse_code(std::istream& in, std::string name = {});
BinaryCode load_code(const std::string& path);

}  // namespace unimod
