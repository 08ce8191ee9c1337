#include <doctest.h>

#include "unimod/codes.hpp"

#include <sstream>

using namespace unimod;

TEST_SUITE("codes") {

TEST_CASE("RM(2,5) weight enumerator") {
  const BinaryCode c = rm2_5_fixture();
  CHECK(c.length() == 32);
  CHECK(c.dimension() == 16);
  CHECK(is_self_dual(c));
  CHECK(is_doubly_even(c));
  const auto w = weight_enumerator(c);
  CHECK(w.at(0) == 1);
  CHECK(w.at(8) == 620);
  CHECK(w.at(12) == 13888);
  CHECK(w.at(16) == 36518);
  CHECK(w.at(32) == 1);
}

TEST_CASE("Golay weight enumerator") {
  const auto w = weight_enumerator(golay_fixture());
  CHECK(w.at(8) == 759);
  CHECK(w.at(12) == 2576);
  CHECK(w.at(16) == 759);
  CHECK(w.at(24) == 1);
  CHECK(w.size() == 5);
}

TEST_CASE("Hamming [8,4,4]") {
  const BinaryCode h = hamming8_fixture();
  CHECK(is_self_dual(h));
  CHECK(weight_enumerator(h).at(4) == 14);
}

TEST_CASE("weights sum to 2^k") {
  for (const auto& c : {rm2_5_fixture(), golay_fixture(), hamming8_fixture()}) {
    unsigned long long total = 0;
    for (const auto& [k, v] : weight_enumerator(c)) total += v;
    CHECK(total == (1ULL << c.dimension()));
  }
}

TEST_CASE("code lattices") {
  const Lattice L = code_to_odd_lattice(rm2_5_fixture());
  CHECK(L.dim() == 32);
  const auto chk = check_unimodular(L);
  CHECK(chk.parity == Parity::Odd);
  CHECK(minimal_norm(L) == Rat(4));
  // the n = 24 case is the Leech lattice, which is even
  const Lattice leech = code_to_odd_lattice(golay_fixture());
  CHECK(check_unimodular(leech).parity == Parity::Even);
  CHECK(minimal_norm(leech) == Rat(4));
}

TEST_CASE("a code that is not doubly-even self-dual is refused") {
  const BinaryCode rep(4, {0b1111}, "repetition");
  CHECK_FALSE(is_self_dual(rep));
  CHECK_THROWS_AS(code_to_odd_lattice(rep), std::invalid_argument);
}

TEST_CASE("dependent rows are rejected") {
  CHECK_THROWS(BinaryCode(4, {0b0011, 0b1100, 0b1111}));
  CHECK_THROWS(BinaryCode(3, {0b1000}));
}

TEST_CASE("parse_code") {
  std::istringstream in("# extended Hamming code\n00001111\n\n00111100\n11110000\n10101010\n");
  const BinaryCode c = parse_code(in, "h8");
  CHECK(c.dimension() == 4);
  CHECK(weight_enumerator(c) == weight_enumerator(hamming8_fixture()));
  std::istringstream bad("0101\n010\n");
  try {
    parse_code(bad);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream junk("01x1\n");
  CHECK_THROWS(parse_code(junk));
}

TEST_CASE("shipped code files match the fixtures") {
  CHECK(weight_enumerator(load_code(UNIMOD_DATA_DIR "/codes/rm2_5.txt")) == weight_enumerator(rm2_5_fixture()));
  CHECK(weight_enumerator(load_code(UNIMOD_DATA_DIR "/codes/golay.txt")) == weight_enumerator(golay_fixture()));
  CHECK_THROWS(load_code(UNIMOD_DATA_DIR "/codes/missing.txt"));
}

}
