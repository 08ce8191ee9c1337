#include <doctest.h>

#include "unimod/constructions.hpp"
#include "unimod/io.hpp"

using namespace unimod;

namespace {

RatVector parse_vec(const std::string& s) {
  std::vector<Rat> v;
  std::size_t p = 0;
  while (p <= s.size()) {
    const std::size_t q = std::min(s.find(',', p), s.size());
    v.push_back(Rat::parse(s.substr(p, q - p)));
    p = q + 1;
  }
  RatVector r(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) r(static_cast<Eigen::Index>(i)) = v[i];
  return r;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("glue bases") {
  const Lattice a = a15_plus_fixture(), d = d16_plus_fixture();
  CHECK(a.dim() == 15);
  CHECK(check_unimodular(a).parity == Parity::Odd);
  CHECK(minimal_norm(a) == Rat(2));
  CHECK(d.dim() == 16);
  CHECK(check_unimodular(d).parity == Parity::Even);
  CHECK(enumerate_short(d, Rat(2)).counts.at(Rat(2)) == 480);
}

TEST_CASE("saved glue specs rebuild the doubled lattices") {
  const Lattice l30 = glue_double(glue_spec_from_json(load_json(UNIMOD_DATA_DIR "/glue/a15plus.json")));
  CHECK(l30.dim() == 30);
  CHECK(check_unimodular(l30).parity == Parity::Odd);
  CHECK(minimal_norm(l30) == Rat(3));
  const Lattice l32 = glue_double(glue_spec_from_json(load_json(UNIMOD_DATA_DIR "/glue/d16plus.json")));
  CHECK(l32.dim() == 32);
  CHECK(check_unimodular(l32).unimodular());
  CHECK(minimal_norm(l32) == Rat(4));
}

TEST_CASE("trivial glue gives √2L ⊕ √2L plus the diagonal") {
  // φ = identity on Z^k: the glued lattice is Z^k ⊗ Z^2-with-form diag(1,1)
  GlueSpec s{z_lattice(3), {}};
  for (int i = 0; i < 3; ++i) {
    RatVector x = RatVector::Zero(3);
    x(i) = Rat(1);
    s.glue.emplace_back(x, x);
  }
  const Lattice g = glue_double(s);
  CHECK(check_unimodular(g).parity == Parity::Odd);
  CHECK(minimal_norm(g) == Rat(1));
}

TEST_CASE("bad glue is reported") {
  GlueSpec s{z_lattice(2), {}};
  RatVector x(2), y(2);
  x << Rat(1), Rat(0);
  y << Rat(0), Rat(0);
  s.glue.emplace_back(x, y);
  CHECK_THROWS_WITH_AS(glue_double(s), doctest::Contains("not integral"), std::invalid_argument);
  GlueSpec t{z_lattice(2), {}};
  CHECK_THROWS_WITH_AS(glue_double(t), doctest::Contains("det"), std::invalid_argument);
}

TEST_CASE("glue search is deterministic for a fixed seed") {
  GlueSearchOptions o;
  o.max_attempts = 50;
  const auto a = find_glue(a15_plus_fixture(), o);
  const auto b = find_glue(a15_plus_fixture(), o);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->lattice.gram == b->lattice.gram);
  CHECK(a->attempts == b->attempts);
  CHECK(a->target == 3);
  o.max_attempts = 0;
  CHECK_FALSE(find_glue(a15_plus_fixture(), o));
}

TEST_CASE("shaving the stored lattices") {
  const Lattice l30 = load_lattice(UNIMOD_DATA_DIR "/lattices/L30.json");
  const Json rec = load_json(UNIMOD_DATA_DIR "/glue/L29_shave.json");
  const Lattice l29 = project_shave(l30, parse_vec(rec["vector"].get<std::string>()));
  CHECK(l29.dim() == 29);
  CHECK(check_unimodular(l29).parity == Parity::Odd);
  CHECK(minimal_norm(l29) == Rat(3));
  CHECK(l29.gram == load_lattice(UNIMOD_DATA_DIR "/lattices/L29.json").gram);
}

TEST_CASE("shave of Z^n along 2e_1 is Z^(n-1)") {
  RatVector v = RatVector::Zero(4);
  v(0) = Rat(2);
  const Lattice s = project_shave(z_lattice(4), v);
  CHECK(s.dim() == 3);
  CHECK(check_unimodular(s).parity == Parity::Odd);
  CHECK(theta_by_enumeration(s, Rat(3)) == theta_by_enumeration(z_lattice(3), Rat(3)));
}

TEST_CASE("shave vector checks") {
  RatVector v = RatVector::Zero(4);
  v(0) = Rat(1);
  CHECK_THROWS_WITH(project_shave(z_lattice(4), v), doctest::Contains("expected 4"));
  v(0) = Rat(1, 2);
  CHECK_THROWS_WITH(project_shave(z_lattice(4), v), doctest::Contains("not in the lattice"));
  CHECK_THROWS(project_shave(z_lattice(4), RatVector::Zero(3)));
}

TEST_CASE("shave search respects the target") {
  // no shave of Z^5 can avoid norm 1
  CHECK_FALSE(find_shave_vector(z_lattice(5), Rat(2)));
  const auto v = find_shave_vector(z_lattice(5), Rat(1));
  REQUIRE(v);
  CHECK(norm(z_lattice(5), *v) == Rat(4));
}

}
