// Doubling a unimodular lattice by gluing two copies of √2·L, and shaving
// a unimodular lattice down one dimension along a norm-4 vector.
#pragma once

#include "unimod/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unimod {

/// The glued lattice is spanned by √2L ⊕ √2L and the vectors (x, y)/√2 for
/// each glue pair; x, y are in base coordinates.
struct GlueSpec {
  Lattice base;
  std::vector<std::pair<RatVector, RatVector>> glue;
};

/// Throws if the glued Gram matrix is not integral or det ≠ 1.
Lattice glue_double(const GlueSpec& spec);

struct GlueSearchOptions {
  std::uint64_t seed = 20260101;
  std::size_t max_attempts = 200000;
  /// Stop at the first candidate reaching this minimal norm; 0 picks
  /// min(2·min L, certified upper bound in dimension 2m).
  int target = 0;
};

struct GlueSearchResult {
  GlueSpec spec;
  Lattice lattice;
  Rat minimal_norm;
  std::size_t attempts = 0;
  int target = 0;
};

/// Random search over graphs {(x, φx)} of isometries φ of L/2L.
std::optional<GlueSearchResult> find_glue(const Lattice& L, const GlueSearchOptions& opts = {});

/// Projects {u ∈ L : u·v even} onto v^⊥; v in L-coordinates with v·v = 4.
Lattice project_shave(const Lattice& L, const RatVector& v);

/// First norm-4 vector (in enumeration order) whose shave has minimal norm
/// ≥ target, verified by enumeration.
std::optional<RatVector> find_shave_vector(const Lattice& L, const Rat& target);

Lattice z_lattice(int n);
Lattice a15_plus_fixture();
Lattice d16_plus_fixture();

}  // namespace unimod
