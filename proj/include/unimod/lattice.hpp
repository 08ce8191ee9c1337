// Lattices given by an exact Gram matrix, optionally with an embedding.
//
// Coordinates are always with respect to the lattice basis: a lattice vector
// is an integer row vector c with norm c·G·cᵀ. Cosets carry a rational offset
// in the same coordinates.
#pragma once

#include "unimod/linalg.hpp"
#include "unimod/qseries.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unimod {

/// gram = scale_sq · generators · generatorsᵀ, generators being the basis rows.
struct Embedding {
  RatMatrix generators;
  Rat scale_sq{1};
};

struct Lattice {
  std::string name;
  RatMatrix gram;
  std::optional<Embedding> embedding;

  int dim() const { return static_cast<int>(gram.rows()); }

  /// Validates symmetry and positive definiteness.
  static Lattice from_gram(RatMatrix gram, std::string name = {});
  /// Reduces a spanning set to a basis first.
  static Lattice from_generators(const RatMatrix& spanning, const Rat& scale_sq, std::string name = {});
};

/// Sublattice (or superlattice) spanned by `rows`, given in the coordinates
/// of `L`; the embedding is carried along when L has one.
Lattice span_in(const Lattice& L, const RatMatrix& rows, std::string name = {});

enum class Parity { Odd, Even, NotUnimodular };

struct UnimodularCheck {
  Parity parity = Parity::NotUnimodular;
  Rat det;
  std::string detail;
  bool unimodular() const { return parity != Parity::NotUnimodular; }
};

std::string to_string(Parity p);

/// Integrality, det = 1 and parity of the basis norms.
UnimodularCheck check_unimodular(const Lattice& L);

/// Basis rows (in L-coordinates) of the kernel of x ↦ x·x mod 2.
RatMatrix even_sublattice_basis(const Lattice& L);
Lattice even_sublattice(const Lattice& L);
Lattice dual(const Lattice& L);

struct Coset {
  Lattice base;
  RatVector offset;  // in base coordinates
};

/// The two classes of Λ_0 in Λ_0^∗ that make up the shadow, as cosets of Λ_0.
/// First offset is half the characteristic vector.
std::pair<Coset, Coset> shadow_cosets(const Lattice& L);

/// Characteristic vector y = G⁻¹·diag(G) in L-coordinates (y·x ≡ x·x mod 2).
RatVector characteristic_vector(const Lattice& L);

/// Norm of a vector given in L-coordinates.
Rat norm(const Lattice& L, const RatVector& x);
Rat inner(const Lattice& L, const RatVector& x, const RatVector& y);

// ---- enumeration -------------------------------------------------------------

struct NormCount {
  std::map<Rat, unsigned long long> counts;
  unsigned long long at(const Rat& r) const;
  unsigned long long total() const;
};

struct Enumeration {
  NormCount counts;
  /// Vectors in base coordinates (offset + integer), when requested.
  std::vector<RatVector> vectors;
};

struct EnumerateOptions {
  bool collect_vectors = false;
  /// 0 means use UNIMOD_WORKERS or the hardware concurrency.
  unsigned workers = 0;
};

/// All vectors v of the coset with v·v ≤ max_norm, counted exactly.
Enumeration enumerate_short(const Coset& c, const Rat& max_norm, const EnumerateOptions& opts = {});
Enumeration enumerate_short(const Lattice& L, const Rat& max_norm, const EnumerateOptions& opts = {});

struct ShortVectors {
  std::vector<std::vector<long long>> coords;  // integer L-coordinates, ±v adjacent
  std::vector<Rat> norms;
};
/// Nonzero lattice vectors of norm ≤ max_norm.
ShortVectors short_vectors(const Lattice& L, const Rat& max_norm, unsigned workers = 0);

/// Smallest nonzero norm.
Rat minimal_norm(const Lattice& L);

/// Worker count from UNIMOD_WORKERS, else the hardware concurrency.
unsigned default_workers();

/// Coefficient at q^m is the number of vectors of norm m, for m ≤ max_norm.
QSeries theta_by_enumeration(const Lattice& L, const Rat& max_norm);
/// Same for the shadow (both cosets), on the quarter grid.
QSeries shadow_by_enumeration(const Lattice& L, const Rat& max_norm);

}  // namespace unimod
