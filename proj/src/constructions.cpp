#include "unimod/constructions.hpp"

#include "unimod/bounds.hpp"

#include <bit>
#include <climits>
#include <random>
#include <stdexcept>

namespace unimod {

namespace {

// diag(G, G)/2 on pairs of base coordinates, i.e. √2L ⊕ √2L scaled by 1/2
Lattice doubled_ambient(const Lattice& L) {
  const int m = L.dim();
  RatMatrix g = RatMatrix::Zero(2 * m, 2 * m);
  g.topLeftCorner(m, m) = L.gram / Rat(2);
  g.bottomRightCorner(m, m) = L.gram / Rat(2);
  Lattice P = Lattice::from_gram(g);
  if (L.embedding) {
    const auto& B = L.embedding->generators;
    RatMatrix e = RatMatrix::Zero(2 * m, 2 * B.cols());
    e.topLeftCorner(m, B.cols()) = B;
    e.bottomRightCorner(m, B.cols()) = B;
    P.embedding = Embedding{e, L.embedding->scale_sq / Rat(2)};
  }
  return P;
}

}  // namespace

Lattice glue_double(const GlueSpec& spec) {
  const Lattice& L = spec.base;
  const int m = L.dim();
  RatMatrix rows = RatMatrix::Zero(static_cast<Eigen::Index>(2 * m + spec.glue.size()), 2 * m);
  for (int i = 0; i < m; ++i) {
    rows(i, i) = Rat(2);
    rows(m + i, m + i) = Rat(2);
  }
  for (std::size_t k = 0; k < spec.glue.size(); ++k) {
    const auto& [x, y] = spec.glue[k];
    if (x.size() != m || y.size() != m) throw std::invalid_argument("glue vector has the wrong length");
    const auto r = static_cast<Eigen::Index>(2 * m + k);
    rows.block(r, 0, 1, m) = x.transpose();
    rows.block(r, m, 1, m) = y.transpose();
  }
  Lattice out = span_in(doubled_ambient(L), rows, L.name.empty() ? "glued" : "glue(sqrt2 " + L.name + ")");
  if (out.dim() != 2 * m) throw std::invalid_argument("glued lattice has the wrong rank");
  if (!is_integral(out.gram)) throw std::invalid_argument("glued lattice is not integral");
  const Rat det = determinant(out.gram);
  if (det != Rat(1)) throw std::invalid_argument("glued lattice has det " + det.str() + ", expected 1");
  return out;
}

std::optional<GlueSearchResult> find_glue(const Lattice& L, const GlueSearchOptions& opts) {
  const auto chk = check_unimodular(L);
  if (!chk.unimodular()) throw std::invalid_argument("glue base must be unimodular (" + chk.detail + ")");
  const int m = L.dim();
  if (m > 20) throw std::invalid_argument("glue search supports base dimension <= 20");
  if (opts.max_attempts == 0) return std::nullopt;
  const long minL = minimal_norm(L).to_long();
  int target = opts.target;
  if (target <= 0) {
    target = static_cast<int>(2 * minL);
    if (2 * m <= 48) target = std::min(target, mu_upper(2 * m).mu_upper);
  }

  // ν(c): least norm in the class c + 2L, known whenever it matters (< 2t − min L)
  std::vector<long> nu(std::size_t{1} << m, LONG_MAX);
  nu[0] = 0;
  const long horizon = 2L * target - minL - 1;
  if (horizon >= minL) {
    const auto sv = short_vectors(L, Rat(horizon));
    for (std::size_t k = 0; k < sv.coords.size(); ++k) {
      std::uint64_t c = 0;
      for (int i = 0; i < m; ++i)
        if (sv.coords[k][i] & 1) c |= std::uint64_t{1} << i;
      nu[c] = std::min(nu[c], sv.norms[k].to_long());
    }
  }
  std::vector<std::uint64_t> short_classes;
  for (std::uint64_t c = 1; c < nu.size(); ++c)
    if (nu[c] != LONG_MAX) short_classes.push_back(c);

  // b(x, y) mod 2 and, for even L, Q(x) = x·x/2 mod 2
  std::vector<std::uint64_t> g2(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (L.gram(i, j).num() % 2 != 0) g2[i] |= std::uint64_t{1} << j;
  auto b = [&](std::uint64_t x, std::uint64_t y) {
    std::uint64_t gx = 0;
    for (std::uint64_t t = x; t; t &= t - 1) gx ^= g2[std::countr_zero(t)];
    return std::popcount(gx & y) & 1;
  };
  const bool even = chk.parity == Parity::Even;
  auto q = [&](std::uint64_t x) {
    Int s = 0;
    for (int i = 0; i < m; ++i) {
      if (!((x >> i) & 1)) continue;
      s += L.gram(i, i).num() / 2;
      for (int j = i + 1; j < m; ++j)
        if ((x >> j) & 1) s += L.gram(i, j).num();
    }
    return s % 2 != 0;
  };

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << m) - 1);
  std::vector<std::uint64_t> img(m), best_img;
  long best = -1;
  std::size_t attempts = 0;
  const long cap = 4 * minL;  // twice the norm of (0, 2u)/√2
  while (attempts < opts.max_attempts) {
    ++attempts;
    for (int i = 0; i < m; ++i) img[i] = std::uint64_t{1} << i;
    // transvections x ↦ x + b(x, v)v with b(v, v) = 0 (odd L) or Q(v) = 1 (even L)
    for (int step = 0; step < 4 * m; ++step) {
      std::uint64_t v;
      do v = pick(rng);
      while (even ? !q(v) : b(v, v) != 0);
      for (auto& x : img)
        if (b(x, v)) x ^= v;
    }
    long score = cap;
    for (const auto c : short_classes) {
      std::uint64_t fc = 0;
      for (std::uint64_t t = c; t; t &= t - 1) fc ^= img[std::countr_zero(t)];
      if (nu[fc] != LONG_MAX) score = std::min(score, nu[c] + nu[fc]);
    }
    if (score > best) {
      best = score;
      best_img = img;
    }
    if (best >= 2L * target) break;
  }

  GlueSpec spec{L, {}};
  for (int i = 0; i < m; ++i) {
    RatVector x = RatVector::Zero(m), y = RatVector::Zero(m);
    x(i) = Rat(1);
    for (int j = 0; j < m; ++j)
      if ((best_img[i] >> j) & 1) y(j) = Rat(1);
    spec.glue.emplace_back(std::move(x), std::move(y));
  }
  Lattice glued = glue_double(spec);
  const Rat mn = minimal_norm(glued);
  return GlueSearchResult{std::move(spec), std::move(glued), mn, attempts, target};
}

Lattice project_shave(const Lattice& L, const RatVector& v) {
  const int n = L.dim();
  if (v.size() != n) throw std::invalid_argument("shave vector has the wrong length");
  if (!is_integral(v)) throw std::invalid_argument("shave vector is not in the lattice");
  const Rat vv = norm(L, v);
  if (vv != Rat(4)) throw std::invalid_argument("shave vector has norm " + vv.str() + ", expected 4");
  if (!is_integral(L.gram)) throw std::invalid_argument("shaving needs an integral lattice");
  const RatVector g = L.gram * v;
  // K = {u : u·v even}
  int p = -1;
  for (int i = 0; i < n; ++i)
    if (g(i).num() % 2 != 0) {
      p = i;
      break;
    }
  RatMatrix K = RatMatrix::Identity(n, n);
  if (p >= 0)
    for (int i = 0; i < n; ++i) {
      if (i == p) K(i, i) = Rat(2);
      else if (g(i).num() % 2 != 0) K(i, p) = Rat(-1);
    }
  // u ↦ u − (u·v/4)v
  RatMatrix proj(n, n);
  for (int i = 0; i < n; ++i) {
    const RatVector u = K.row(i).transpose();
    const Rat c = u.dot(g) / Rat(4);
    proj.row(i) = (u - v * c).transpose();
  }
  Lattice out = span_in(L, proj, L.name.empty() ? "shaved" : "shave(" + L.name + ")");
  if (out.dim() != n - 1) throw std::logic_error("shaved lattice has rank " + std::to_string(out.dim()));
  return out;
}

std::optional<RatVector> find_shave_vector(const Lattice& L, const Rat& target) {
  if (!is_integral(L.gram)) throw std::invalid_argument("shaving needs an integral lattice");
  const int n = L.dim();
  const Rat horizon = std::max(Rat(4), target);
  const auto sv = short_vectors(L, horizon);
  std::vector<std::vector<long long>> gram(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = L.gram(i, j).to_long();
  std::vector<std::size_t> small;
  for (std::size_t k = 0; k < sv.coords.size(); ++k)
    if (sv.norms[k] <= target) small.push_back(k);
  // A shaved vector w has a preimage u with |u·v| ≤ 2 and u·u = w·w + (u·v)²/4,
  // so only u of norm ≤ target can produce w·w < target.
  for (std::size_t k = 0; k < sv.coords.size(); k += 2) {
    if (sv.norms[k] != Rat(4)) continue;
    const auto& v = sv.coords[k];
    std::vector<long long> g(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g[i] += gram[i][j] * v[j];
    bool ok = true;
    for (const auto s : small) {
      long long ip = 0;
      for (int i = 0; i < n; ++i) ip += sv.coords[s][i] * g[i];
      if (ip % 2 != 0) continue;
      const Rat img = sv.norms[s] - Rat(ip * ip) / Rat(4);
      if (img.sign() > 0 && img < target) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    RatVector rv(n);
    for (int i = 0; i < n; ++i) rv(i) = Rat(v[i]);
    if (minimal_norm(project_shave(L, rv)) >= target) return rv;
  }
  return std::nullopt;
}

Lattice z_lattice(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return Lattice::from_generators(RatMatrix::Identity(n, n), Rat(1), "Z^" + std::to_string(n));
}

Lattice a15_plus_fixture() {
  // A_15 ⊂ Z^16 with the glue class [4] = ((1/4)^12, (−3/4)^4)
  RatMatrix gens = RatMatrix::Zero(16, 16);
  for (int k = 0; k < 15; ++k) {
    gens(k, k) = Rat(1);
    gens(k, k + 1) = Rat(-1);
  }
  for (int i = 0; i < 16; ++i) gens(15, i) = i < 12 ? Rat(1, 4) : Rat(-3, 4);
  return Lattice::from_generators(gens, Rat(1), "A15+");
}

Lattice d16_plus_fixture() {
  // D_16 with the half-spin glue vector (1/2)^16
  RatMatrix gens = RatMatrix::Zero(17, 16);
  for (int k = 0; k < 15; ++k) {
    gens(k, k) = Rat(1);
    gens(k, k + 1) = Rat(-1);
  }
  gens(15, 14) = Rat(1);
  gens(15, 15) = Rat(1);
  for (int i = 0; i < 16; ++i) gens(16, i) = Rat(1, 2);
  return Lattice::from_generators(gens, Rat(1), "D16+");
}

}  // namespace unimod
