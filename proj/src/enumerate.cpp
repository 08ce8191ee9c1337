// Short-vector enumeration.
//
// The basis is LLL-reduced with a floating Gram–Schmidt on an exact integer
// Gram matrix, then searched depth-first (Fincke–Pohst) using a floating LDL
// with a safety margin. Every leaf is re-checked with exact 128-bit integer
// arithmetic, so counts are exact as long as the margin only lets extra
// candidates through.
#include "unimod/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace unimod {

unsigned default_workers() {
  if (const char* env = std::getenv("UNIMOD_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using i128 = __int128;
using IntMat = std::vector<std::vector<long long>>;

long long mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("enumeration: integer overflow in basis reduction");
  return r;
}

long long add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("enumeration: integer overflow in basis reduction");
  return r;
}

long long to_ll(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("enumeration: entry does not fit in 64 bits");
  return v.get_si();
}

// LLL on an integer Gram matrix; returns U with (new basis) = U·(old basis).
IntMat lll(IntMat& G, double delta = 0.99) {
  const int n = static_cast<int>(G.size());
  IntMat U(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) U[i][i] = 1;
  std::vector<std::vector<double>> mu(n, std::vector<double>(n, 0.0));
  std::vector<double> B(n, 0.0);
  auto gso_row = [&](int k) {
    for (int j = 0; j < k; ++j) {
      double s = static_cast<double>(G[k][j]);
      for (int l = 0; l < j; ++l) s -= mu[j][l] * mu[k][l] * B[l];
      mu[k][j] = s / B[j];
    }
    double b = static_cast<double>(G[k][k]);
    for (int l = 0; l < k; ++l) b -= mu[k][l] * mu[k][l] * B[l];
    B[k] = b;
  };
  auto reduce = [&](int k, int j, long long q) {
    const long long gkj = G[k][j];
    G[k][k] = add(add(G[k][k], -mul(2, mul(q, gkj))), mul(mul(q, q), G[j][j]));
    for (int l = 0; l < n; ++l) {
      if (l == k) continue;
      G[k][l] = add(G[k][l], -mul(q, G[j][l]));
      G[l][k] = G[k][l];
    }
    for (int l = 0; l < n; ++l) U[k][l] = add(U[k][l], -mul(q, U[j][l]));
  };
  int valid = 0;
  int k = 1;
  long guard = 0;
  while (k < n) {
    if (++guard > 10'000'000) throw std::runtime_error("LLL did not converge");
    for (int r = valid; r <= k; ++r) gso_row(r);
    valid = k + 1;
    for (int j = k - 1; j >= 0; --j) {
      const long long q = std::llround(mu[k][j]);
      if (q == 0) continue;
      reduce(k, j, q);
      for (int l = 0; l < j; ++l) mu[k][l] -= static_cast<double>(q) * mu[j][l];
      mu[k][j] -= static_cast<double>(q);
    }
    gso_row(k);
    if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      std::swap(G[k], G[k - 1]);
      for (auto& row : G) std::swap(row[k], row[k - 1]);
      std::swap(U[k], U[k - 1]);
      valid = k - 1;
      k = std::max(k - 1, 1);
    } else {
      ++k;
    }
  }
  return U;
}

struct Node {
  int level;  // next coordinate to assign; levels above are fixed
  std::vector<long long> w;
  double partial;
  bool zero_above;
};

// Search in w-space: w ∈ W0 + D·Z^n, exact norm wᵀ·Gs·w ≤ limit.
class Engine {
public:
  Engine(const RatMatrix& gram, const RatVector& offset) : n_(static_cast<int>(gram.rows())) {
    const Int d = common_denominator(gram);
    IntMat G(n_, std::vector<long long>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) G[i][j] = to_ll((gram(i, j) * Rat(d)).num());
    d_ = d;
    U_ = lll(G);
    // offset in the reduced basis: o' = o·U⁻¹, reduced mod 1
    RatMatrix Ur(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) Ur(i, j) = Rat(U_[i][j]);
    RatVector o = solve<Rat>(Ur.transpose(), RatMatrix(offset)).col(0);
    Int D = 1;
    for (int i = 0; i < n_; ++i) {
      o(i) -= Rat(o(i).floor());
      D = lcm(D, o(i).den());
    }
    D_ = to_ll(D);
    W0_.resize(n_);
    zero_offset_ = true;
    for (int i = 0; i < n_; ++i) {
      W0_[i] = to_ll((o(i) * Rat(D)).num());
      if (W0_[i] != 0) zero_offset_ = false;
    }
    Gs_ = G;
    RatMatrix gr(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) gr(i, j) = Rat(G[i][j]);
    const auto f = ldl(gr);
    if (!f.positive_definite) throw std::invalid_argument("enumeration needs a positive definite gram matrix");
    p_.resize(n_);
    u_.assign(n_, std::vector<double>(n_, 0.0));
    for (int i = 0; i < n_; ++i) {
      p_[i] = f.pivots(i).to_double();
      for (int j = i + 1; j < n_; ++j) u_[i][j] = f.upper(i, j).to_double();
    }
    min_diag_ = G[0][0];
    for (int i = 0; i < n_; ++i) min_diag_ = std::min(min_diag_, G[i][i]);
  }

  // exact norm bound for a rational max_norm: Q(x) = wᵀGs w / (d·D²)
  long long limit_for(const Rat& max_norm) const {
    const Rat l = max_norm * Rat(d_) * Rat(D_) * Rat(D_);
    if (l.sign() < 0) return -1;
    return to_ll(l.floor());
  }
  Rat norm_of(long long exact) const { return Rat(Int(static_cast<long>(exact)), d_ * Int(static_cast<long>(D_)) * Int(static_cast<long>(D_))); }
  long long min_diag() const { return min_diag_; }
  bool zero_offset() const { return zero_offset_; }

  // x_old = w·U for a zero offset (D = 1)
  std::vector<long long> to_original_int(const std::vector<long long>& w) const {
    std::vector<long long> x(n_, 0);
    for (int i = 0; i < n_; ++i)
      if (w[i] != 0)
        for (int j = 0; j < n_; ++j) x[j] = add(x[j], mul(w[i], U_[i][j]));
    return x;
  }

  // x_old = (w / D)·U
  RatVector to_original(const std::vector<long long>& w, int sign) const {
    RatVector x = RatVector::Zero(n_);
    for (int i = 0; i < n_; ++i) {
      if (w[i] == 0) continue;
      const Rat c(Int(static_cast<long>(sign * w[i])), Int(static_cast<long>(D_)));
      for (int j = 0; j < n_; ++j)
        if (U_[i][j] != 0) x(j) += c * Rat(U_[i][j]);
    }
    return x;
  }

  // Expands `node` depth-first; leaves with exact norm ≤ *limit reach `leaf`.
  // The leaf callback may lower *limit.
  template <class Leaf>
  void search(Node node, long long* limit, bool half, Leaf&& leaf) const {
    std::vector<long long> w = std::move(node.w);
    w.resize(n_);
    std::vector<double> partial(n_ + 1, 0.0), center(n_, 0.0);
    std::vector<long long> hi(n_, 0);
    std::vector<bool> zero_above(n_ + 1, true);
    const int top = node.level;
    partial[top + 1] = node.partial;
    zero_above[top + 1] = node.zero_above;
    int i = top;
    auto enter = [&](int lvl) -> bool {
      // sets w[lvl] to its first candidate and hi[lvl] to the last; false if empty
      double s = 0.0;
      for (int j = lvl + 1; j < n_; ++j) s += u_[lvl][j] * static_cast<double>(w[j]);
      center[lvl] = -s;
      const double L = static_cast<double>(*limit);
      const double rem = L - partial[lvl + 1] + 1e-7 * (L + 1.0);
      if (rem < 0) return false;
      const double r = std::sqrt(rem / p_[lvl]) * (1.0 + 1e-12) + 1e-9;
      const double D = static_cast<double>(D_);
      long long lo = static_cast<long long>(std::ceil((center[lvl] - r - static_cast<double>(W0_[lvl])) / D));
      long long up = static_cast<long long>(std::floor((center[lvl] + r - static_cast<double>(W0_[lvl])) / D));
      if (half && zero_above[lvl + 1]) lo = std::max(lo, 0LL);
      if (lo > up) return false;
      w[lvl] = W0_[lvl] + D_ * lo;
      hi[lvl] = W0_[lvl] + D_ * up;
      return true;
    };
    auto accept = [&](int lvl) {
      const double t = static_cast<double>(w[lvl]) - center[lvl];
      partial[lvl] = partial[lvl + 1] + p_[lvl] * t * t;
      zero_above[lvl] = zero_above[lvl + 1] && w[lvl] == 0;
    };
    if (!enter(i)) return;
    while (true) {
      accept(i);
      const double L = static_cast<double>(*limit);
      if (partial[i] <= L + 1e-7 * (L + 1.0)) {
        if (i == 0) {
          i128 e = 0;
          for (int a = 0; a < n_; ++a) {
            if (w[a] == 0) continue;
            i128 row = 0;
            for (int b = 0; b < n_; ++b) row += static_cast<i128>(Gs_[a][b]) * w[b];
            e += row * w[a];
          }
          if (e <= *limit) leaf(w, static_cast<long long>(e), zero_above[0]);
        } else if (enter(i - 1)) {
          --i;
          continue;
        }
      }
      // advance at level i, climbing while exhausted
      while (true) {
        if (w[i] < hi[i]) {
          w[i] += D_;
          break;
        }
        if (++i > top) return;
      }
    }
  }

  // Splits the tree near the root into independent subtrees.
  std::vector<Node> frontier(long long limit, bool half, std::size_t want) const {
    std::vector<Node> cur{Node{n_ - 1, std::vector<long long>(n_, 0), 0.0, true}};
    while (cur.size() < want && cur.front().level > 0) {
      std::vector<Node> next;
      for (const auto& nd : cur) {
        const int lvl = nd.level;
        double s = 0.0;
        for (int j = lvl + 1; j < n_; ++j) s += u_[lvl][j] * static_cast<double>(nd.w[j]);
        const double c = -s, L = static_cast<double>(limit);
        const double rem = L - nd.partial + 1e-7 * (L + 1.0);
        if (rem < 0) continue;
        const double r = std::sqrt(rem / p_[lvl]) * (1.0 + 1e-12) + 1e-9;
        const double D = static_cast<double>(D_);
        long long lo = static_cast<long long>(std::ceil((c - r - static_cast<double>(W0_[lvl])) / D));
        const long long up = static_cast<long long>(std::floor((c + r - static_cast<double>(W0_[lvl])) / D));
        if (half && nd.zero_above) lo = std::max(lo, 0LL);
        for (long long t = lo; t <= up; ++t) {
          Node ch{lvl - 1, nd.w, 0.0, false};
          ch.w[lvl] = W0_[lvl] + D_ * t;
          const double dt = static_cast<double>(ch.w[lvl]) - c;
          ch.partial = nd.partial + p_[lvl] * dt * dt;
          ch.zero_above = nd.zero_above && ch.w[lvl] == 0;
          next.push_back(std::move(ch));
        }
      }
      cur = std::move(next);
      if (cur.empty()) break;
    }
    return cur;
  }

  int dim() const { return n_; }

private:
  int n_;
  Int d_;
  long long D_ = 1;
  IntMat U_, Gs_;
  std::vector<long long> W0_;
  bool zero_offset_ = true;
  std::vector<double> p_;
  std::vector<std::vector<double>> u_;
  long long min_diag_ = 0;
};

}  // namespace

namespace {

struct RawResult {
  std::map<long long, unsigned long long> counts;
  // reduced-basis vector, tag (0 zero vector, 1 single, 2 stands for ±w), exact norm
  std::vector<std::tuple<std::vector<long long>, int, long long>> found;
};

RawResult run(const Engine& eng, long long limit, unsigned workers, bool collect) {
  RawResult res;
  const bool half = eng.zero_offset();
  if (workers == 0) workers = default_workers();
  const auto nodes = eng.frontier(limit, half, workers > 1 ? 64u * workers : 1u);
  std::mutex m;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    RawResult local;
    long long lim = limit;
    for (std::size_t k = next++; k < nodes.size(); k = next++) {
      eng.search(nodes[k], &lim, half, [&](const std::vector<long long>& w, long long e, bool is_zero) {
        local.counts[e] += half && !is_zero ? 2 : 1;
        if (collect) local.found.emplace_back(w, is_zero ? 0 : (half ? 2 : 1), e);
      });
    }
    std::lock_guard<std::mutex> g(m);
    for (const auto& [e, k] : local.counts) res.counts[e] += k;
    for (auto& v : local.found) res.found.push_back(std::move(v));
  };
  const unsigned nthreads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(nodes.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  // thread scheduling must not leak into the output order
  std::sort(res.found.begin(), res.found.end());
  return res;
}

}  // namespace

Enumeration enumerate_short(const Coset& c, const Rat& max_norm, const EnumerateOptions& opts) {
  if (c.offset.size() != c.base.dim()) throw std::invalid_argument("coset offset has the wrong length");
  const Engine eng(c.base.gram, c.offset);
  Enumeration out;
  const long long limit = eng.limit_for(max_norm);
  if (limit < 0) return out;
  const RawResult res = run(eng, limit, opts.workers, opts.collect_vectors);
  for (const auto& [e, k] : res.counts) out.counts.counts[eng.norm_of(e)] += k;
  for (const auto& [w, tag, e] : res.found) {
    out.vectors.push_back(eng.to_original(w, 1));
    if (tag == 2) out.vectors.push_back(eng.to_original(w, -1));
  }
  return out;
}

ShortVectors short_vectors(const Lattice& L, const Rat& max_norm, unsigned workers) {
  const Engine eng(L.gram, RatVector::Zero(L.dim()));
  ShortVectors out;
  const long long limit = eng.limit_for(max_norm);
  if (limit < 0) return out;
  const RawResult res = run(eng, limit, workers, true);
  for (const auto& [w, tag, e] : res.found) {
    if (tag == 0) continue;
    auto x = eng.to_original_int(w);
    const Rat r = eng.norm_of(e);
    out.coords.push_back(x);
    out.norms.push_back(r);
    for (auto& v : x) v = -v;
    out.coords.push_back(std::move(x));
    out.norms.push_back(r);
  }
  return out;
}

Enumeration enumerate_short(const Lattice& L, const Rat& max_norm, const EnumerateOptions& opts) {
  return enumerate_short(Coset{L, RatVector::Zero(L.dim())}, max_norm, opts);
}

Rat minimal_norm(const Lattice& L) {
  const Engine eng(L.gram, RatVector::Zero(L.dim()));
  long long limit = eng.min_diag();
  const int n = eng.dim();
  eng.search(Node{n - 1, std::vector<long long>(n, 0), 0.0, true}, &limit, true,
             [&](const std::vector<long long>&, long long e, bool is_zero) {
               if (!is_zero && e < limit) limit = e;
             });
  return eng.norm_of(limit);
}

}  // namespace unimod
