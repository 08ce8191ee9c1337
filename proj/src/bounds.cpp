#include "unimod/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace unimod {

// ---- ThetaFit ----------------------------------------------------------------

ThetaFit ThetaFit::resolved(int dim, std::vector<Rat> a) {
  ThetaFit f{dim, {}};
  for (auto& x : a) f.coeffs.emplace_back(std::move(x));
  return f;
}

bool ThetaFit::is_resolved() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& c) { return c.has_value(); });
}

std::vector<int> ThetaFit::free_indices() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (!coeffs[j]) out.push_back(static_cast<int>(j));
  return out;
}

ThetaFit ThetaFit::assigned(const std::vector<Rat>& free_values) const {
  ThetaFit f = *this;
  std::size_t k = 0;
  for (auto& c : f.coeffs)
    if (!c) {
      if (k == free_values.size()) throw std::invalid_argument("too few values for FREE entries");
      c = free_values[k++];
    }
  if (k != free_values.size()) throw std::invalid_argument("too many values for FREE entries");
  return f;
}

namespace {

// Δ8^j θ3^(n−8j) and (−1)^j 16^(−j) θ4(q²)^(8j) θ2^(n−8j) for j = 0..[n/8]
struct Basis {
  std::vector<QSeries> lattice, shadow;
};

std::vector<QSeries> lattice_basis(int n, long T) {
  const QSeries t3 = theta3(T), d8 = delta8(T);
  std::vector<QSeries> out;
  for (int j = 0; j <= n / 8; ++j) out.push_back((d8.pow(j) * t3.pow(n - 8 * j)).truncated(T));
  return out;
}

std::vector<QSeries> shadow_basis(int n, long T) {
  const QSeries t2 = theta2(T);
  const QSeries t4q2 = theta4((T + 1) / 2).substitute_q2().truncated(T);
  std::vector<QSeries> out;
  for (int j = 0; j <= n / 8; ++j) {
    const Rat factor = Rat(j % 2 ? -1 : 1) * pow2(-4L * j);
    out.push_back((t4q2.pow(8L * j) * t2.pow(n - 8 * j) * factor).truncated(T));
  }
  return out;
}

QSeries combine(const std::vector<QSeries>& basis, const std::vector<Rat>& a, long T) {
  QSeries out(T);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!a[j].is_zero()) out += basis[j] * a[j];
  return out.truncated(T);
}

std::vector<Rat> require_resolved(const ThetaFit& fit) {
  std::vector<Rat> a;
  for (std::size_t j = 0; j < fit.coeffs.size(); ++j) {
    if (!fit.coeffs[j]) throw std::invalid_argument("theta fit has unresolved FREE entry a_" + std::to_string(j));
    a.push_back(*fit.coeffs[j]);
  }
  return a;
}

}  // namespace

ThetaFit solve_prefix(int n, int mu) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (mu < 1) throw std::invalid_argument("candidate minimal norm must be at least 1");
  const int J = n / 8;
  if (mu > J + 1)
    throw std::invalid_argument("not enough basis elements: mu = " + std::to_string(mu) + " needs [n/8] + 1 >= mu");
  const auto basis = lattice_basis(n, 4L * mu);
  ThetaFit fit{n, std::vector<std::optional<Rat>>(static_cast<std::size_t>(J + 1))};
  std::vector<Rat> a;
  for (int k = 0; k < mu; ++k) {
    Rat v = k == 0 ? Rat(1) : Rat(0);
    for (int j = 0; j < k; ++j) v -= a[j] * basis[j].coeff_q(k);
    // Δ8^k θ3^(n−8k) = q^k + ..., so the system is unit triangular
    a.push_back(v);
    fit.coeffs[k] = v;
  }
  return fit;
}

QSeries lattice_theta(const ThetaFit& fit, long T) {
  return combine(lattice_basis(fit.dim, T), require_resolved(fit), T);
}

QSeries shadow_theta(const ThetaFit& fit, long T) {
  return combine(shadow_basis(fit.dim, T), require_resolved(fit), T);
}

// ---- Gram obstruction --------------------------------------------------------

GramVerdict gram_obstruction(int n, const Rat& s, long k, int mu) {
  if (s.sign() <= 0) throw std::invalid_argument("shadow norm must be positive");
  if (k < 2) throw std::invalid_argument("need at least two vectors");
  GramVerdict v;
  const int mu_even = mu + (mu % 2);
  // u − v ∈ Λ0 with (u − v)² = 2s − 2t = 2m, m ≥ 1; u + v ∈ Λ with (u + v)² = 2s + 2t
  for (long m = 1;; ++m) {
    const Rat t = s - Rat(m);
    if (t <= -s) break;
    if (2 * m < mu_even) continue;
    const Rat plus = Rat(2) * s + Rat(2) * t;
    if (!plus.is_integer() || plus < Rat(mu)) continue;
    v.allowed.push_back(t);
  }
  std::sort(v.allowed.begin(), v.allowed.end());
  if (v.allowed.size() != 1) {
    v.detail = "inconclusive: " + std::to_string(v.allowed.size()) + " admissible inner products";
    return v;
  }
  const Rat b = v.allowed.front();
  v.diagonal = s;
  v.off_diagonal = b;
  // (s − b)I + bJ has eigenvalues s − b (k − 1 times) and s + (k − 1)b
  const Rat top = s + Rat(k - 1) * b;
  v.gram_rank = top.is_zero() ? k - 1 : k;
  const std::string matrix = "(" + (s - b).str() + ")I + (" + b.str() + ")J";
  if (top.sign() < 0) {
    v.contradiction = true;
    v.detail = "Gram matrix " + matrix + " of " + std::to_string(k) + " vectors is not positive semidefinite";
  } else if (v.gram_rank > n) {
    v.contradiction = true;
    v.detail = "Gram matrix " + matrix + " has rank " + std::to_string(v.gram_rank) + " > dimension " +
               std::to_string(n);
  } else {
    v.detail = "inner product forced to " + b.str() + "; rank " + std::to_string(v.gram_rank) + " fits";
  }
  return v;
}

// ---- feasibility scan --------------------------------------------------------

std::string to_string(Verdict v) { return v == Verdict::Feasible ? "feasible" : "infeasible"; }

std::string to_string(Reason r) {
  switch (r) {
    case Reason::None: return "none";
    case Reason::NonIntegral: return "non-integral coefficient";
    case Reason::Negative: return "negative coefficient";
    case Reason::Parity: return "parity violation";
    case Reason::ShadowCount: return "shadow-count violation";
    case Reason::RankObstruction: return "rank obstruction";
    case Reason::ResidualFree: return "residual free parameters";
  }
  return "?";
}

ScanWindow ScanWindow::defaults(int n, int mu) { return ScanWindow{n + 32L, 4L * (mu + 5)}; }

const Branch* FeasibilityReport::first_survivor() const {
  for (const auto& b : branches)
    if (b.rejection == Reason::None) return &b;
  return nullptr;
}

namespace {

Rat quarter(long e) { return Rat(Int(e), Int(4)); }

class Scanner {
public:
  Scanner(int n, int mu, const ScanWindow& w, const ScanOptions& opts)
      : n_(n), mu_(mu), J_(n / 8), w_(w), opts_(opts) {
    report_.dim = n;
    report_.mu = mu;
    report_.window = w;
    report_.prefix = solve_prefix(n, mu);
    lat_ = lattice_basis(n, w.lattice_trunc);
    sh_ = shadow_basis(n, w.shadow_trunc);
  }

  FeasibilityReport run() {
    std::vector<std::optional<Rat>> a = report_.prefix.coeffs;
    resolve(a, 0);
    const bool residual = !report_.residual_free.empty();
    report_.verdict = report_.survivors > 0 || residual ? Verdict::Feasible : Verdict::Infeasible;
    if (report_.verdict == Verdict::Infeasible) report_.reason = deepest_;
    else if (report_.survivors == 0) report_.reason = Reason::ResidualFree;
    return std::move(report_);
  }

private:
  bool done() const { return report_.survivors > 0 && !opts_.exhaustive; }

  Rat partial(const std::vector<QSeries>& basis, const std::vector<std::optional<Rat>>& a, long e) const {
    Rat s;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] && e < basis[j].truncation()) s += *a[j] * basis[j].coeff(e);
    return s;
  }

  void record(Branch b) {
    if (b.rejection == Reason::None) {
      ++report_.survivors;
    } else if (b.rejection != Reason::ResidualFree) {
      ++report_.rejected;
      deepest_ = std::max(deepest_, b.rejection);
    }
    if (report_.branches.size() < opts_.max_recorded) report_.branches.push_back(std::move(b));
  }

  void residual(const std::vector<std::optional<Rat>>& a, int upto_j, const std::string& why) {
    for (int j = mu_; j <= upto_j; ++j)
      if (std::find(report_.residual_free.begin(), report_.residual_free.end(), j) == report_.residual_free.end())
        report_.residual_free.push_back(j);
    std::sort(report_.residual_free.begin(), report_.residual_free.end());
    Branch b;
    for (const auto& x : a)
      if (x) b.coeffs.push_back(*x);
    b.rejection = Reason::ResidualFree;
    b.detail = why;
    record(std::move(b));
  }

  // Shadow coefficient i (quarter exponent n − 8J + 8i) is the first one
  // involving a_{J−i}, with multiplier (−1)^j 2^(n−8j) 16^(−j).
  void resolve(std::vector<std::optional<Rat>>& a, int i) {
    if (done()) return;
    const int j = J_ - i;
    if (j < mu_) {
      leaf(a);
      return;
    }
    const long e = (n_ - 8L * J_) + 8L * i;
    if (e >= w_.shadow_trunc) {
      residual(a, j, "shadow truncation " + std::to_string(w_.shadow_trunc) + " quarters too small to fix a_" +
                         std::to_string(j));
      return;
    }
    const Rat known = partial(sh_, a, e);
    const Rat mult = sh_[j].coeff(e);
    const Rat r = quarter(e);
    Rat lo(0), hi(2);
    if (!(r < Rat(mu_, 1) / Rat(2))) {
      if (j != mu_) {
        residual(a, j, "no finite candidate set for a_" + std::to_string(j));
        return;
      }
      // last free parameter: every window coefficient is affine in a_j
      std::optional<Rat> alo, ahi;
      auto bound = [&](const std::vector<QSeries>& basis, long T) {
        for (long ee = 0; ee < T; ++ee) {
          const Rat c1 = basis[j].coeff(ee);
          if (c1.is_zero()) continue;
          const Rat x = -partial(basis, a, ee) / c1;
          if (c1.sign() > 0) alo = alo ? std::max(*alo, x) : x;
          else ahi = ahi ? std::min(*ahi, x) : x;
        }
      };
      bound(lat_, w_.lattice_trunc);
      bound(sh_, w_.shadow_trunc);
      if (!alo || !ahi) {
        residual(a, j, "nonnegativity leaves a_" + std::to_string(j) + " unbounded in the window");
        return;
      }
      const Rat b1 = known + mult * *alo, b2 = known + mult * *ahi;
      lo = std::max(Rat(0), std::min(b1, b2));
      hi = std::max(b1, b2);
    }
    bool any = false;
    Int beta = lo.ceil();
    if (beta % 2 != 0) beta += 1;
    for (; Rat(beta) <= hi; beta += 2) {
      const Rat aj = (Rat(beta) - known) / mult;
      if (!aj.is_integer()) continue;
      any = true;
      a[j] = aj;
      resolve(a, i + 1);
      a[j].reset();
      if (done()) return;
    }
    if (!any) {
      Branch b;
      for (const auto& x : a)
        if (x) b.coeffs.push_back(*x);
      b.rejection = Reason::NonIntegral;
      b.violated_exponent = e;
      b.detail = "no integral a_" + std::to_string(j) + " makes the q^(" + r.str() + ")" +
                 " shadow coefficient an even integer in [" + lo.str() + ", " + hi.str() + "]";
      record(std::move(b));
    }
  }

  void leaf(const std::vector<std::optional<Rat>>& a) {
    Branch b;
    for (const auto& x : a) b.coeffs.push_back(*x);
    b.lattice = combine(lat_, b.coeffs, w_.lattice_trunc);
    b.shadow = combine(sh_, b.coeffs, w_.shadow_trunc);
    classify(b);
    record(std::move(b));
  }

  void reject(Branch& b, Reason why, long e, const Rat& value, bool lattice_side, const std::string& what) {
    b.rejection = why;
    b.violated_exponent = e;
    b.violated_value = value;
    b.lattice_side = lattice_side;
    b.detail = std::string(lattice_side ? "theta" : "shadow") + " coefficient " + value.str() + " at q^(" +
               quarter(e).str() + ") " + what;
  }

  void classify(Branch& b) {
    const auto& L = b.lattice.terms();
    const auto& S = b.shadow.terms();
    for (const auto& [e, c] : L)
      if (!c.is_integer()) return reject(b, Reason::NonIntegral, e, c, true, "is not an integer");
    for (const auto& [e, c] : S)
      if (!c.is_integer()) return reject(b, Reason::NonIntegral, e, c, false, "is not an integer");
    for (const auto& [e, c] : L)
      if (c.sign() < 0) return reject(b, Reason::Negative, e, c, true, "is negative");
    for (const auto& [e, c] : S)
      if (c.sign() < 0) return reject(b, Reason::Negative, e, c, false, "is negative");
    for (const auto& [e, c] : L)
      if (e > 0 && c.num() % 2 != 0) return reject(b, Reason::Parity, e, c, true, "is odd");
    if (b.lattice.coeff(0) != Rat(1)) return reject(b, Reason::Parity, 0, b.lattice.coeff(0), true, "is not 1");
    for (const auto& [e, c] : S)
      if (c.num() % 2 != 0) return reject(b, Reason::Parity, e, c, false, "is odd");

    const Rat mu(mu_);
    std::vector<std::pair<long, Rat>> small;
    for (const auto& [e, c] : S)
      if (quarter(e) < (mu + Rat(2)) / Rat(2)) small.emplace_back(e, c);
    if (small.size() > 1)
      return reject(b, Reason::ShadowCount, small[1].first, small[1].second, false,
                    "is a second nonzero shadow coefficient below norm " + ((mu + Rat(2)) / Rat(2)).str());
    for (const auto& [e, c] : S) {
      if (quarter(e) < mu / Rat(4))
        return reject(b, Reason::ShadowCount, e, c, false, "must vanish below norm " + (mu / Rat(4)).str());
      if (quarter(e) < mu / Rat(2) && c > Rat(2))
        return reject(b, Reason::ShadowCount, e, c, false, "exceeds 2 below norm " + (mu / Rat(2)).str());
    }
    for (const auto& [e, c] : small) {
      // odd n: the two shadow cosets are swapped by negation; even n: each is closed under it
      const long k = (c / Rat(n_ % 2 ? 2 : 4)).floor().get_si();
      if (k < 2) continue;
      GramVerdict g = gram_obstruction(n_, quarter(e), k, mu_);
      if (g.contradiction) {
        b.rejection = Reason::RankObstruction;
        b.violated_exponent = e;
        b.violated_value = Rat(k);
        b.detail = std::to_string(k) + " shadow vectors of norm " + quarter(e).str() + " in one coset: " + g.detail;
        b.gram = std::move(g);
        return;
      }
      b.gram = std::move(g);
    }
  }

  int n_, mu_, J_;
  ScanWindow w_;
  ScanOptions opts_;
  std::vector<QSeries> lat_, sh_;
  FeasibilityReport report_;
  Reason deepest_ = Reason::None;
};

}  // namespace

FeasibilityReport feasibility_scan(int n, int mu, const ScanWindow& window, const ScanOptions& opts) {
  return Scanner(n, mu, window, opts).run();
}

// ---- even lattices -------------------------------------------------------------

std::optional<EvenScan> even_extremal_scan(int n) {
  if (n <= 0 || n % 8 != 0) return std::nullopt;
  const int d = n / 24 + 1;  // dimension of the weight-n/2 space
  const long T = 8L * (d + 5);
  const QSeries e4 = eisenstein_e4(T), delta = cusp_delta24(T);
  std::vector<QSeries> basis;
  for (int b = 0; b < d; ++b) basis.push_back((e4.pow(n / 8 - 3 * b) * delta.pow(b)).truncated(T));
  for (int m = d; m >= 1; --m) {
    std::vector<Rat> c;
    for (int k = 0; k < m; ++k) {
      Rat v = k == 0 ? Rat(1) : Rat(0);
      for (int b = 0; b < k; ++b) v -= c[b] * basis[b].coeff(8L * k);
      c.push_back(v);
    }
    QSeries f(T);
    for (int b = 0; b < m; ++b) f += basis[b] * c[b];
    bool ok = f.coeff(0) == Rat(1);
    for (const auto& [e, v] : f.terms())
      if (e > 0 && (!v.is_integer() || v.sign() < 0 || v.num() % 2 != 0)) ok = false;
    if (ok) return EvenScan{2 * m, f};
  }
  return std::nullopt;
}

// ---- certificates ------------------------------------------------------------

BoundCertificate mu_upper(int n, const ScanConfig& cfg) {
  if (n < 1 || n > 48) throw std::invalid_argument("dimension outside supported range 1..48");
  BoundCertificate cert;
  cert.dim = n;
  for (int mu = n / 8 + 1; mu >= 1; --mu) {
    ScanWindow w = ScanWindow::defaults(n, mu);
    if (cfg.shadow_trunc > 0) w.shadow_trunc = cfg.shadow_trunc;
    cert.odd_reports.push_back(feasibility_scan(n, mu, w));
    if (cert.odd_reports.back().verdict == Verdict::Feasible) {
      cert.odd_mu = mu;
      break;
    }
  }
  cert.even = even_extremal_scan(n);
  if (cert.even) cert.even_mu = cert.even->mu;
  cert.mu_upper = std::max(cert.odd_mu, cert.even_mu.value_or(0));
  return cert;
}

std::optional<KnownLowerBound> known_lower_bound(int n) {
  struct Entry {
    int mu;
    const char* provenance;
    bool external;
  };
  static const Entry table[41] = {
      {0, "", false},
      {1, "Z^n", false}, {1, "Z^n", false}, {1, "Z^n", false}, {1, "Z^n", false},
      {1, "Z^n", false}, {1, "Z^n", false}, {1, "Z^n", false}, {2, "E8", false},
      {1, "Z^n", false}, {1, "Z^n", false}, {1, "Z^n", false}, {2, "D12+", false},
      {1, "Z^n", false}, {2, "E7^2+", false}, {2, "A15+", false}, {2, "D16+ / E8^2", false},
      {2, "classical (root system glue)", false}, {2, "classical (root system glue)", false},
      {2, "classical (root system glue)", false}, {2, "classical (root system glue)", false},
      {2, "classical (root system glue)", false}, {2, "classical (root system glue)", false},
      {3, "shorter Leech lattice O23", false}, {4, "Leech lattice", false},
      {2, "external result: complete enumeration of the 25-dimensional genus", true},
      {3, "external result: unique 26-dimensional lattice of minimal norm 3", true},
      {3, "external result: classification in dimension 27", true},
      {3, "external result: classification in dimension 28", true},
      {3, "this tool: shave of the glued sqrt2 A15+ lattice", false},
      {3, "this tool: glue of two copies of sqrt2 A15+", false},
      {3, "this tool: shave of the glued sqrt2 D16+ lattice", false},
      {4, "this tool: Reed-Muller code lattice / glue of sqrt2 D16+", false},
      {3, "external construction", true}, {3, "external construction", true},
      {3, "external construction", true}, {4, "external construction (minimal norm 4)", true},
      {3, "external existence theorem", true}, {3, "external existence theorem", true},
      {3, "external existence theorem", true}, {4, "classical (even lattices of minimal norm 4)", false},
  };
  if (n < 1 || n > 40) return std::nullopt;
  const Entry& e = table[n];
  return KnownLowerBound{e.mu, e.provenance, e.external};
}

std::vector<TableRow> table1(int from, int to, const ScanConfig& cfg, unsigned workers) {
  if (from < 1 || to > 48 || from > to) throw std::invalid_argument("table range must satisfy 1 <= from <= to <= 48");
  std::vector<TableRow> rows(static_cast<std::size_t>(to - from + 1));
  std::atomic<int> next{from};
  auto work = [&] {
    for (int n = next++; n <= to; n = next++) {
      auto& row = rows[static_cast<std::size_t>(n - from)];
      row.cert = mu_upper(n, cfg);
      row.lower = known_lower_bound(n);
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rows.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace unimod
