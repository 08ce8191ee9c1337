#include "unimod/lattice.hpp"

#include <stdexcept>

namespace unimod {

Lattice Lattice::from_gram(RatMatrix gram, std::string name) {
  if (gram.rows() == 0) throw std::invalid_argument("lattice of dimension 0");
  if (!is_symmetric(gram)) throw std::invalid_argument("gram matrix is not symmetric");
  const auto f = ldl(gram);
  if (!f.positive_definite) throw std::invalid_argument("gram matrix is not positive definite");
  Lattice L;
  L.name = std::move(name);
  L.gram = std::move(gram);
  return L;
}

Lattice Lattice::from_generators(const RatMatrix& spanning, const Rat& scale_sq, std::string name) {
  if (scale_sq.sign() <= 0) throw std::invalid_argument("scale_sq must be positive");
  RatMatrix basis = row_basis(spanning);
  RatMatrix gram = (basis * basis.transpose()) * scale_sq;
  Lattice L = from_gram(std::move(gram), std::move(name));
  L.embedding = Embedding{std::move(basis), scale_sq};
  return L;
}

Lattice span_in(const Lattice& L, const RatMatrix& rows, std::string name) {
  const RatMatrix basis = row_basis(rows);
  if (basis.rows() == 0) throw std::invalid_argument("empty span");
  Lattice out = Lattice::from_gram(basis * L.gram * basis.transpose(), std::move(name));
  if (L.embedding) out.embedding = Embedding{basis * L.embedding->generators, L.embedding->scale_sq};
  return out;
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Odd: return "odd";
    case Parity::Even: return "even";
    case Parity::NotUnimodular: return "not-unimodular";
  }
  return "?";
}

UnimodularCheck check_unimodular(const Lattice& L) {
  if (!ldl(L.gram).positive_definite) throw std::invalid_argument("gram matrix is not positive definite");
  UnimodularCheck c;
  c.det = determinant(L.gram);
  if (!is_integral(L.gram)) {
    c.detail = "gram matrix is not integral";
    return c;
  }
  if (c.det != Rat(1)) {
    c.detail = "det=" + c.det.str();
    return c;
  }
  c.parity = Parity::Even;
  for (int i = 0; i < L.dim(); ++i)
    if (L.gram(i, i).num() % 2 != 0) c.parity = Parity::Odd;
  c.detail = to_string(c.parity);
  return c;
}

RatMatrix even_sublattice_basis(const Lattice& L) {
  if (!is_integral(L.gram)) throw std::invalid_argument("even sublattice needs an integral lattice");
  const int n = L.dim();
  int p = -1;
  for (int i = 0; i < n; ++i)
    if (L.gram(i, i).num() % 2 != 0) {
      p = i;
      break;
    }
  RatMatrix b = RatMatrix::Identity(n, n);
  if (p < 0) return b;
  // x·x ≡ Σ x_i G_ii (mod 2)
  for (int i = 0; i < n; ++i) {
    if (i == p) b(i, i) = Rat(2);
    else if (L.gram(i, i).num() % 2 != 0) b(i, p) = Rat(-1);
  }
  return b;
}

Lattice even_sublattice(const Lattice& L) {
  return span_in(L, even_sublattice_basis(L), L.name.empty() ? "" : L.name + "_0");
}

Lattice dual(const Lattice& L) {
  const RatMatrix inv = inverse(L.gram);
  Lattice out = Lattice::from_gram(inv, L.name.empty() ? "" : L.name + "*");
  // dual basis rows: G⁻¹·B, since G⁻¹·B·(s·Bᵀ) = I
  if (L.embedding)
    out.embedding = Embedding{inv * L.embedding->generators, L.embedding->scale_sq};
  return out;
}

RatVector characteristic_vector(const Lattice& L) {
  RatMatrix d(L.dim(), 1);
  for (int i = 0; i < L.dim(); ++i) d(i, 0) = L.gram(i, i);
  return solve(L.gram, d).col(0);
}

std::pair<Coset, Coset> shadow_cosets(const Lattice& L) {
  const auto chk = check_unimodular(L);
  if (chk.parity != Parity::Odd)
    throw std::invalid_argument("shadow cosets need an odd unimodular lattice (got " + chk.detail + ")");
  const int n = L.dim();
  const RatMatrix b0 = even_sublattice_basis(L);
  Lattice base = span_in(L, b0, L.name.empty() ? "" : L.name + "_0");
  // span_in row-reduces; re-express offsets in the reduced basis
  const RatMatrix basis = row_basis(b0);
  const RatVector s = characteristic_vector(L) / Rat(2);
  RatVector second = -s;
  if (n % 2 == 0) {
    // s ≡ −s mod Λ_0 here; the other class is s + e_p with e_p of odd norm
    int p = 0;
    while (L.gram(p, p).num() % 2 == 0) ++p;
    second = s;
    second(p) += Rat(1);
  }
  auto to_base = [&](const RatVector& x) -> RatVector {
    return solve<Rat>(basis.transpose(), RatMatrix(x)).col(0);
  };
  return {Coset{base, to_base(s)}, Coset{base, to_base(second)}};
}

Rat inner(const Lattice& L, const RatVector& x, const RatVector& y) { return (x.transpose() * L.gram * y)(0, 0); }

Rat norm(const Lattice& L, const RatVector& x) { return inner(L, x, x); }

unsigned long long NormCount::at(const Rat& r) const {
  const auto it = counts.find(r);
  return it == counts.end() ? 0 : it->second;
}

unsigned long long NormCount::total() const {
  unsigned long long t = 0;
  for (const auto& [r, c] : counts) t += c;
  return t;
}

namespace {

QSeries series_from_counts(const NormCount& nc, const Rat& max_norm) {
  const long T = (max_norm * Rat(4)).floor().get_si() + 1;
  QSeries::Terms terms;
  for (const auto& [r, c] : nc.counts) {
    const Rat e = r * Rat(4);
    if (!e.is_integer()) throw std::domain_error("norm " + r.str() + " is off the quarter grid");
    terms[e.num().get_si()] += Rat(static_cast<long long>(c));
  }
  return QSeries(std::move(terms), T);
}

}  // namespace

QSeries theta_by_enumeration(const Lattice& L, const Rat& max_norm) {
  return series_from_counts(enumerate_short(L, max_norm).counts, max_norm);
}

QSeries shadow_by_enumeration(const Lattice& L, const Rat& max_norm) {
  const auto [a, b] = shadow_cosets(L);
  NormCount total = enumerate_short(a, max_norm).counts;
  for (const auto& [r, c] : enumerate_short(b, max_norm).counts.counts) total.counts[r] += c;
  return series_from_counts(total, max_norm);
}

}  // namespace unimod
