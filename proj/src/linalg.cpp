#include "unimod/linalg.hpp"

#include <algorithm>

namespace unimod {

bool is_integral(const RatMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integer()) return false;
  return true;
}

bool is_integral(const RatVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_integer()) return false;
  return true;
}

Int common_denominator(const RatMatrix& m) {
  Int d = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).den());
  return d;
}

namespace {

using IntRow = std::vector<Int>;

std::size_t leading(const IntRow& r) {
  for (std::size_t c = 0; c < r.size(); ++c)
    if (r[c] != 0) return c;
  return r.size();
}

// b ← x·b + y·v, v ← (b_p/g)·v − (v_p/g)·b  (unimodular on the pair)
void gcd_combine(IntRow& b, IntRow& v, std::size_t p) {
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), b[p].get_mpz_t(), v[p].get_mpz_t());
  const Int bp = b[p] / g, vp = v[p] / g;
  for (std::size_t c = p; c < b.size(); ++c) {
    const Int nb = x * b[c] + y * v[c];
    const Int nv = bp * v[c] - vp * b[c];
    b[c] = nb;
    v[c] = nv;
  }
}

}  // namespace

RatMatrix row_basis(const RatMatrix& rows) {
  const Int d = common_denominator(rows);
  const std::size_t ncols = static_cast<std::size_t>(rows.cols());
  std::vector<IntRow> basis;  // sorted by strictly increasing leading column
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    IntRow v(ncols);
    for (std::size_t c = 0; c < ncols; ++c) v[c] = (rows(i, static_cast<Eigen::Index>(c)) * Rat(d)).num();
    std::size_t k = 0;
    while (true) {
      const std::size_t lead = leading(v);
      if (lead == ncols) break;
      while (k < basis.size() && leading(basis[k]) < lead) ++k;
      if (k < basis.size() && leading(basis[k]) == lead) {
        gcd_combine(basis[k], v, lead);
        continue;
      }
      basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(k), std::move(v));
      break;
    }
  }
  // normalise pivots and reduce entries above each pivot
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::size_t p = leading(basis[k]);
    if (basis[k][p] < 0)
      for (auto& e : basis[k]) e = -e;
    for (std::size_t r = 0; r < k; ++r) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), basis[r][p].get_mpz_t(), basis[k][p].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = p; c < ncols; ++c) basis[r][c] -= q * basis[k][c];
    }
  }
  RatMatrix out(static_cast<Eigen::Index>(basis.size()), rows.cols());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t c = 0; c < ncols; ++c)
      out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(c)) = Rat(basis[k][c], d);
  return out;
}

RatMatrix complete_to_unimodular(const RatVector& c) {
  const Eigen::Index n = c.size();
  if (!is_integral(c)) throw std::invalid_argument("complete_to_unimodular: non-integral vector");
  std::vector<Int> r(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = c(i).num();
  RatMatrix w = RatMatrix::Identity(n, n);
  // invariant: c = r·w
  Eigen::Index piv = -1;
  while (true) {
    piv = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Int& ri = r[static_cast<std::size_t>(i)];
      if (ri != 0 && (piv < 0 || abs(ri) < abs(r[static_cast<std::size_t>(piv)]))) piv = i;
    }
    if (piv < 0) throw std::invalid_argument("complete_to_unimodular: zero vector");
    bool others = false;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == piv || r[static_cast<std::size_t>(j)] == 0) continue;
      others = true;
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), r[static_cast<std::size_t>(j)].get_mpz_t(), r[static_cast<std::size_t>(piv)].get_mpz_t());
      r[static_cast<std::size_t>(j)] -= q * r[static_cast<std::size_t>(piv)];
      w.row(piv) += Rat(q) * w.row(j);
    }
    if (!others) break;
  }
  if (abs(r[static_cast<std::size_t>(piv)]) != 1)
    throw std::invalid_argument("complete_to_unimodular: vector is not primitive");
  if (piv != 0) {
    std::swap(r[0], r[static_cast<std::size_t>(piv)]);
    w.row(0).swap(w.row(piv));
  }
  if (r[0] < 0) w.row(0) = -w.row(0);
  return w;
}

}  // namespace unimod
