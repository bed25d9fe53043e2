#include "cobord/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace cobord {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols != b.rows) throw dimension_mismatch("matrix product shape");
  IntegerMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const mpz_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        if (b.at(k, j) != 0) c.at(i, j) += aik * b.at(k, j);
      }
    }
  return c;
}

IntegerMatrix transpose(const IntegerMatrix& a) {
  IntegerMatrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

mpz_class determinant(const IntegerMatrix& a) {
  if (a.rows != a.cols) throw dimension_mismatch("determinant of non-square matrix");
  int n = a.rows;
  if (n == 0) return 1;
  IntegerMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p == -1) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = q;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : mpz_class(-m.at(n - 1, n - 1));
}

namespace {

struct SNFWork {
  IntegerMatrix d, u, v;
  mpz_class det_u = 1, det_v = 1;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < d.cols; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
    det_u = -det_u;
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
    det_v = -det_v;
  }
  void negate_row(int a) {
    for (int j = 0; j < d.cols; ++j) d.at(a, j) = -d.at(a, j);
    for (int j = 0; j < u.cols; ++j) u.at(a, j) = -u.at(a, j);
    det_u = -det_u;
  }
  // row[a] += q * row[b]
  void add_row(int a, int b, const mpz_class& q) {
    if (q == 0) return;
    for (int j = 0; j < d.cols; ++j) d.at(a, j) += q * d.at(b, j);
    for (int j = 0; j < u.cols; ++j) u.at(a, j) += q * u.at(b, j);
  }
  // col[a] += q * col[b]
  void add_col(int a, int b, const mpz_class& q) {
    if (q == 0) return;
    for (int i = 0; i < d.rows; ++i) d.at(i, a) += q * d.at(i, b);
    for (int i = 0; i < v.rows; ++i) v.at(i, a) += q * v.at(i, b);
  }
};

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& m) {
  SNFWork w;
  w.d = m;
  w.u = IntegerMatrix::identity(m.rows);
  w.v = IntegerMatrix::identity(m.cols);
  const int nmin = std::min(m.rows, m.cols);

  for (int k = 0; k < nmin; ++k) {
    // Pivot: smallest nonzero absolute value in the remaining block, ties by
    // (row, col) position. Deterministic output depends on this rule.
    int pi = -1, pj = -1;
    mpz_class best;
    for (int i = k; i < m.rows; ++i)
      for (int j = k; j < m.cols; ++j) {
        const mpz_class& e = w.d.at(i, j);
        if (e == 0) continue;
        mpz_class a = abs(e);
        if (pi == -1 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi == -1) break;  // all zero: done
    w.swap_rows(k, pi);
    w.swap_cols(k, pj);

    // Clear row and column k; a failed exact division re-enters with a
    // smaller pivot, so this terminates.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = k + 1; i < m.rows; ++i) {
        if (w.d.at(i, k) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w.d.at(i, k).get_mpz_t(), w.d.at(k, k).get_mpz_t());
        w.add_row(i, k, -q);
        if (w.d.at(i, k) != 0) {  // remainder becomes the new, smaller pivot
          w.swap_rows(k, i);
          clean = false;
        }
      }
      for (int j = k + 1; j < m.cols; ++j) {
        if (w.d.at(k, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w.d.at(k, j).get_mpz_t(), w.d.at(k, k).get_mpz_t());
        w.add_col(j, k, -q);
        if (w.d.at(k, j) != 0) {
          w.swap_cols(k, j);
          clean = false;
        }
      }
    }
    if (w.d.at(k, k) < 0) w.negate_row(k);
  }

  // Enforce the divisibility chain d_k | d_{k+1} by bubbling adjacent pairs:
  // each fix replaces (d_k, d_{k+1}) with (gcd, lcm) up to sign, strictly
  // shrinking d_k, so the pass stabilizes.
  int rank = 0;
  while (rank < nmin && w.d.at(rank, rank) != 0) ++rank;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k + 1 < rank; ++k) {
      int j = k + 1;
      if (w.d.at(j, j) % w.d.at(k, k) == 0) continue;
      changed = true;
      w.add_col(k, j, 1);  // fold d_{k+1} into column k, then re-reduce the block
      bool clean = false;
      while (!clean) {
        clean = true;
        if (w.d.at(j, k) != 0) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), w.d.at(j, k).get_mpz_t(), w.d.at(k, k).get_mpz_t());
          w.add_row(j, k, -q);
          if (w.d.at(j, k) != 0) {
            w.swap_rows(k, j);
            clean = false;
          }
        }
        if (w.d.at(k, j) != 0) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), w.d.at(k, j).get_mpz_t(), w.d.at(k, k).get_mpz_t());
          w.add_col(j, k, -q);
          if (w.d.at(k, j) != 0) {
            w.swap_cols(k, j);
            clean = false;
          }
        }
      }
      if (w.d.at(k, k) < 0) w.negate_row(k);
      if (w.d.at(j, j) < 0) w.negate_row(j);
    }
  }

  SNFResult res;
  res.u = std::move(w.u);
  res.d = std::move(w.d);
  res.v = std::move(w.v);
  res.det_u = w.det_u;
  res.det_v = w.det_v;
  res.rank = rank;

  // The invariants are cheap to break and expensive to debug downstream;
  // verify by re-multiplication before returning.
  if (multiply(multiply(res.u, m), res.v) != res.d)
    throw internal_error("SNF verification failed: U*M*V != D");
  for (int i = 0; i < res.d.rows; ++i)
    for (int j = 0; j < res.d.cols; ++j)
      if (i != j && res.d.at(i, j) != 0) throw internal_error("SNF result not diagonal");
  for (int k = 0; k + 1 < res.rank; ++k)
    if (res.d.at(k + 1, k + 1) % res.d.at(k, k) != 0)
      throw internal_error("SNF divisibility chain broken");
  if (res.det_u != 1 && res.det_u != -1) throw internal_error("U not unimodular");
  if (res.det_v != 1 && res.det_v != -1) throw internal_error("V not unimodular");
  return res;
}

std::vector<mpz_class> SNFResult::divisors() const {
  std::vector<mpz_class> out;
  for (int k = 0; k < rank; ++k) out.push_back(d.at(k, k));
  return out;
}

HomologyGroup homology_group(const IntegerMatrix& boundary_k,
                             const IntegerMatrix& boundary_kplus1) {
  if (boundary_k.cols != boundary_kplus1.rows)
    throw dimension_mismatch("chain groups disagree between the two boundary maps");
  IntegerMatrix comp = multiply(boundary_k, boundary_kplus1);
  for (const mpz_class& e : comp.entries)
    if (e != 0) throw not_a_chain_complex("boundary_k * boundary_kplus1 != 0");

  SNFResult snf_k = smith_normal_form(boundary_k);
  SNFResult snf_k1 = smith_normal_form(boundary_kplus1);

  HomologyGroup h;
  h.betti = (boundary_k.cols - snf_k.rank) - snf_k1.rank;
  for (const mpz_class& dkk : snf_k1.divisors())
    if (dkk > 1) h.torsion.push_back(dkk);
  return h;
}

bool is_relative_boundary(const std::vector<mpz_class>& z, const IntegerMatrix& boundary_kplus1) {
  if (static_cast<int>(z.size()) != boundary_kplus1.rows)
    throw dimension_mismatch("cycle vector length != chain group rank");
  SNFResult snf = smith_normal_form(boundary_kplus1);
  // z in im(M)  <=>  U z in im(D): divisibility on the diagonal, zero below.
  std::vector<mpz_class> uz(boundary_kplus1.rows, 0);
  for (int i = 0; i < snf.u.rows; ++i)
    for (int j = 0; j < snf.u.cols; ++j)
      if (snf.u.at(i, j) != 0 && z[j] != 0) uz[i] += snf.u.at(i, j) * z[j];
  for (int i = 0; i < boundary_kplus1.rows; ++i) {
    if (i < snf.rank) {
      if (uz[i] % snf.d.at(i, i) != 0) return false;
    } else if (uz[i] != 0) {
      return false;
    }
  }
  return true;
}

bool is_relative_boundary(const std::vector<long long>& z, const IntegerMatrix& boundary_kplus1) {
  std::vector<mpz_class> zz(z.size());
  for (size_t i = 0; i < z.size(); ++i) zz[i] = static_cast<long>(z[i]);
  return is_relative_boundary(zz, boundary_kplus1);
}

}  // namespace cobord
