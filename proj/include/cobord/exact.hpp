#pragma once

#include <gmpxx.h>

#include <vector>

#include "cobord/errors.hpp"

namespace cobord {

// Dense arbitrary-precision integer matrix. SNF pivoting grows entries, so
// fixed-width integers are not an option here.
struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> entries;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), entries(std::size_t(r) * c, 0) {}

  mpz_class& at(int i, int j) { return entries[std::size_t(i) * cols + j]; }
  const mpz_class& at(int i, int j) const { return entries[std::size_t(i) * cols + j]; }

  static IntegerMatrix identity(int n);
  bool operator==(const IntegerMatrix&) const = default;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix transpose(const IntegerMatrix& a);

// Determinant by fraction-free (Bareiss) elimination; used as the independent
// route for unimodularity checks in tests.
mpz_class determinant(const IntegerMatrix& a);

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r.
struct SNFResult {
  IntegerMatrix u, d, v;
  mpz_class det_u = 1;  // tracked through the elementary operations
  mpz_class det_v = 1;
  int rank = 0;

  std::vector<mpz_class> divisors() const;  // nonzero diagonal of d
};

SNFResult smith_normal_form(const IntegerMatrix& m);

struct HomologyGroup {
  long long betti = 0;
  std::vector<mpz_class> torsion;  // entries > 1, in divisibility order

  bool operator==(const HomologyGroup&) const = default;
};

// Homology at degree k of ... -> C_{k+1} --boundary_kplus1--> C_k --boundary_k--> C_{k-1} -> ...
HomologyGroup homology_group(const IntegerMatrix& boundary_k, const IntegerMatrix& boundary_kplus1);

// Exact membership of z in the column lattice of boundary_kplus1.
bool is_relative_boundary(const std::vector<mpz_class>& z, const IntegerMatrix& boundary_kplus1);
bool is_relative_boundary(const std::vector<long long>& z, const IntegerMatrix& boundary_kplus1);

}  // namespace cobord
