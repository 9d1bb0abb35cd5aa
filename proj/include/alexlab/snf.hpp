#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace alexlab {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix for the exact linear algebra backing homology.
// Row/column counts stay small here because complexes are reduced by
// combinatorial collapses first; correctness over speed.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<BigInt>> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(r, std::vector<BigInt>(c)) {}
  BigInt& at(int r, int c) { return a[r][c]; }
  const BigInt& at(int r, int c) const { return a[r][c]; }
  static IntMat identity(int n);
  IntMat mul(const IntMat& other) const;
};

// Invariant factors d_1 | d_2 | ... (nonzero ones only), plus the rank.
struct SmithResult {
  std::vector<BigInt> invariants;
  int rank = 0;
};
SmithResult smith_normal_form(IntMat m);

// Smith form with the left transform: U * A * V = D.  U is unimodular.
struct SmithLeft {
  std::vector<BigInt> diag;  // full diagonal, zeros included, length min(r,c)
  int rank = 0;
  IntMat u;
};
SmithLeft smith_with_left(IntMat m);

// Integer column span basis of ker(A), as columns of the result.
IntMat kernel_basis(const IntMat& a);

// Solve A x = b exactly over the integers, where the columns of A are
// independent (lattice coordinates).  nullopt when no integer solution.
std::optional<std::vector<BigInt>> solve_exact(const IntMat& a, const std::vector<BigInt>& b);

int integer_rank(IntMat a);

}  // namespace alexlab
