#ifndef PLATEAU_FP_MATRIX_HPP
#define PLATEAU_FP_MATRIX_HPP

#include <vector>

namespace plateau {

/// Row-major dense matrix over GF(p) with entries in [0, p).
using FpMatrix = std::vector<std::vector<int>>;

int fp_inverse(int a, int p);

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> fp_rref(FpMatrix& mat, int p);

int fp_rank(FpMatrix mat, int p);

/// Basis of the right null space {x : M x = 0}, one vector per row.
FpMatrix fp_nullspace(const FpMatrix& mat, int p);

/// A * B^T mod p.
FpMatrix fp_mul_transpose(const FpMatrix& a, const FpMatrix& b, int p);

/// Rows of `candidates` that extend span(base) to a basis of
/// span(base + candidates); `base` itself is not returned.
FpMatrix fp_complement_basis(const FpMatrix& base, const FpMatrix& candidates, int p);

}  // namespace plateau

#endif
