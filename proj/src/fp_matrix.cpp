#include "plateau/fp_matrix.hpp"

#include <stdexcept>

namespace plateau {

int fp_inverse(int a, int p) {
    a = ((a % p) + p) % p;
    if (a == 0) throw std::domain_error("no inverse of 0");
    int r = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

std::vector<int> fp_rref(FpMatrix& mat, int p) {
    std::vector<int> pivots;
    if (mat.empty()) return pivots;
    const int rows = static_cast<int>(mat.size());
    const int cols = static_cast<int>(mat[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (mat[i][c] % p != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(mat[r], mat[pivot]);
        int inv = fp_inverse(mat[r][c], p);
        for (int j = 0; j < cols; ++j) mat[r][j] = mat[r][j] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || mat[i][c] == 0) continue;
            int f = mat[i][c];
            for (int j = 0; j < cols; ++j)
                mat[i][j] = ((mat[i][j] - f * mat[r][j]) % p + p) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int fp_rank(FpMatrix mat, int p) {
    return static_cast<int>(fp_rref(mat, p).size());
}

FpMatrix fp_nullspace(const FpMatrix& mat, int p) {
    if (mat.empty()) return {};
    const int cols = static_cast<int>(mat[0].size());
    FpMatrix rr = mat;
    std::vector<int> pivots = fp_rref(rr, p);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    FpMatrix basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = (p - rr[i][free] % p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

FpMatrix fp_mul_transpose(const FpMatrix& a, const FpMatrix& b, int p) {
    FpMatrix out(a.size(), std::vector<int>(b.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            long s = 0;
            for (std::size_t t = 0; t < a[i].size(); ++t)
                s += static_cast<long>(a[i][t]) * b[j][t];
            out[i][j] = static_cast<int>(s % p);
        }
    return out;
}

FpMatrix fp_complement_basis(const FpMatrix& base, const FpMatrix& candidates, int p) {
    FpMatrix acc = base;
    int rank = fp_rank(acc, p);
    FpMatrix out;
    for (const auto& cand : candidates) {
        acc.push_back(cand);
        int r = fp_rank(acc, p);
        if (r > rank) {
            rank = r;
            out.push_back(cand);
        } else {
            acc.pop_back();
        }
    }
    return out;
}

}  // namespace plateau
