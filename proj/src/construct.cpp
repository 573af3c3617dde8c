#include "plateau/construct.hpp"

namespace plateau {

FpMatrix cbar_rows(const PFunction& f) {
    const auto& F = *f.field;
    const int m = F.m();
    const std::uint32_t q = F.q();
    const auto& order = F.canonical_order();

    FpMatrix rows;
    rows.reserve(m + 2);
    rows.emplace_back(q, 1);
    {
        std::vector<int> frow(q);
        for (std::uint32_t i = 0; i < q; ++i) frow[i] = f.table[order[i]];
        rows.push_back(std::move(frow));
    }
    for (int j = 0; j < m; ++j) {
        std::vector<int> trow(q);
        Elem aj = F.alpha_pow(j);
        for (std::uint32_t i = 0; i < q; ++i) trow[i] = F.trace(F.mul(aj, order[i]));
        rows.push_back(std::move(trow));
    }
    return rows;
}

LinearCode build_cbar(const PFunction& f) {
    return LinearCode(f.field->p(), f.field->q(), cbar_rows(f));
}

LinearCode build_cf(const PFunction& f) {
    FpMatrix rows = cbar_rows(f);
    rows.erase(rows.begin());
    return LinearCode(f.field->p(), f.field->q(), std::move(rows));
}

LinearCode build_cstar(const PFunction& f) {
    FpMatrix rows = cbar_rows(f);
    rows.erase(rows.begin());
    // The deleted coordinate is x = 0, where a f(0) + trace(0) is always 0.
    for (auto& row : rows) row.pop_back();
    return LinearCode(f.field->p(), f.field->q() - 1, std::move(rows));
}

FpMatrix g1_rows(const PFunction& f) {
    FpMatrix rows = cbar_rows(f);
    const int p = f.field->p();
    for (auto& v : rows[1]) v = (v + 1) % p;
    return rows;
}

LinearCode build_extended(const PFunction& f) {
    const auto& F = *f.field;
    const int m = F.m(), k = m + 2;
    const std::uint32_t q = F.q();
    FpMatrix block = g1_rows(f);
    FpMatrix rows(k, std::vector<int>(k + q, 0));
    for (int i = 0; i < k; ++i) {
        rows[i][i] = 1;
        for (std::uint32_t j = 0; j < q; ++j) rows[i][k + j] = block[i][j];
    }
    return LinearCode(F.p(), static_cast<int>(q) + k, std::move(rows));
}

ConstructionBundle build_bundle(const PFunction& f) {
    WalshProfile profile = analyze(f);
    return ConstructionBundle{
        f,
        std::move(profile),
        build_cbar(f),
        build_cf(f),
        build_cstar(f),
        g1_rows(f),
        build_extended(f),
    };
}

namespace {

int self_inner(const std::vector<int>& v, int p) {
    long s = 0;
    for (int x : v) s += static_cast<long>(x) * x;
    return static_cast<int>(s % p);
}

// First nonzero isotropic vector of span(basis) in odometer order over the
// coefficient tuples (first basis vector varies fastest). The inner-product
// form descends to the quotient by the current code, so searching the
// complement span alone is enough; a zero of a quadratic form in three
// variables over GF(p) always exists, so a hit never needs more than p^3
// candidates once the span has dimension 3.
std::optional<std::vector<int>> first_isotropic(const FpMatrix& basis, int p, int n) {
    const int dim = static_cast<int>(basis.size());
    if (dim == 0) return std::nullopt;
    std::vector<int> digits(dim, 0);
    std::vector<int> v(n, 0);
    for (;;) {
        int pos = 0;
        while (pos < dim) {
            for (int j = 0; j < n; ++j) {
                v[j] += basis[pos][j];
                if (v[j] >= p) v[j] -= p;
            }
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == dim) return std::nullopt;  // wrapped around: span exhausted
        if (self_inner(v, p) == 0) return v;
    }
}

}  // namespace

SelfDualResult extend_to_self_dual(const LinearCode& code) {
    if (!gram_rank(code).self_orthogonal) throw NotSelfOrthogonalError();
    const int p = code.p(), n = code.n();

    if (p % 4 == 3) {
        if (n % 4 != 0)
            return {std::nullopt, "length is not divisible by 4 (required for p = 3 mod 4)"};
    } else {
        if (n % 2 != 0)
            return {std::nullopt, "length is odd"};
    }

    FpMatrix rows = code.gen();
    while (static_cast<int>(rows.size()) < n / 2) {
        FpMatrix dual = fp_nullspace(rows, p);
        FpMatrix complement = fp_complement_basis(rows, dual, p);
        auto v = first_isotropic(complement, p, n);
        if (!v) return {std::nullopt, "no isotropic vector in the dual quotient"};
        rows.push_back(std::move(*v));
    }
    return {LinearCode(p, n, std::move(rows)), ""};
}

}  // namespace plateau
