#include "plateau/plateaued.hpp"

#include <numeric>
#include <sstream>

#include "plateau/fp_matrix.hpp"

namespace plateau {

PFunction::PFunction(std::shared_ptr<const FieldCtx> ctx, std::vector<int> values)
    : field(std::move(ctx)), table(std::move(values)) {
    if (table.size() != field->q())
        throw InconsistentInputError("function table must cover the whole field");
    for (auto& v : table) v = ((v % field->p()) + field->p()) % field->p();
    if (table[0] != 0) throw InconsistentInputError("function must vanish at 0");
}

nlohmann::json PFunction::to_json() const {
    std::vector<int> ordered;
    ordered.reserve(table.size());
    for (Elem x : field->canonical_order()) ordered.push_back(table[x]);
    return nlohmann::json{{"field", field->to_json()}, {"table", ordered}};
}

PFunction PFunction::from_json(const nlohmann::json& j) {
    auto ctx = FieldCtx::from_json(j.at("field"));
    auto ordered = j.at("table").get<std::vector<int>>();
    if (ordered.size() != ctx->q())
        throw InconsistentInputError("function table must cover the whole field");
    std::vector<int> byhandle(ctx->q(), 0);
    const auto& order = ctx->canonical_order();
    for (std::size_t i = 0; i < order.size(); ++i) byhandle[order[i]] = ordered[i];
    return PFunction(ctx, std::move(byhandle));
}

QuadraticSpec::QuadraticSpec(std::shared_ptr<const FieldCtx> ctx, std::vector<Elem> cs)
    : field(std::move(ctx)), coeffs(std::move(cs)) {
    if (static_cast<int>(coeffs.size()) != expected_len(field->m()))
        throw InconsistentInputError("expected " + std::to_string(expected_len(field->m())) +
                                     " quadratic coefficients");
    for (Elem c : coeffs)
        if (c >= field->q()) throw InconsistentInputError("coefficient outside the field");
}

std::string QuadraticSpec::describe() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ",";
        if (coeffs[i] == 0) os << "0";
        else os << "a" << field->log(coeffs[i]);
    }
    return os.str();
}

nlohmann::json QuadraticSpec::to_json() const {
    std::vector<std::vector<int>> cs;
    cs.reserve(coeffs.size());
    for (Elem c : coeffs) cs.push_back(field->coeffs(c));
    return nlohmann::json{{"field", field->to_json()}, {"coeffs", cs}};
}

QuadraticSpec QuadraticSpec::from_json(const nlohmann::json& j) {
    auto ctx = FieldCtx::from_json(j.at("field"));
    auto cs = j.at("coeffs").get<std::vector<std::vector<int>>>();
    std::vector<Elem> coeffs;
    coeffs.reserve(cs.size());
    for (const auto& c : cs) coeffs.push_back(ctx->from_coeffs(c));
    return QuadraticSpec(ctx, std::move(coeffs));
}

int quad_eval(const QuadraticSpec& spec, Elem x) {
    const auto& F = *spec.field;
    if (x == 0) return 0;
    int s = 0;
    std::uint64_t pi = 1;  // p^i
    for (std::size_t i = 0; i < spec.coeffs.size(); ++i) {
        if (spec.coeffs[i] != 0)
            s += F.trace(F.mul(spec.coeffs[i], F.pow(x, pi + 1)));
        pi *= F.p();
    }
    return s % F.p();
}

PFunction quad_table(const QuadraticSpec& spec) {
    std::vector<int> table(spec.field->q(), 0);
    for (Elem x = 0; x < spec.field->q(); ++x) table[x] = quad_eval(spec, x);
    return PFunction(spec.field, std::move(table));
}

int kernel_dim(const QuadraticSpec& spec) {
    const auto& F = *spec.field;
    const int m = F.m(), p = F.p();
    // L as an m x m matrix over GF(p) on the power basis.
    auto L = [&](Elem z) {
        Elem acc = 0;
        std::uint64_t pi = 1;
        for (int i = 0; i < static_cast<int>(spec.coeffs.size()); ++i) {
            Elem a = spec.coeffs[i];
            if (a != 0) {
                std::uint64_t pm_i = 1;
                for (int j = 0; j < m - i; ++j) pm_i *= p;  // p^{m-i}
                acc = F.add(acc, F.mul(a, F.pow(z, pi)));
                acc = F.add(acc, F.mul(F.pow(a, pm_i), F.pow(z, pm_i)));
            }
            pi *= p;
        }
        return acc;
    };
    FpMatrix mat(m, std::vector<int>(m, 0));
    std::vector<int> unit(m, 0);
    for (int j = 0; j < m; ++j) {
        unit.assign(m, 0);
        unit[j] = 1;
        std::vector<int> img = F.coeffs(L(F.from_coeffs(unit)));
        for (int i = 0; i < m; ++i) mat[i][j] = img[i];
    }
    return m - fp_rank(mat, p);
}

std::string to_string(WalshCategory c) {
    switch (c) {
        case WalshCategory::Wrp: return "wrp";
        case WalshCategory::Wrpb: return "wrpb";
        case WalshCategory::WeaklyRegularOnly: return "weakly-regular-only";
        case WalshCategory::NonWeaklyRegular: return "non-weakly-regular";
        case WalshCategory::NotPlateaued: return "not-plateaued";
    }
    return "?";
}

std::size_t WalshProfile::support_size() const {
    std::size_t n = 0;
    for (char c : support) n += (c != 0);
    return n;
}

WalshProfile walsh_transform(const PFunction& f) {
    const auto& F = *f.field;
    const int p = F.p();
    const std::uint32_t q = F.q(), order = q - 1;

    WalshProfile prof;
    prof.field = f.field;
    prof.fn_table = f.table;
    prof.spectrum.reserve(q);

    std::vector<BigInt> counts(p);
    for (Elem beta = 0; beta < q; ++beta) {
        std::fill(counts.begin(), counts.end(), 0);
        if (beta == 0) {
            for (Elem x = 0; x < q; ++x) ++counts[f.table[x]];
        } else {
            // x = alpha^j runs over GF(q)^*; trace(beta x) is a shifted
            // lookup in the trace-of-alpha-power table.
            const std::uint32_t lb = F.log(beta);
            for (std::uint32_t j = 0; j < order; ++j) {
                int e = f.table[F.alpha_pow(j)] - F.trace_alpha_pow(lb + j);
                ++counts[((e % p) + p) % p];
            }
            ++counts[0];  // x = 0 contributes exponent f(0) = 0
        }
        prof.spectrum.push_back(CycInt::from_exponent_counts(p, counts));
    }
    return prof;
}

namespace {

// Smallest even exponent in {2, 4, ..., 2(p-1)} with gcd(h-1, p-1) = 1 such
// that g(a*x) = a^h g(x) for every scalar a and point x; empty if none.
std::optional<int> homogeneity_exponent(const FieldCtx& F, const std::vector<int>& g) {
    const int p = F.p();
    for (int h = 2; h <= 2 * (p - 1); h += 2) {
        if (std::gcd(h - 1, p - 1) != 1) continue;
        bool ok = true;
        for (int a = 1; a < p && ok; ++a) {
            long ah = 1;
            for (int i = 0; i < h; ++i) ah = ah * a % p;
            Elem sa = F.scalar(a);
            for (Elem x = 0; x < F.q(); ++x) {
                if (g[F.mul(sa, x)] != static_cast<int>(ah * g[x] % p)) { ok = false; break; }
            }
        }
        if (ok) return h;
    }
    return std::nullopt;
}

}  // namespace

void classify(WalshProfile& prof) {
    const auto& F = *prof.field;
    const int p = F.p(), m = F.m();
    const std::uint32_t q = F.q();

    prof.plateau_level.reset();
    prof.sign.reset();
    prof.homog_exp.reset();
    prof.dual_homog_exp.reset();
    prof.support.assign(q, 0);
    prof.dual_values.assign(q, 0);
    prof.category = WalshCategory::NotPlateaued;

    // Squared magnitudes W * conj(W) must all be rational and take exactly
    // the two values 0 and p^{m+s} for a single s.
    BigInt level_value = 0;
    for (Elem beta = 0; beta < q; ++beta) {
        auto mag = (prof.spectrum[beta] * prof.spectrum[beta].conj()).as_rational_int();
        if (!mag) return;
        if (*mag == 0) continue;
        if (level_value == 0) level_value = *mag;
        else if (level_value != *mag) return;
        prof.support[beta] = 1;
    }
    int s = -m;
    {
        BigInt v = level_value;
        while (v > 1) {
            if (v % p != 0) return;
            v /= p;
            ++s;
        }
        if (v != 1) return;
    }
    if (s < 0 || s > m) return;
    prof.plateau_level = s;
    prof.balanced = (prof.support[0] == 0);

    // Sign and dual-function extraction.
    bool weakly_regular = true;
    if (p == 2) {
        // Nonzero values are +-2^{(m+s)/2}; fold the sign into the dual value
        // and fix the global sign at +1.
        prof.sign = 1;
        for (Elem beta = 0; beta < q; ++beta) {
            if (!prof.support[beta]) continue;
            auto w = prof.spectrum[beta].as_rational_int();
            prof.dual_values[beta] = (w && *w > 0) ? 0 : 1;
        }
    } else {
        const CycInt base = sqrt_pstar_pow(p, m + s);
        std::optional<int> global_sign;
        for (Elem beta = 0; beta < q && weakly_regular; ++beta) {
            if (!prof.support[beta]) continue;
            bool matched = false;
            for (int eps = 1; eps >= -1 && !matched; eps -= 2) {
                for (int j = 0; j < p; ++j) {
                    CycInt cand = base * CycInt::zeta_pow(p, j) * BigInt(eps);
                    if (cand == prof.spectrum[beta]) {
                        if (global_sign && *global_sign != eps) weakly_regular = false;
                        global_sign = eps;
                        prof.dual_values[beta] = j;
                        matched = true;
                        break;
                    }
                }
            }
            if (!matched) weakly_regular = false;
        }
        if (weakly_regular) prof.sign = global_sign;
    }

    if (!weakly_regular) {
        prof.dual_values.assign(q, 0);
        prof.category = WalshCategory::NonWeaklyRegular;
        return;
    }

    prof.homog_exp = homogeneity_exponent(F, prof.fn_table);
    prof.dual_homog_exp = homogeneity_exponent(F, prof.dual_values);
    if (prof.homog_exp)
        prof.category = prof.balanced ? WalshCategory::Wrpb : WalshCategory::Wrp;
    else
        prof.category = WalshCategory::WeaklyRegularOnly;
}

WalshProfile analyze(const PFunction& f) {
    WalshProfile prof = walsh_transform(f);
    classify(prof);
    return prof;
}

long count_solutions(const PFunction& f, int a, Elem b, int t) {
    const auto& F = *f.field;
    const int p = F.p();
    a = ((a % p) + p) % p;
    t = ((t % p) + p) % p;
    long count = 0;
    for (Elem x = 0; x < F.q(); ++x) {
        int v = (a * f.table[x] + F.trace(F.mul(b, x))) % p;
        if (v == t) ++count;
    }
    return count;
}

}  // namespace plateau
