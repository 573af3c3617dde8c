#ifndef PLATEAU_PLATEAUED_HPP
#define PLATEAU_PLATEAUED_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "plateau/cyclo.hpp"
#include "plateau/gf.hpp"

namespace plateau {

/// A p-ary function on GF(q) with f(0) = 0, tabulated by element handle.
struct PFunction {
    std::shared_ptr<const FieldCtx> field;
    std::vector<int> table;  // indexed by handle, values in [0, p)

    PFunction(std::shared_ptr<const FieldCtx> ctx, std::vector<int> values);

    int operator()(Elem x) const { return table[x]; }

    nlohmann::json to_json() const;  // table emitted in canonical element order
    static PFunction from_json(const nlohmann::json& j);
};

/// Coefficients a_0..a_{ceil(m/2)} of the quadratic form
/// Q(x) = sum_i trace(a_i x^{p^i + 1}).
struct QuadraticSpec {
    std::shared_ptr<const FieldCtx> field;
    std::vector<Elem> coeffs;

    QuadraticSpec(std::shared_ptr<const FieldCtx> ctx, std::vector<Elem> cs);

    static int expected_len(int m) { return (m + 1) / 2 + 1; }

    std::string describe() const;  // "a0,a5,0"-style, alpha powers

    nlohmann::json to_json() const;
    static QuadraticSpec from_json(const nlohmann::json& j);
};

int quad_eval(const QuadraticSpec& spec, Elem x);
PFunction quad_table(const QuadraticSpec& spec);

/// Plateau level of a quadratic form, from the kernel of its symmetric
/// bilinear companion map L(z) = sum_i (a_i z^{p^i} + a_i^{p^{m-i}} z^{p^{m-i}}):
/// the GF(p)-dimension of {z : Q(z+y) = Q(z) + Q(y) for all y}.
int kernel_dim(const QuadraticSpec& spec);

enum class WalshCategory {
    Wrp,                // weakly regular, homogeneous, unbalanced
    Wrpb,               // weakly regular, homogeneous, balanced
    WeaklyRegularOnly,  // weakly regular but no admissible homogeneity exponent
    NonWeaklyRegular,
    NotPlateaued,
};

std::string to_string(WalshCategory c);

/// Full Walsh data of a p-ary function: the exact spectrum and, when the
/// function is plateaued, its level s, support, sign, and dual function.
///
/// For odd p, nonzero spectrum values of a weakly regular function factor
/// uniquely as sign * sqrt(p^*)^{m+s} * zeta_p^{dual(beta)}. For p = 2 the
/// nonzero values are +-2^{(m+s)/2}; the sign is fixed to +1 and the dual
/// value carries the actual sign as an exponent of -1.
struct WalshProfile {
    std::shared_ptr<const FieldCtx> field;
    std::vector<int> fn_table;             // the transformed function, by handle
    std::vector<CycInt> spectrum;          // indexed by element handle
    std::optional<int> plateau_level;      // s
    std::vector<char> support;             // indexed by handle
    bool balanced = false;                 // spectrum at 0 vanishes
    std::optional<int> sign;               // global +-1 when weakly regular
    std::vector<int> dual_values;          // 0 off the support
    std::optional<int> homog_exp;          // h: f(ax) = a^h f(x)
    std::optional<int> dual_homog_exp;     // l: dual(a b) = a^l dual(b)
    WalshCategory category = WalshCategory::NotPlateaued;

    bool weakly_regular() const {
        return category == WalshCategory::Wrp || category == WalshCategory::Wrpb ||
               category == WalshCategory::WeaklyRegularOnly;
    }
    std::size_t support_size() const;
};

/// Exact Walsh transform W(beta) = sum_x zeta_p^{f(x) - trace(beta x)};
/// O(q^2) exponent work. Only the spectrum is filled in.
WalshProfile walsh_transform(const PFunction& f);

/// Completes a profile: plateau level, support, balancedness, sign and dual
/// extraction, homogeneity exponents, category.
void classify(WalshProfile& profile);

/// walsh_transform + classify.
WalshProfile analyze(const PFunction& f);

/// Number of x with a*f(x) + trace(b*x) = t, by brute force over GF(q).
long count_solutions(const PFunction& f, int a, Elem b, int t);

}  // namespace plateau

#endif
