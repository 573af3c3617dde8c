#ifndef PLATEAU_VERIFY_HPP
#define PLATEAU_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "plateau/construct.hpp"
#include "plateau/rng.hpp"

namespace plateau {

enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(Verdict v);

struct CheckLine {
    std::string quantity;
    std::string expected;
    std::string observed;
    bool ok;
};

/// Per-check record comparing closed-form expectations against computed
/// values; Pass requires every comparison to hold exactly.
struct VerifyReport {
    std::string target;
    int p = 0;
    int m = 0;
    std::optional<int> s;
    std::optional<int> sign;
    std::optional<bool> balanced;
    std::string function_desc;
    std::vector<CheckLine> checks;
    Verdict verdict = Verdict::NotApplicable;
    std::string note;

    void add(const std::string& quantity, const std::string& expected,
             const std::string& observed, bool ok);
    template <typename T>
    void add_eq(const std::string& quantity, const T& expected, const T& observed);
    void finalize();  // verdict from accumulated checks

    nlohmann::json to_json() const;
    std::string pretty() const;
};

/// The closed-form merged weight distribution of the [q, m+2] code built
/// from a weakly regular plateaued function (sign ignored for p = 2).
std::map<int, BigInt> expected_code_distribution(int p, int m, int s, int sign);

/// Closed-form number of solutions of a f(x) + trace(bx) = t for t != 0 and
/// f weakly regular plateaued over an odd prime; empty when no case applies.
std::optional<BigInt> closed_form_count(const WalshProfile& prof, int a, Elem b, int t);

/// Enumerated weight distribution vs. the closed-form four-weight table.
VerifyReport verify_table(const WalshProfile& prof, const WeightDistribution& dist);

/// Dual parameters [q, q-m-2, 3] (odd p) or [q, q-m-2, 4] (p = 2), the low
/// dual coefficients, and the sphere-packing classification, all via the
/// MacWilliams transform of the primal distribution.
VerifyReport verify_dual(const WalshProfile& prof, const WeightDistribution& dist);

/// Parameters and minimum distance of the [I : G1] extension, its dual
/// [q+m+2, q, 3], and the extendability classification (dual distance
/// deficit 0 = optimal, 1 = almost optimal).
VerifyReport verify_extended(const WalshProfile& prof, const ConstructionBundle& bundle);

/// Systematic LCD test of [I : G1]: the Gram matrix must have full rank;
/// records whether the row-self-orthogonal block condition held.
VerifyReport verify_lcd(const ConstructionBundle& bundle);

/// Support size, Parseval mass, and (for p = 2) the exact counts of
/// positive, zero, and negative spectrum values.
VerifyReport verify_walsh_counts(const WalshProfile& prof);

/// Gram-rank zero, weight-divisibility verdicts, and their coherence with
/// each other at the stated strength (equivalence for p = 3, implication
/// otherwise).
VerifyReport verify_selforth(const WalshProfile& prof, const ConstructionBundle& bundle);

/// Brute-force solution counts against the closed forms on `trials` seeded
/// random (a, b, t) triples with t != 0.
VerifyReport verify_counts(const PFunction& f, const WalshProfile& prof,
                           std::uint64_t seed, int trials);

/// kernel_dim of the quadratic form against the plateau level found by
/// spectrum classification, plus the weak-regularity guarantee.
VerifyReport verify_quadratic(const QuadraticSpec& spec, const WalshProfile& prof);

struct SpecRun {
    std::string spec_desc;
    bool degenerate = false;  // generator rows collapsed; no code reports
    std::vector<VerifyReport> reports;
};

/// Classifies one quadratic spec and runs every applicable check.
SpecRun run_all_checks(const QuadraticSpec& spec);

}  // namespace plateau

#endif
