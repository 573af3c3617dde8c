#ifndef PLATEAU_GF_HPP
#define PLATEAU_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "json.hpp"
#include "plateau/errors.hpp"

namespace plateau {

/// Handle of a field element. Elements of GF(p^m) are encoded in mixed radix:
/// an element with power-basis coordinates (c_0, ..., c_{m-1}) has handle
/// c_0 + c_1*p + ... + c_{m-1}*p^{m-1}. Handle 0 is the zero element and
/// handle 1 is the multiplicative identity.
using Elem = std::uint32_t;

/// Exact arithmetic context for GF(p^m), q = p^m <= 2^16.
///
/// The context fixes a monic irreducible modulus polynomial, a primitive
/// element alpha, and the canonical enumeration of all field elements:
/// alpha^0, alpha^1, ..., alpha^{q-2}, 0. All state is immutable after
/// construction, so a context can be shared freely across threads.
class FieldCtx {
public:
    /// Builds GF(p^m). When `poly` is omitted the lexicographically least
    /// monic irreducible polynomial of degree m is used; when `alpha` is
    /// omitted the first element (in handle order) of full multiplicative
    /// order is used. `poly` is given constant term first and must include
    /// the leading coefficient 1. Throws NonPrimeError, ReduciblePolyError,
    /// TooLargeError, or InconsistentInputError on bad input.
    static std::shared_ptr<const FieldCtx> make(int p, int m,
                                                const std::vector<int>* poly = nullptr,
                                                const std::vector<int>* alpha = nullptr);

    int p() const { return p_; }
    int m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<int>& poly() const { return poly_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem alpha() const { return alpha_; }

    /// Canonical element enumeration: alpha^0, ..., alpha^{q-2}, then 0.
    const std::vector<Elem>& canonical_order() const { return order_; }

    /// Power-basis coordinates of an element, constant term first (length m).
    std::vector<int> coeffs(Elem x) const;
    Elem from_coeffs(const std::vector<int>& c) const;

    /// Embeds a residue of GF(p) as a constant field element.
    Elem scalar(int c) const;

    int trace(Elem x) const { return trace_[x]; }
    /// trace(alpha^k) without a multiplication, for Walsh inner loops.
    int trace_alpha_pow(std::uint32_t k) const { return trace_exp_[k % (q_ - 1)]; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws DivisionByZeroError on 0
    Elem pow(Elem a, std::uint64_t e) const;

    /// Discrete log with respect to alpha; defined for nonzero elements only.
    std::uint32_t log(Elem a) const;
    Elem alpha_pow(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

    bool is_primitive(Elem a) const;
    std::vector<Elem> primitive_elements() const;

    nlohmann::json to_json() const;
    static std::shared_ptr<const FieldCtx> from_json(const nlohmann::json& j);

private:
    FieldCtx() = default;

    int p_ = 0;
    int m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<int> poly_;        // length m+1, constant first, monic
    Elem alpha_ = 0;
    std::vector<Elem> exp_;        // exp_[k] = alpha^k, k in [0, q-1)
    std::vector<std::uint32_t> log_;
    std::vector<int> trace_;       // by handle
    std::vector<int> trace_exp_;   // trace_exp_[k] = trace(alpha^k)
    std::vector<Elem> order_;
};

}  // namespace plateau

#endif
