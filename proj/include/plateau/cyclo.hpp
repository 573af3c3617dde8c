#ifndef PLATEAU_CYCLO_HPP
#define PLATEAU_CYCLO_HPP

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "plateau/errors.hpp"

namespace plateau {

using BigInt = boost::multiprecision::cpp_int;

/// Legendre symbol of a modulo an odd prime p, with value 0 at multiples of p.
int legendre(long a, int p);

/// The signed prime (-1)^((p-1)/2) * p.
long signed_prime(int p);

/// An element of Z[zeta_p] in exact coordinates over the integral basis
/// {zeta_p, zeta_p^2, ..., zeta_p^{p-1}}. The basis is a Z-basis, so two
/// values are equal iff their coordinate vectors are equal; in particular
/// 1 is stored via the relation 1 = -(zeta_p + ... + zeta_p^{p-1}).
///
/// Everything is exact integer arithmetic: Walsh values, Gauss sums and
/// their products never touch floating point.
class CycInt {
public:
    static CycInt zero(int p);
    static CycInt from_int(int p, const BigInt& n);
    static CycInt zeta_pow(int p, long j);
    /// Builds sum_j counts[j] * zeta_p^j from a length-p exponent histogram.
    static CycInt from_exponent_counts(int p, const std::vector<BigInt>& counts);

    int order() const { return p_; }
    const std::vector<BigInt>& coords() const { return coords_; }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator*(const BigInt& n) const;
    bool operator==(const CycInt& o) const = default;

    bool is_zero() const;

    /// Galois automorphism determined by zeta_p -> zeta_p^a, gcd(a, p) = 1.
    CycInt sigma(long a) const;
    /// Complex conjugation, i.e. sigma(p-1).
    CycInt conj() const { return sigma(p_ - 1); }

    /// The integer n when this value equals n, otherwise empty.
    std::optional<BigInt> as_rational_int() const;

    nlohmann::json to_json() const;
    static CycInt from_json(const nlohmann::json& j);

private:
    CycInt(int p, std::vector<BigInt> coords) : p_(p), coords_(std::move(coords)) {}
    void check_same_order(const CycInt& o) const;

    int p_ = 2;
    std::vector<BigInt> coords_;  // length p-1, coordinate of zeta^i at index i-1
};

/// The quadratic Gauss sum sum_{x=1}^{p-1} legendre(x) zeta_p^x. Its square
/// is exactly signed_prime(p); it realizes sqrt(p^*) inside Z[zeta_p].
CycInt quad_gauss_sum(int p);

/// (sqrt(p^*))^e, exact: the even part is an ordinary integer power of p^*
/// and an odd exponent contributes one factor of the quadratic Gauss sum.
CycInt sqrt_pstar_pow(int p, int e);

}  // namespace plateau

#endif
