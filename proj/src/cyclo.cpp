#include "plateau/cyclo.hpp"

#include <numeric>

namespace plateau {

int legendre(long a, int p) {
    if (p == 2 || p % 2 == 0) throw EvenPrimeError();
    long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    // Euler's criterion via modular exponentiation.
    long result = 1, base = r, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

long signed_prime(int p) {
    if (p == 2 || p % 2 == 0) throw EvenPrimeError();
    return ((p - 1) / 2) % 2 == 0 ? p : -p;
}

CycInt CycInt::zero(int p) { return CycInt(p, std::vector<BigInt>(p - 1)); }

CycInt CycInt::from_int(int p, const BigInt& n) {
    // n = -n * (zeta + ... + zeta^{p-1})
    return CycInt(p, std::vector<BigInt>(p - 1, -n));
}

CycInt CycInt::zeta_pow(int p, long j) {
    long r = ((j % p) + p) % p;
    if (r == 0) return from_int(p, 1);
    std::vector<BigInt> c(p - 1);
    c[r - 1] = 1;
    return CycInt(p, std::move(c));
}

CycInt CycInt::from_exponent_counts(int p, const std::vector<BigInt>& counts) {
    if (static_cast<int>(counts.size()) != p)
        throw InconsistentInputError("exponent histogram must have length p");
    std::vector<BigInt> c(p - 1);
    for (int i = 1; i < p; ++i) c[i - 1] = counts[i] - counts[0];
    return CycInt(p, std::move(c));
}

void CycInt::check_same_order(const CycInt& o) const {
    if (p_ != o.p_) throw MixedRootOrderError(p_, o.p_);
}

CycInt CycInt::operator+(const CycInt& o) const {
    check_same_order(o);
    std::vector<BigInt> c(coords_);
    for (int i = 0; i < p_ - 1; ++i) c[i] += o.coords_[i];
    return CycInt(p_, std::move(c));
}

CycInt CycInt::operator-(const CycInt& o) const {
    check_same_order(o);
    std::vector<BigInt> c(coords_);
    for (int i = 0; i < p_ - 1; ++i) c[i] -= o.coords_[i];
    return CycInt(p_, std::move(c));
}

CycInt CycInt::operator-() const {
    std::vector<BigInt> c(coords_);
    for (auto& v : c) v = -v;
    return CycInt(p_, std::move(c));
}

CycInt CycInt::operator*(const CycInt& o) const {
    check_same_order(o);
    // Accumulate on exponents 0..p-1, then fold zeta^0 back into the basis.
    std::vector<BigInt> acc(p_);
    for (int i = 1; i < p_; ++i) {
        if (coords_[i - 1] == 0) continue;
        for (int j = 1; j < p_; ++j) {
            if (o.coords_[j - 1] == 0) continue;
            acc[(i + j) % p_] += coords_[i - 1] * o.coords_[j - 1];
        }
    }
    return from_exponent_counts(p_, acc);
}

CycInt CycInt::operator*(const BigInt& n) const {
    std::vector<BigInt> c(coords_);
    for (auto& v : c) v *= n;
    return CycInt(p_, std::move(c));
}

bool CycInt::is_zero() const {
    for (const auto& v : coords_)
        if (v != 0) return false;
    return true;
}

CycInt CycInt::sigma(long a) const {
    long r = ((a % p_) + p_) % p_;
    if (r == 0 || std::gcd(r, static_cast<long>(p_)) != 1) throw NotAUnitError(a);
    std::vector<BigInt> c(p_ - 1);
    for (int i = 1; i < p_; ++i) c[(r * i) % p_ - 1] = coords_[i - 1];
    return CycInt(p_, std::move(c));
}

std::optional<BigInt> CycInt::as_rational_int() const {
    for (int i = 1; i < p_ - 1; ++i)
        if (coords_[i] != coords_[0]) return std::nullopt;
    return -coords_[0];
}

nlohmann::json CycInt::to_json() const {
    std::vector<std::string> strs;
    strs.reserve(coords_.size());
    for (const auto& v : coords_) strs.push_back(v.str());
    return nlohmann::json{{"p", p_}, {"coords", strs}};
}

CycInt CycInt::from_json(const nlohmann::json& j) {
    int p = j.at("p").get<int>();
    auto strs = j.at("coords").get<std::vector<std::string>>();
    if (static_cast<int>(strs.size()) != p - 1)
        throw InconsistentInputError("coordinate vector must have length p-1");
    std::vector<BigInt> c;
    c.reserve(strs.size());
    for (const auto& s : strs) c.emplace_back(s);
    return CycInt(p, std::move(c));
}

CycInt quad_gauss_sum(int p) {
    if (p == 2 || p % 2 == 0) throw EvenPrimeError();
    std::vector<BigInt> counts(p);
    for (int x = 1; x < p; ++x) counts[x] = legendre(x, p);
    return CycInt::from_exponent_counts(p, counts);
}

CycInt sqrt_pstar_pow(int p, int e) {
    if (p == 2 || p % 2 == 0) throw EvenPrimeError();
    if (e < 0) throw InconsistentInputError("exponent must be nonnegative");
    BigInt even_part = 1;
    const BigInt ps = signed_prime(p);
    for (int i = 0; i < e / 2; ++i) even_part *= ps;
    if (e % 2 == 0) return CycInt::from_int(p, even_part);
    return quad_gauss_sum(p) * even_part;
}

}  // namespace plateau
