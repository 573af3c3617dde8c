#include "plateau/gf.hpp"

#include <algorithm>
#include <numeric>

namespace plateau {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense coefficient vectors over GF(p), constant term first, no trailing-zero
// guarantees. Only used during context construction; afterwards everything
// runs on lookup tables.
using Poly = std::vector<int>;

int pdeg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly pmul(const Poly& a, const Poly& b, int p) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return c;
}

// Remainder of a modulo monic b.
Poly pmod(Poly a, const Poly& b, int p) {
    int db = pdeg(b);
    for (int i = pdeg(a); i >= db; --i) {
        int f = a[i];
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = ((a[i - db + j] - f * b[j]) % p + p) % p;
    }
    a.resize(db > 0 ? db : 1, 0);
    return a;
}

bool divides(const Poly& d, const Poly& a, int p) {
    Poly r = pmod(a, d, p);
    return pdeg(r) < 0;
}

// Trial division by every monic polynomial of degree 1..deg/2. Desk-scale
// degrees keep this cheap.
bool is_irreducible(const Poly& f, int p) {
    int deg = pdeg(f);
    if (deg < 1) return false;
    if (deg == 1) return true;
    for (int d = 1; 2 * d <= deg; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long c = 0; c < count; ++c) {
            Poly g(d + 1, 0);
            long t = c;
            for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(t % p); t /= p; }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

// Lexicographically least monic irreducible of the given degree, comparing
// coefficient tuples (c_0, c_1, ...) with c_0 most significant.
Poly default_modulus(int p, int m) {
    long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long c = 0; c < count; ++c) {
        Poly f(m + 1, 0);
        long t = c;
        for (int i = m - 1; i >= 0; --i) { f[i] = static_cast<int>(t % p); t /= p; }
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw NoPrimitiveElementError();  // unreachable: irreducibles exist for every degree
}

std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

std::shared_ptr<const FieldCtx> FieldCtx::make(int p, int m,
                                               const std::vector<int>* poly,
                                               const std::vector<int>* alpha) {
    if (!is_prime(p)) throw NonPrimeError(p);
    if (m < 1) throw InconsistentInputError("extension degree must be >= 1");
    long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) throw TooLargeError("q = p^m exceeds 2^16");
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->m_ = m;
    ctx->q_ = static_cast<std::uint32_t>(q);

    if (poly) {
        if (static_cast<int>(poly->size()) != m + 1 || (*poly)[m] != 1)
            throw InconsistentInputError("modulus must be monic of degree m");
        for (int c : *poly)
            if (c < 0 || c >= p) throw InconsistentInputError("modulus coefficient out of range");
        if (!is_irreducible(*poly, p)) throw ReduciblePolyError("degree " + std::to_string(m));
        ctx->poly_ = *poly;
    } else {
        ctx->poly_ = default_modulus(p, m);
    }

    auto decode = [&](Elem x) {
        Poly c(m, 0);
        for (int i = 0; i < m; ++i) { c[i] = static_cast<int>(x % p); x /= p; }
        return c;
    };
    auto encode = [&](const Poly& c) {
        Elem x = 0;
        for (int i = m - 1; i >= 0; --i) x = x * p + c[i];
        return x;
    };
    auto raw_mul = [&](Elem a, Elem b) {
        Poly c = pmod(pmul(decode(a), decode(b), p), ctx->poly_, p);
        c.resize(m, 0);
        return encode(c);
    };
    auto raw_pow = [&](Elem a, long e) {
        Elem r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = raw_mul(r, base);
            base = raw_mul(base, base);
            e >>= 1;
        }
        return r;
    };

    const long order = q - 1;
    auto factors = prime_factors(order);
    auto has_full_order = [&](Elem a) {
        if (a == 0) return false;
        if (raw_pow(a, order) != 1) return false;
        for (long r : factors)
            if (raw_pow(a, order / r) == 1) return false;
        return true;
    };

    if (alpha) {
        Elem a = encode([&] { Poly c = *alpha; c.resize(m, 0); return c; }());
        if (!has_full_order(a))
            throw InconsistentInputError("supplied alpha is not primitive");
        ctx->alpha_ = a;
    } else {
        Elem found = 0;
        for (Elem a = 1; a < ctx->q_; ++a) {
            if (has_full_order(a)) { found = a; break; }
        }
        if (found == 0 && q != 2) throw NoPrimitiveElementError();
        ctx->alpha_ = (q == 2) ? 1 : found;
    }

    ctx->exp_.resize(order);
    ctx->log_.assign(ctx->q_, 0);
    Elem cur = 1;
    for (long k = 0; k < order; ++k) {
        ctx->exp_[k] = cur;
        ctx->log_[cur] = static_cast<std::uint32_t>(k);
        cur = raw_mul(cur, ctx->alpha_);
    }
    if (cur != 1) throw NoPrimitiveElementError();

    // trace(x) = sum over Frobenius orbits; linear, so tabulate on the power
    // basis and extend by coordinates.
    std::vector<int> basis_trace(m, 0);
    for (int j = 0; j < m; ++j) {
        Elem theta_j = encode([&] { Poly c(m, 0); c[j] = 1; return c; }());
        Elem s = 0, t = theta_j;
        for (int i = 0; i < m; ++i) {
            s = [&] {  // raw add
                Poly ca = decode(s), cb = decode(t);
                for (int d = 0; d < m; ++d) ca[d] = (ca[d] + cb[d]) % p;
                return encode(ca);
            }();
            t = raw_pow(t, p);
        }
        basis_trace[j] = decode(s)[0];
        Poly rest = decode(s);
        for (int d = 1; d < m; ++d)
            if (rest[d] != 0) throw NoPrimitiveElementError();  // trace must land in GF(p)
    }
    ctx->trace_.resize(ctx->q_);
    for (Elem x = 0; x < ctx->q_; ++x) {
        Poly c = decode(x);
        int s = 0;
        for (int j = 0; j < m; ++j) s += c[j] * basis_trace[j];
        ctx->trace_[x] = s % p;
    }
    ctx->trace_exp_.resize(order);
    for (long k = 0; k < order; ++k) ctx->trace_exp_[k] = ctx->trace_[ctx->exp_[k]];

    ctx->order_.reserve(ctx->q_);
    for (long k = 0; k < order; ++k) ctx->order_.push_back(ctx->exp_[k]);
    ctx->order_.push_back(0);

    return ctx;
}

std::vector<int> FieldCtx::coeffs(Elem x) const {
    std::vector<int> c(m_, 0);
    for (int i = 0; i < m_; ++i) { c[i] = static_cast<int>(x % p_); x /= p_; }
    return c;
}

Elem FieldCtx::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > m_)
        throw InconsistentInputError("coordinate vector longer than extension degree");
    Elem x = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        int v = ((c[i] % p_) + p_) % p_;
        x = x * p_ + v;
    }
    return x;
}

Elem FieldCtx::scalar(int c) const {
    int v = ((c % p_) + p_) % p_;
    return static_cast<Elem>(v);
}

Elem FieldCtx::add(Elem a, Elem b) const {
    Elem r = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        int da = static_cast<int>(a % p_), db = static_cast<int>(b % p_);
        r += mult * ((da + db) % p_);
        a /= p_; b /= p_; mult *= p_;
    }
    return r;
}

Elem FieldCtx::neg(Elem a) const {
    Elem r = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        int da = static_cast<int>(a % p_);
        r += mult * ((p_ - da) % p_);
        a /= p_; mult *= p_;
    }
    return r;
}

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t k = static_cast<std::uint64_t>(log_[a]) + log_[b];
    return exp_[k % (q_ - 1)];
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw DivisionByZeroError();
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t k = (static_cast<std::uint64_t>(log_[a]) % (q_ - 1)) * (e % (q_ - 1));
    return exp_[k % (q_ - 1)];
}

std::uint32_t FieldCtx::log(Elem a) const {
    if (a == 0) throw DivisionByZeroError();
    return log_[a];
}

bool FieldCtx::is_primitive(Elem a) const {
    if (a == 0) return false;
    return std::gcd(static_cast<long>(log_[a]), static_cast<long>(q_ - 1)) == 1;
}

std::vector<Elem> FieldCtx::primitive_elements() const {
    std::vector<Elem> out;
    for (std::uint32_t k = 0; k < q_ - 1; ++k)
        if (std::gcd(static_cast<long>(k), static_cast<long>(q_ - 1)) == 1)
            out.push_back(exp_[k]);
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::json FieldCtx::to_json() const {
    return nlohmann::json{{"p", p_}, {"m", m_}, {"poly", poly_}, {"alpha", coeffs(alpha_)}};
}

std::shared_ptr<const FieldCtx> FieldCtx::from_json(const nlohmann::json& j) {
    int p = j.at("p").get<int>();
    int m = j.at("m").get<int>();
    std::vector<int> poly = j.at("poly").get<std::vector<int>>();
    if (j.contains("alpha")) {
        std::vector<int> alpha = j.at("alpha").get<std::vector<int>>();
        return make(p, m, &poly, &alpha);
    }
    return make(p, m, &poly);
}

}  // namespace plateau
