#include "plateau/linear_code.hpp"

#include <sstream>

namespace plateau {

BigInt bigint_pow(long base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

LinearCode::LinearCode(int p, int n, FpMatrix rows, RowPolicy policy) : p_(p), n_(n) {
    if (rows.empty()) throw InconsistentInputError("generator matrix must have rows");
    for (auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw InconsistentInputError("generator row length differs from code length");
        for (auto& v : row) v = ((v % p) + p) % p;
    }
    if (policy == RowPolicy::Reject) {
        if (fp_rank(rows, p) != static_cast<int>(rows.size()))
            throw DegenerateRowsError(std::to_string(rows.size()) + " rows, rank " +
                                      std::to_string(fp_rank(rows, p)));
        gen_ = std::move(rows);
    } else {
        FpMatrix acc;
        int rank = 0;
        for (auto& row : rows) {
            acc.push_back(row);
            int r = fp_rank(acc, p);
            if (r > rank) { rank = r; gen_.push_back(std::move(row)); }
            else acc.pop_back();
        }
        if (gen_.empty()) throw DegenerateRowsError("all rows are zero");
    }
}

std::vector<int> LinearCode::codeword(const std::vector<int>& message) const {
    if (message.size() != gen_.size())
        throw InconsistentInputError("message length differs from dimension");
    std::vector<int> word(n_, 0);
    for (std::size_t i = 0; i < gen_.size(); ++i) {
        int a = ((message[i] % p_) + p_) % p_;
        if (a == 0) continue;
        for (int j = 0; j < n_; ++j) word[j] = (word[j] + a * gen_[i][j]) % p_;
    }
    return word;
}

LinearCode LinearCode::dual() const {
    FpMatrix basis = fp_nullspace(gen_, p_);
    if (basis.empty())
        throw InconsistentInputError("dual code is trivial (k = n)");
    return LinearCode(p_, n_, std::move(basis));
}

bool LinearCode::contains_all_one() const {
    FpMatrix aug = gen_;
    aug.emplace_back(n_, 1);
    return fp_rank(aug, p_) == k();
}

nlohmann::json LinearCode::to_json() const {
    return nlohmann::json{{"p", p_}, {"n", n_}, {"gen", gen_}};
}

LinearCode LinearCode::from_json(const nlohmann::json& j) {
    return LinearCode(j.at("p").get<int>(), j.at("n").get<int>(),
                      j.at("gen").get<FpMatrix>());
}

BigInt WeightDistribution::total() const {
    BigInt s = 0;
    for (const auto& c : counts) s += c;
    return s;
}

int WeightDistribution::min_distance() const {
    for (int i = 1; i <= n; ++i)
        if (counts[i] != 0) return i;
    return 0;
}

std::map<int, BigInt> WeightDistribution::nonzero() const {
    std::map<int, BigInt> out;
    for (int i = 0; i <= n; ++i)
        if (counts[i] != 0) out[i] = counts[i];
    return out;
}

std::string WeightDistribution::to_csv() const {
    std::ostringstream os;
    os << "weight,count\n";
    for (int i = 0; i <= n; ++i)
        if (counts[i] != 0) os << i << "," << counts[i].str() << "\n";
    return os.str();
}

WeightDistribution enumerate_weights(const LinearCode& code, std::uint64_t cap) {
    const int p = code.p(), n = code.n(), k = code.k();
    {
        BigInt size = bigint_pow(p, k);
        if (size > BigInt(cap))
            throw TooLargeError("p^k = " + size.str() + " messages to enumerate");
    }
    WeightDistribution dist;
    dist.n = n;
    dist.counts.assign(n + 1, 0);

    // Odometer over messages: one row addition per increment; a digit wrap
    // has already added the row p times, which is a net no-op mod p.
    std::vector<int> digits(k, 0);
    std::vector<int> word(n, 0);
    std::vector<std::uint64_t> tally(n + 1, 0);
    std::uint64_t processed = 0;
    const std::uint64_t flush_at = 1ULL << 62;
    for (;;) {
        int w = 0;
        for (int j = 0; j < n; ++j) w += (word[j] != 0);
        ++tally[w];
        if (++processed >= flush_at) {
            for (int i = 0; i <= n; ++i) { dist.counts[i] += tally[i]; tally[i] = 0; }
            processed = 0;
        }
        int pos = 0;
        while (pos < k) {
            const auto& row = code.gen()[pos];
            for (int j = 0; j < n; ++j) {
                word[j] += row[j];
                if (word[j] >= p) word[j] -= p;
            }
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    for (int i = 0; i <= n; ++i) dist.counts[i] += tally[i];
    return dist;
}

WeightDistribution macwilliams(const WeightDistribution& dist, int k, int p) {
    const int n = dist.n;
    const BigInt size = bigint_pow(p, k);
    if (dist.total() != size)
        throw InconsistentInputError("weight counts do not sum to p^k");

    // Pascal's triangle up to n, exact.
    std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    std::vector<BigInt> pm1_pow(n + 1);
    pm1_pow[0] = 1;
    for (int j = 1; j <= n; ++j) pm1_pow[j] = pm1_pow[j - 1] * (p - 1);

    // Coefficients of y^j in (x + (p-1)y)^{n-i} (x - y)^i, accumulated over i.
    std::vector<BigInt> acc(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        if (dist.counts[i] == 0) continue;
        std::vector<BigInt> conv(n + 1, 0);
        for (int l = 0; l <= i; ++l) {
            BigInt left = binom[i][l];
            if (l % 2 == 1) left = -left;
            for (int t = 0; t <= n - i; ++t)
                conv[l + t] += left * binom[n - i][t] * pm1_pow[t];
        }
        for (int j = 0; j <= n; ++j) acc[j] += dist.counts[i] * conv[j];
    }

    WeightDistribution out;
    out.n = n;
    out.counts.assign(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
        if (acc[j] % size != 0)
            throw InconsistentInputError("MacWilliams transform is not integral");
        out.counts[j] = acc[j] / size;
        if (out.counts[j] < 0)
            throw InconsistentInputError("negative dual weight count");
    }
    return out;
}

GramInfo gram_rank(const LinearCode& code) {
    FpMatrix gram = fp_mul_transpose(code.gen(), code.gen(), code.p());
    int rank = fp_rank(gram, code.p());
    GramInfo info;
    info.rank = rank;
    info.hull_dim = code.k() - rank;
    info.self_orthogonal = (rank == 0);
    info.lcd = (rank == code.k());
    return info;
}

OrthVerdict divisibility_selforth(const WeightDistribution& dist, int p,
                                  bool contains_all_one) {
    auto divisible_by = [&](int d) {
        for (int i = 1; i <= dist.n; ++i)
            if (dist.counts[i] != 0 && i % d != 0) return false;
        return true;
    };
    if (p == 2)
        return divisible_by(4) ? OrthVerdict::SelfOrthogonal : OrthVerdict::NotConcluded;
    if (p == 3)
        return divisible_by(3) ? OrthVerdict::SelfOrthogonal : OrthVerdict::NotSelfOrthogonal;
    if (divisible_by(p) && contains_all_one) return OrthVerdict::SelfOrthogonal;
    return OrthVerdict::NotConcluded;
}

std::string to_string(OrthVerdict v) {
    switch (v) {
        case OrthVerdict::SelfOrthogonal: return "self-orthogonal";
        case OrthVerdict::NotConcluded: return "not-concluded";
        case OrthVerdict::NotSelfOrthogonal: return "not-self-orthogonal";
    }
    return "?";
}

PackingClass sphere_packing_classify(int n, int k, int d, int p) {
    if (d < 1 || d > n) throw InconsistentInputError("need 1 <= d <= n");
    std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    const BigInt pn = bigint_pow(p, n);
    const BigInt pk = bigint_pow(p, k);
    // No [n, k, d'] code exists when p^k * V(n, floor((d'-1)/2)) > p^n.
    auto ruled_out = [&](int dprime) {
        int t = (dprime - 1) / 2;
        BigInt vol = 0, term;
        for (int i = 0; i <= t && i <= n; ++i) {
            term = binom[n][i];
            for (int j = 0; j < i; ++j) term *= (p - 1);
            vol += term;
        }
        return pk * vol > pn;
    };
    if (ruled_out(d + 1)) return PackingClass::Optimal;
    if (ruled_out(d + 2)) return PackingClass::AlmostOptimal;
    return PackingClass::Unclassified;
}

std::string to_string(PackingClass c) {
    switch (c) {
        case PackingClass::Optimal: return "optimal";
        case PackingClass::AlmostOptimal: return "almost-optimal";
        case PackingClass::Unclassified: return "unclassified";
    }
    return "?";
}

BigInt pless_a3_dual(int p, int m, int s, int epsilon) {
    if (p == 2 || p % 2 == 0) throw EvenPrimeError();
    if (m + s < 3) throw InconsistentInputError("requires m + s >= 3");
    const BigInt pm = bigint_pow(p, m);
    BigInt inner;
    if ((m + s) % 2 == 0) {
        int eta_neg1 = (p % 4 == 1) ? 1 : -1;
        int sign = epsilon * (((m + s) / 2) % 2 == 0 ? 1 : eta_neg1);
        inner = pm - p + BigInt(sign) * bigint_pow(p, (m + s) / 2) * (p - 1);
    } else {
        inner = pm - p;
    }
    BigInt num = bigint_pow(p, m - 1) * (p - 1) * (p - 2) * inner;
    if (num % 6 != 0) throw InconsistentInputError("closed form is not integral");
    return num / 6;
}

}  // namespace plateau
