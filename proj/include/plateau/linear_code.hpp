#ifndef PLATEAU_LINEAR_CODE_HPP
#define PLATEAU_LINEAR_CODE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "plateau/cyclo.hpp"  // BigInt
#include "plateau/errors.hpp"
#include "plateau/fp_matrix.hpp"

namespace plateau {

/// A linear code over GF(p) given by a full-row-rank generator matrix. Rows
/// are kept exactly as supplied (no re-echelonization), so emitted matrices
/// are reproducible bit for bit.
class LinearCode {
public:
    enum class RowPolicy {
        Reject,  // throw DegenerateRowsError on dependent rows
        Reduce,  // keep the first maximal independent subset of rows
    };

    LinearCode(int p, int n, FpMatrix rows, RowPolicy policy = RowPolicy::Reject);

    int p() const { return p_; }
    int n() const { return n_; }
    int k() const { return static_cast<int>(gen_.size()); }
    const FpMatrix& gen() const { return gen_; }

    std::vector<int> codeword(const std::vector<int>& message) const;

    /// The dual code, with a reduced generator matrix from null-space
    /// computation.
    LinearCode dual() const;

    bool contains_all_one() const;

    nlohmann::json to_json() const;
    static LinearCode from_json(const nlohmann::json& j);

private:
    int p_;
    int n_;
    FpMatrix gen_;
};

/// Exact codeword weight counts A_0..A_n of a code with p^k codewords.
struct WeightDistribution {
    int n = 0;
    std::vector<BigInt> counts;  // length n+1

    BigInt total() const;
    /// Least positive weight with a nonzero count; 0 when the code is {0}.
    int min_distance() const;
    std::map<int, BigInt> nonzero() const;
    std::string to_csv() const;
};

/// Exhaustive weight enumeration over all p^k messages. Throws TooLargeError
/// when p^k exceeds `cap`.
WeightDistribution enumerate_weights(const LinearCode& code,
                                     std::uint64_t cap = 100'000'000ULL);

/// The dual distribution through the MacWilliams identity
/// W_dual(x, y) = p^{-k} W(x + (p-1) y, x - y), all in exact integers.
WeightDistribution macwilliams(const WeightDistribution& dist, int k, int p);

struct GramInfo {
    int rank;      // rank of G G^T over GF(p)
    int hull_dim;  // k - rank
    bool self_orthogonal;
    bool lcd;
};

GramInfo gram_rank(const LinearCode& code);

enum class OrthVerdict { SelfOrthogonal, NotConcluded, NotSelfOrthogonal };

/// Weight-divisibility tests: doubly-even implies self-orthogonal for p = 2;
/// for p = 3 divisibility by three is equivalent to self-orthogonality; for
/// p >= 5 divisibility by p plus the all-one codeword is sufficient.
OrthVerdict divisibility_selforth(const WeightDistribution& dist, int p,
                                  bool contains_all_one);

std::string to_string(OrthVerdict v);

enum class PackingClass { Optimal, AlmostOptimal, Unclassified };

/// Sphere-packing classification of an [n, k, d] code over GF(p): Optimal if
/// the bound rules out [n, k, d+1], AlmostOptimal if it only rules out
/// [n, k, d+2]. Exact big-integer evaluation.
PackingClass sphere_packing_classify(int n, int k, int d, int p);

std::string to_string(PackingClass c);

/// Closed-form A_3 of the dual of the plateaued-function code family over an
/// odd prime, from the first four Pless power moments. Requires m+s >= 3.
BigInt pless_a3_dual(int p, int m, int s, int epsilon);

BigInt bigint_pow(long base, int exp);

}  // namespace plateau

#endif
