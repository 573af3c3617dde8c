#ifndef PLATEAU_RNG_HPP
#define PLATEAU_RNG_HPP

#include <cstdint>
#include <random>

namespace plateau {

/// Seeded generator with portable output: mt19937_64 is fully specified by
/// the standard and the bound reduction below avoids the
/// implementation-defined std::uniform_int_distribution.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform draw from [0, bound), bound > 0, by rejection.
    std::uint64_t next(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do { v = eng_(); } while (v >= limit);
        return v % bound;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace plateau

#endif
