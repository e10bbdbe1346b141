#pragma once

#include <cstdint>
#include <vector>

#include "fusq/cyclotomic.hpp"

namespace fusq {

/// SplitMix64. Each suite trial gets its own stream derived from
/// (seed, trial), so parallel trials reproduce the serial run exactly.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    static Rng for_trial(uint64_t seed, uint64_t trial) {
        Rng base(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
        base.next();
        return base;
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t next_range(uint64_t n) { return n ? next() % n : 0; }

    /// Uniform draw from {0, +-1, +-zeta, +-zeta^2} in Q(zeta_N); for N <= 2
    /// the set collapses to {0, +-1}.
    Cyclotomic small_scalar(long conductor) {
        if (conductor <= 2) {
            switch (next_range(3)) {
                case 0: return Cyclotomic(0);
                case 1: return Cyclotomic(1);
                default: return Cyclotomic(-1);
            }
        }
        switch (next_range(7)) {
            case 0: return Cyclotomic(0);
            case 1: return Cyclotomic(1);
            case 2: return Cyclotomic(-1);
            case 3: return Cyclotomic::root_of_unity(conductor, 1);
            case 4: return -Cyclotomic::root_of_unity(conductor, 1);
            case 5: return Cyclotomic::root_of_unity(conductor, 2);
            default: return -Cyclotomic::root_of_unity(conductor, 2);
        }
    }

private:
    uint64_t state_;
};

}  // namespace fusq
