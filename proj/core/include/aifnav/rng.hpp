#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace aifnav {

// Seeded generator with hand-rolled draws so that runs reproduce bit-exactly
// regardless of standard-library distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform in [0,1) with 53 bits of mantissa.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    int uniform_int(int n) {
        assert(n > 0);
        return static_cast<int>(eng_() % static_cast<uint64_t>(n));
    }

    // Samples an index from a normalized categorical by cumulative walk.
    int sample_categorical(const std::vector<double>& probs) {
        assert(!probs.empty());
        const double u = uniform01();
        double cum = 0.0;
        for (size_t i = 0; i < probs.size(); ++i) {
            cum += probs[i];
            if (u < cum) return static_cast<int>(i);
        }
        return static_cast<int>(probs.size()) - 1;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace aifnav
