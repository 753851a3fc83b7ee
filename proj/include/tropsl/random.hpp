#pragma once

#include <cstdint>
#include <random>

namespace tropsl {

// Seeded generator whose output sequence depends only on the seed. Bounded
// draws use plain modular reduction rather than std::uniform_int_distribution,
// whose algorithm differs between standard libraries.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    bool coin() { return (engine_() >> 17) & 1U; }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace tropsl
