#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace resfit {

// mt19937_64 raw output is pinned by the standard, but the std distributions
// are not; this wrapper keeps every derived draw implementation-defined-free
// so seeded runs reproduce across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, bound), bound > 0, by rejection
    std::uint64_t next_below(std::uint64_t bound) {
        // accept only the top region whose size is a multiple of bound
        std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = eng_();
            if (r >= threshold) return r % bound;
        }
    }

    // uniform in [0, 1) with 53-bit resolution
    double next_unit() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace resfit
