#pragma once

#include <cstdint>

namespace bh {

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so sample i can be regenerated without
// replaying samples 0..i-1 and streams may be evaluated in parallel.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : base_(mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ull))) {}

    std::uint64_t next_u64() { return mix64(base_ + 0xd1342543de82ef95ull * ++ctr_); }

    // uniform in [0, 1)
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::uint64_t base_;
    std::uint64_t ctr_ = 0;
};

} // namespace bh
