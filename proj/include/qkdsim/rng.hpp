#pragma once

#include <cstdint>

#include "qkdsim/bitstring.hpp"

namespace qkdsim {

namespace detail {
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
} // namespace detail

// Counter-based deterministic generator. Every draw is a pure function of
// (seed, stream_id, draw index), so streams can be split freely across
// workers without coordination.
class RngStream {
public:
    RngStream(uint64_t seed, uint64_t stream_id = 0)
        : seed_(seed), stream_(stream_id) {}

    uint64_t next_u64() {
        uint64_t h = detail::splitmix64(seed_ ^ detail::splitmix64(stream_));
        return detail::splitmix64(h ^ counter_++);
    }

    int next_bit() { return int(next_u64() & 1); }

    // Uniform in [0, n).
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    BitString bits(std::size_t n) {
        BitString b(n);
        uint64_t w = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i % 64 == 0) w = next_u64();
            b.set(i, int(w & 1));
            w >>= 1;
        }
        return b;
    }

    RngStream split(uint64_t child) const {
        return RngStream(seed_, detail::splitmix64(stream_ ^ detail::splitmix64(child + 0x632be59bd9b4e019ULL)));
    }

    uint64_t seed() const { return seed_; }
    uint64_t stream_id() const { return stream_; }

private:
    uint64_t seed_;
    uint64_t stream_;
    uint64_t counter_ = 0;
};

} // namespace qkdsim
