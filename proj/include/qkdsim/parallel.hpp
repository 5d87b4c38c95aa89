#pragma once

#include <cstdint>

#include "qkdsim/rng.hpp"

namespace qkdsim {

// Fans independent Monte Carlo trials out across OpenMP workers. Each trial
// owns the stream split at its index, so results are identical to the serial
// reference regardless of scheduling.
template <class Fn>
void run_trials(std::size_t trials, const RngStream& base, Fn&& fn) {
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < (long long)trials; ++t) {
        RngStream rng = base.split(uint64_t(t));
        fn(std::size_t(t), rng);
    }
}

// Serial reference kept for testing and benchmarking the parallel kernel.
template <class Fn>
void run_trials_serial(std::size_t trials, const RngStream& base, Fn&& fn) {
    for (std::size_t t = 0; t < trials; ++t) {
        RngStream rng = base.split(uint64_t(t));
        fn(t, rng);
    }
}

} // namespace qkdsim
