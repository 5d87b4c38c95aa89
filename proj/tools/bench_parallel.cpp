// Compares the OpenMP kernels against their serial reference implementations
// on two workloads: the dense Walsh-Hadamard oracle and a Monte Carlo batch
// of key-distribution sessions.

#include <chrono>
#include <cstdio>
#include <vector>

#include "qkdsim/parallel.hpp"
#include "qkdsim/qkd.hpp"
#include "qkdsim/sparse_state.hpp"

using namespace qkdsim;
using clock_type = std::chrono::steady_clock;

static double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int main() {
    // Walsh-Hadamard oracle at the dense-backend ceiling.
    {
        RngStream rng(99);
        SparseState st = superpose2(rng.bits(k_dense_max_qubits),
                                    rng.bits(k_dense_max_qubits), 0);
        DenseState dense = dense_from_sparse(st);

        auto t0 = clock_type::now();
        auto serial = dense_hadamard_distribution_serial(dense);
        double ts = seconds_since(t0);

        t0 = clock_type::now();
        auto parallel = dense_hadamard_distribution(dense);
        double tp = seconds_since(t0);

        double max_diff = 0;
        for (std::size_t i = 0; i < serial.size(); ++i)
            max_diff = std::max(max_diff, std::abs(serial[i] - parallel[i]));
        std::printf("wht_n_qubits %zu\n", k_dense_max_qubits);
        std::printf("wht_serial_s %.4f\n", ts);
        std::printf("wht_parallel_s %.4f\n", tp);
        std::printf("wht_speedup %.2f\n", ts / tp);
        std::printf("wht_max_diff %.3e\n", max_diff);
    }

    // Monte Carlo session batch.
    {
        QkdParams params = QkdParams::standard(4);
        const std::size_t sessions = 2000;
        std::vector<int> ok_serial(sessions), ok_parallel(sessions);
        auto body = [&](std::vector<int>& ok) {
            return [&params, &ok](std::size_t t, RngStream& rng) {
                auto [first, alice] = qkd_first(params, rng);
                SecondResult second = qkd_second(first.msg, first.mu, params, rng);
                ok[t] = second.resp &&
                        qkd_decode(alice, params, *second.resp).key == second.outcome.key;
            };
        };

        auto t0 = clock_type::now();
        run_trials_serial(sessions, RngStream(7), body(ok_serial));
        double ts = seconds_since(t0);

        t0 = clock_type::now();
        run_trials(sessions, RngStream(7), body(ok_parallel));
        double tp = seconds_since(t0);

        bool identical = ok_serial == ok_parallel;
        std::printf("qkd_sessions %zu\n", sessions);
        std::printf("qkd_serial_s %.4f\n", ts);
        std::printf("qkd_parallel_s %.4f\n", tp);
        std::printf("qkd_speedup %.2f\n", ts / tp);
        std::printf("qkd_results_identical %d\n", identical ? 1 : 0);
        return identical ? 0 : 1;
    }
}
