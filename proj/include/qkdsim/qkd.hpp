#pragma once

#include <optional>
#include <vector>

#include "qkdsim/qpke.hpp"

namespace qkdsim {

// Two-message key distribution: Alice sends N = 4*lambda + s(4*lambda)
// everlasting public keys; Bob encrypts a 4*lambda-bit key k bit-by-bit into
// the first 4*lambda instances and a one-time signature on k into the rest,
// then both sides derive K = Hash(k).
struct QkdParams {
    std::size_t lambda;
    OtsParams qpke_ots; // 1-bit-message OTS backing each QPKE instance
    OtsParams bob_ots;  // OTS for Bob's 4*lambda-bit key signature

    std::size_t key_bits() const { return 4 * lambda; }
    std::size_t signature_instances() const { return bob_ots.signature_bits(); }
    std::size_t instance_count() const { return key_bits() + signature_instances(); }

    static QkdParams standard(std::size_t lambda, std::size_t qpke_preimage_bits = 8,
                              std::size_t bob_preimage_bits = 4);
};

struct QkdClassicalPk {
    OtsVerifyKey vk0, vk1;
};

struct FirstMessage {
    std::vector<QkdClassicalPk> msg;
    std::vector<SparseState> mu;
};

struct AliceState {
    std::vector<EvSecretKey> st;
};

// Bob's response is entirely classical; the quantum part eta of the generic
// two-message syntax is empty for this protocol.
struct Response {
    ToeplitzHash hash;
    OtsVerifyKey vk;
    std::vector<EvCiphertext> cts;
};

struct SessionOutcome {
    std::optional<BitString> key; // nullopt = reject (bottom)

    bool rejected() const { return !key.has_value(); }
};

std::pair<FirstMessage, AliceState> qkd_first(const QkdParams& params, RngStream& rng);

struct SecondResult {
    std::optional<Response> resp; // nullopt = bottom
    SessionOutcome outcome;
};

// Draw order is fixed (OTS coins, k, hash seed, then per-instance encryption
// randomness in index order) so transcripts replay bit-exactly.
SecondResult qkd_second(const std::vector<QkdClassicalPk>& msg,
                        const std::vector<SparseState>& mu,
                        const QkdParams& params, RngStream& rng);

SessionOutcome qkd_decode(const AliceState& st, const QkdParams& params,
                          const Response& resp);

} // namespace qkdsim
