#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qkdsim/qkd.hpp"
#include "qkdsim/qpke.hpp"

namespace qkdsim {

// Classical blob plus optional sparse states; every attack in scope is
// expressible with this internal register at desk scale.
struct AdvInternal {
    std::vector<std::string> notes;
    std::vector<SparseState> states;

    std::string dump() const;
};

// First protocol flow as seen by the channel: classical fields are carried
// read-only (authenticated channel), quantum registers may be rewritten.
struct FirstFlow {
    const std::vector<std::string>& classical;
    std::vector<SparseState>& quantum;
};

// Second flow (QKD response). The response is entirely classical; within the
// authenticated-channel model the only legal tampering is dropping it.
struct SecondFlow {
    Response* resp = nullptr;
    bool blocked = false;
};

struct AdversaryChannel {
    std::string name;
    // Diagnostic channels step outside the authenticated-channel model by
    // rewriting classical fields; they are excluded from the channel
    // invariant but still exercised by the verifiability experiments.
    bool tampers_classical = false;
    uint64_t search_budget = 0; // used by keysearch_wrapper
    std::function<void(FirstFlow&, AdvInternal&, RngStream&)> tamper_first;
    std::function<void(SecondFlow&, AdvInternal&, RngStream&)> tamper_second;
};

// Fully reproducible from (scenario, seed); dumped as line-oriented text.
struct ExperimentRecord {
    std::string scenario;
    uint64_t seed = 0;
    std::vector<std::string> lines;
    AdvInternal internal;

    std::string dump() const;
};

// Def-style single-copy experiment: keygen, hand (rho, pk) to the channel,
// encrypt on the returned register, record the joint output.
ExperimentRecord run_exp_everlasting(const AdversaryChannel& adv, int m,
                                     const EvParams& params, RngStream& rng);

// Multi-copy variant: n public keys from one secret key; encryption uses
// pk_1 on the register the channel returns.
ExperimentRecord run_exp_computational(const AdversaryChannel& adv, int m,
                                       std::size_t n, const CompParams& params,
                                       RngStream& rng);

struct QkdSecOutcome {
    std::optional<BitString> k0, k1;
};

// Full two-flow key-distribution experiment, including the (bottom, bottom)
// branch when the responder rejects and the k1 = bottom branch on decode
// failure or a blocked response.
ExperimentRecord run_qkdsec(const AdversaryChannel& adv, const QkdParams& params,
                            RngStream& rng, QkdSecOutcome* outcome = nullptr);

struct KeysearchResult {
    EvSecretKey sk_star;
    EvPublicKey pk_star;
    uint64_t iterations;
};

// Unbounded-attacker key search: resample secret keys until the classical
// public key matches, up to `budget` attempts.
std::optional<KeysearchResult> keysearch_attack(const OtsVerifyKey& vk0,
                                                const OtsVerifyKey& vk1,
                                                const EvParams& params,
                                                uint64_t budget, RngStream& rng);

std::vector<AdversaryChannel> catalog(uint64_t keysearch_budget = 1024,
                                      std::optional<EvParams> keysearch_params = std::nullopt);

const AdversaryChannel& find_channel(const std::vector<AdversaryChannel>& chans,
                                     const std::string& name);

} // namespace qkdsim
