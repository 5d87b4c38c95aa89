#include "qkdsim/qkd.hpp"

namespace qkdsim {

QkdParams QkdParams::standard(std::size_t lambda, std::size_t qpke_preimage_bits,
                              std::size_t bob_preimage_bits) {
    QkdParams p;
    p.lambda = lambda;
    p.qpke_ots = OtsParams{1, qpke_preimage_bits, /*coin_bits=*/32};
    p.bob_ots = OtsParams{4 * lambda, bob_preimage_bits, /*coin_bits=*/32};
    return p;
}

std::pair<FirstMessage, AliceState> qkd_first(const QkdParams& params, RngStream& rng) {
    EvParams ev{params.qpke_ots};
    FirstMessage fm;
    AliceState alice;
    std::size_t n = params.instance_count();
    fm.msg.reserve(n);
    fm.mu.reserve(n);
    alice.st.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        EvSecretKey sk = ev_skgen(ev, rng);
        EvPublicKey pk = ev_pkgen(ev, sk);
        fm.msg.push_back({pk.vk0, pk.vk1});
        fm.mu.push_back(pk.rho);
        alice.st.push_back(std::move(sk));
    }
    return {std::move(fm), std::move(alice)};
}

SecondResult qkd_second(const std::vector<QkdClassicalPk>& msg,
                        const std::vector<SparseState>& mu,
                        const QkdParams& params, RngStream& rng) {
    std::size_t n = params.instance_count();
    if (msg.size() != n || mu.size() != n)
        throw LengthMismatch("qkd_second: first-message list lengths");
    OtsKeyPair bob = sgen(params.bob_ots, rng.bits(params.bob_ots.coin_bits));
    BitString k = rng.bits(params.key_bits());
    ToeplitzHash hash = hash_sample(rng, params.lambda);
    BitString sigma = sign(bob.sk, k).flat();

    Response resp{hash, bob.vk, {}};
    resp.cts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        int bit = i < params.key_bits() ? k.get(i) : sigma.get(i - params.key_bits());
        EvPublicKey pk{mu[i], msg[i].vk0, msg[i].vk1};
        EvCiphertext ct = ev_enc(mu[i], pk, bit, rng);
        if (ct.aborted) return {std::nullopt, SessionOutcome{std::nullopt}};
        resp.cts.push_back(std::move(ct));
    }
    return {std::move(resp), SessionOutcome{hash_eval(hash, k)}};
}

SessionOutcome qkd_decode(const AliceState& st, const QkdParams& params,
                          const Response& resp) {
    std::size_t n = params.instance_count();
    if (st.st.size() != n || resp.cts.size() != n)
        throw LengthMismatch("qkd_decode: instance count mismatch");
    BitString k(params.key_bits());
    BitString sigma_bits(params.signature_instances());
    for (std::size_t i = 0; i < n; ++i) {
        if (resp.cts[i].aborted) return SessionOutcome{std::nullopt};
        int bit = ev_dec(st.st[i], resp.cts[i]);
        if (i < params.key_bits()) {
            k.set(i, bit);
        } else {
            // Signature instance j lives at index 4*lambda + j.
            sigma_bits.set(i - params.key_bits(), bit);
        }
    }
    OtsSignature sigma = OtsSignature::from_flat(params.bob_ots, sigma_bits);
    if (ver(resp.vk, k, sigma) != 1) return SessionOutcome{std::nullopt};
    return SessionOutcome{hash_eval(resp.hash, k)};
}

} // namespace qkdsim
