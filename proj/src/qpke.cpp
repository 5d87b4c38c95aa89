#include "qkdsim/qpke.hpp"

namespace qkdsim {

namespace {

void require_1bit(const OtsParams& ots, const char* where) {
    if (ots.message_bits != 1)
        throw std::invalid_argument(std::string(where) + ": OTS message_bits must be 1");
}

BitString branch_string(int b, const OtsSignature& sigma) {
    BitString head(1);
    head.set(0, b);
    return head.concat(sigma.flat());
}

} // namespace

BitString ev_branch_string(const EvSecretKey& sk, int b) {
    return branch_string(b, b == 0 ? sk.sigma0 : sk.sigma1);
}

EvSecretKey ev_skgen(const EvParams& params, RngStream& rng) {
    require_1bit(params.ots, "ev_skgen");
    auto kp0 = sgen(params.ots, rng.bits(params.ots.coin_bits));
    auto kp1 = sgen(params.ots, rng.bits(params.ots.coin_bits));
    BitString zero(1), one(1);
    one.set(0, 1);
    EvSecretKey sk{kp0.vk, kp1.vk, sign(kp0.sk, zero), sign(kp1.sk, one), rng.next_bit()};
    // Signing keys are discarded: the secret key keeps only vk's, sigmas, d0.
    return sk;
}

EvPublicKey ev_pkgen(const EvParams& params, const EvSecretKey& sk) {
    (void)params;
    SparseState rho = superpose2(ev_branch_string(sk, 0), ev_branch_string(sk, 1), sk.d0);
    return EvPublicKey{std::move(rho), sk.vk0, sk.vk1};
}

EvCiphertext ev_enc(const SparseState& rho, const EvPublicKey& pk, int m, RngStream& rng) {
    auto res = project(rho, accepts_pred(pk.vk0, pk.vk1), rng);
    if (res.outcome == ProjectOutcome::Reject) return EvCiphertext::abort();
    BitString d = sample_hadamard(*res.post, rng);
    EvCiphertext ct;
    ct.ct1 = (m ^ d.get(0)) & 1;
    ct.ct2 = d.slice(1, d.size() - 1);
    return ct;
}

int ev_dec(const EvSecretKey& sk, const EvCiphertext& ct) {
    if (ct.aborted) throw AbortCiphertext("ev_dec: ciphertext is bottom");
    BitString sig_diff = sk.sigma0.flat() ^ sk.sigma1.flat();
    return sk.d0 ^ ct.ct1 ^ ct.ct2.dot(sig_diff);
}

CompSecretKey comp_skgen(std::size_t lambda, RngStream& rng) {
    return CompSecretKey{PrfKey{rng.bits(lambda)}};
}

namespace {

struct CompKeyMaterial {
    OtsKeyPair kp0, kp1;
    OtsSignature sigma0, sigma1;
};

CompKeyMaterial comp_derive(const CompParams& params, const CompSecretKey& sk,
                            const BitString& r0, const BitString& r1) {
    require_1bit(params.ots, "comp scheme");
    if (params.ots.coin_bits != params.lambda)
        throw std::invalid_argument("comp scheme: OTS coin_bits must equal lambda");
    CompKeyMaterial km{sgen(params.ots, prf_eval(sk.k, r0)),
                       sgen(params.ots, prf_eval(sk.k, r1)),
                       {}, {}};
    BitString zero(1), one(1);
    one.set(0, 1);
    km.sigma0 = sign(km.kp0.sk, zero);
    km.sigma1 = sign(km.kp1.sk, one);
    return km;
}

} // namespace

CompPublicKey comp_pkgen(const CompParams& params, const CompSecretKey& sk, RngStream& rng) {
    BitString r0 = rng.bits(params.lambda);
    BitString r1 = rng.bits(params.lambda);
    CompKeyMaterial km = comp_derive(params, sk, r0, r1);
    SparseState rho = superpose2(branch_string(0, km.sigma0), branch_string(1, km.sigma1), 0);
    return CompPublicKey{std::move(rho), km.kp0.vk, km.kp1.vk, r0, r1};
}

CompCiphertext comp_enc(const SparseState& rho, const CompPublicKey& pk, int m, RngStream& rng) {
    auto res = project(rho, accepts_pred(pk.vk0, pk.vk1), rng);
    if (res.outcome == ProjectOutcome::Reject) return CompCiphertext::abort();
    CompCiphertext ct;
    ct.quantum = apply_z_phase(*res.post, 0, m);
    ct.r0 = pk.r0;
    ct.r1 = pk.r1;
    return ct;
}

CompDecOutcome comp_dec(const CompParams& params, const CompSecretKey& sk,
                        const CompCiphertext& ct, RngStream& rng) {
    if (ct.aborted) throw AbortCiphertext("comp_dec: ciphertext is bottom");
    CompKeyMaterial km = comp_derive(params, sk, ct.r0, ct.r1);
    BitString b0 = branch_string(0, km.sigma0);
    BitString b1 = branch_string(1, km.sigma1);
    // Signed amplitude numerators of the two basis-vector components; any
    // term outside {b0, b1} means the state left the measured span.
    int s0 = 0, s1 = 0;
    for (const auto& t : ct.quantum->terms()) {
        if (t.basis == b0) {
            s0 = t.sign;
        } else if (t.basis == b1) {
            s1 = t.sign;
        } else {
            return CompDecOutcome::SupportMismatch;
        }
    }
    // Born rule on {(b0 +- b1)/sqrt(2)}: exact integer sampling, since the
    // outcome weights are (s0+s1)^2 and (s0-s1)^2 up to one normalization.
    uint64_t w_plus = uint64_t((s0 + s1) * (s0 + s1));
    uint64_t w_minus = uint64_t((s0 - s1) * (s0 - s1));
    return rng.below(w_plus + w_minus) < w_plus ? CompDecOutcome::Bit0
                                                : CompDecOutcome::Bit1;
}

std::vector<EvCiphertext> multibit_enc(const std::vector<EvKeyPair>& keys,
                                       const BitString& m, RngStream& rng) {
    if (keys.size() != m.size())
        throw LengthMismatch("multibit_enc: one key pair per message bit required");
    std::vector<EvCiphertext> cts;
    cts.reserve(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i)
        cts.push_back(ev_enc(keys[i].pk.rho, keys[i].pk, m.get(i), rng));
    return cts;
}

std::optional<BitString> multibit_dec(const std::vector<EvKeyPair>& keys,
                                      const std::vector<EvCiphertext>& cts) {
    if (keys.size() != cts.size())
        throw LengthMismatch("multibit_dec: key/ciphertext count mismatch");
    BitString m(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (cts[i].aborted) return std::nullopt;
        m.set(i, ev_dec(keys[i].sk, cts[i]));
    }
    return m;
}

} // namespace qkdsim
