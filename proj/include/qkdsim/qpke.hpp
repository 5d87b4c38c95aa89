#pragma once

#include <optional>
#include <vector>

#include "qkdsim/ots.hpp"
#include "qkdsim/primitives.hpp"
#include "qkdsim/sparse_state.hpp"

namespace qkdsim {

// ---------------------------------------------------------------------------
// Everlasting scheme: the public key is the signature state
// (|0,sigma0> + (-1)^{d0} |1,sigma1>)/sqrt(2) over 1 + s(1) qubits and the
// ciphertext is classical.
// ---------------------------------------------------------------------------

struct EvParams {
    OtsParams ots; // message_bits must be 1

    std::size_t register_qubits() const { return 1 + ots.signature_bits(); }
};

struct EvSecretKey {
    OtsVerifyKey vk0, vk1;
    OtsSignature sigma0, sigma1;
    int d0;
};

struct EvPublicKey {
    SparseState rho;
    OtsVerifyKey vk0, vk1;
};

// Abort (bottom) is a first-class ciphertext value so experiment statistics
// can count aborts.
struct EvCiphertext {
    bool aborted = false;
    int ct1 = 0;
    BitString ct2;

    static EvCiphertext abort() { return EvCiphertext{true, 0, BitString()}; }
};

EvSecretKey ev_skgen(const EvParams& params, RngStream& rng);
EvPublicKey ev_pkgen(const EvParams& params, const EvSecretKey& sk);
EvCiphertext ev_enc(const SparseState& rho, const EvPublicKey& pk, int m, RngStream& rng);
int ev_dec(const EvSecretKey& sk, const EvCiphertext& ct);

// Basis string (b, sigma_b) of the secret key's branch b.
BitString ev_branch_string(const EvSecretKey& sk, int b);

// ---------------------------------------------------------------------------
// Computational scheme: the secret key is a PRF key, OTS coins are derived
// as PRF(k, r_b), the phase is applied by the encrypter, and the ciphertext
// carries a quantum state.
// ---------------------------------------------------------------------------

struct CompParams {
    std::size_t lambda;
    OtsParams ots; // message_bits must be 1 and coin_bits == lambda

    std::size_t register_qubits() const { return 1 + ots.signature_bits(); }
};

struct CompSecretKey {
    PrfKey k;
};

struct CompPublicKey {
    SparseState rho;
    OtsVerifyKey vk0, vk1;
    BitString r0, r1;
};

struct CompCiphertext {
    bool aborted = false;
    std::optional<SparseState> quantum;
    BitString r0, r1;

    static CompCiphertext abort() { return CompCiphertext{true, std::nullopt, {}, {}}; }
};

// Decryption measures in the two-element basis {(|0,s0> +- |1,s1>)/sqrt(2)}.
// That basis does not span the whole register, so a third outcome reports
// support outside it (a tampering signal).
enum class CompDecOutcome { Bit0, Bit1, SupportMismatch };

CompSecretKey comp_skgen(std::size_t lambda, RngStream& rng);
CompPublicKey comp_pkgen(const CompParams& params, const CompSecretKey& sk, RngStream& rng);
CompCiphertext comp_enc(const SparseState& rho, const CompPublicKey& pk, int m, RngStream& rng);
CompDecOutcome comp_dec(const CompParams& params, const CompSecretKey& sk,
                        const CompCiphertext& ct, RngStream& rng);

// ---------------------------------------------------------------------------
// Standard bit-by-bit wrapper over the everlasting scheme.
// ---------------------------------------------------------------------------

struct EvKeyPair {
    EvSecretKey sk;
    EvPublicKey pk;
};

std::vector<EvCiphertext> multibit_enc(const std::vector<EvKeyPair>& keys,
                                       const BitString& m, RngStream& rng);

// Nullopt if any position carries Abort.
std::optional<BitString> multibit_dec(const std::vector<EvKeyPair>& keys,
                                      const std::vector<EvCiphertext>& cts);

} // namespace qkdsim
