#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qkdsim/bitstring.hpp"
#include "qkdsim/primitives.hpp"
#include "qkdsim/rng.hpp"
#include "qkdsim/sparse_state.hpp"

namespace qkdsim {

// Lamport-style one-time signatures over the toy OWF. Key generation is
// fully determined by its coin string, which is what the derandomized
// (PRF-coined) variant of the computational scheme relies on.
//
// Caveat: plain Lamport signatures are only strongly unforgeable when the
// OWF is injective on the searched space. At toy scale we keep
// preimage_bits >= output_bits so second preimages are rare, and the test
// suite checks the forgery rate empirically instead of assuming it.
struct OtsParams {
    std::size_t message_bits;
    std::size_t preimage_bits;
    std::size_t coin_bits = 32;
    uint64_t owf_family = 1;
    unsigned owf_rounds = 4;

    std::size_t signature_bits() const { return message_bits * preimage_bits; }

    OwfParams owf() const {
        return OwfParams{preimage_bits, preimage_bits, owf_family, owf_rounds};
    }

    bool operator==(const OtsParams&) const = default;
};

struct OtsSigningKey {
    OtsParams params;
    // preimages[b][i]: the preimage revealed when message bit i equals b.
    std::vector<BitString> preimages[2];
};

struct OtsVerifyKey {
    OtsParams params;
    std::vector<BitString> images[2];

    bool operator==(const OtsVerifyKey& o) const {
        return params == o.params && images[0] == o.images[0] && images[1] == o.images[1];
    }

    std::string to_hex() const;
    static OtsVerifyKey from_hex(const OtsParams& params, const std::string& hex);
};

struct OtsSignature {
    std::vector<BitString> revealed; // one preimage per message bit, slot 0 first

    // Normative flat layout: revealed preimages concatenated slot 0 first.
    // These bits are the sigma entering the protocols' parity computations.
    BitString flat() const;
    static OtsSignature from_flat(const OtsParams& params, const BitString& bits);

    bool operator==(const OtsSignature& o) const { return revealed == o.revealed; }
};

struct OtsKeyPair {
    OtsVerifyKey vk;
    OtsSigningKey sk;
};

// Deterministic: identical coins give bit-identical key pairs.
OtsKeyPair sgen(const OtsParams& params, const BitString& coins);

OtsSignature sign(const OtsSigningKey& sk, const BitString& m);

int ver(const OtsVerifyKey& vk, const BitString& m, const OtsSignature& sig);

// Predicate over strings (b, sigma) of length 1 + s(1): true iff sigma is an
// accepting signature of b under vk_b. This is the projector used by both
// encryption schemes.
BasisPredicate accepts_pred(const OtsVerifyKey& vk0, const OtsVerifyKey& vk1);

// Test oracle: exhaustively searches up to `budget` candidate preimages per
// slot for a signature on m that verifies.
std::optional<OtsSignature> brute_force_forge(const OtsVerifyKey& vk,
                                              const BitString& m,
                                              uint64_t budget);

} // namespace qkdsim
