#pragma once

#include <cstdint>

#include "qkdsim/bitstring.hpp"
#include "qkdsim/rng.hpp"

namespace qkdsim {

// Pinned toy mixing function. NOT cryptographically secure: it exists so
// that forgery and key-search hardness are tunable and reproducible across
// implementations. The bit-level definition is frozen by the golden vectors
// under tests/data/.
struct OwfParams {
    std::size_t input_bits;
    std::size_t output_bits;
    uint64_t family_id = 1;
    unsigned round_count = 4;

    bool operator==(const OwfParams&) const = default;
};

BitString owf_eval(const OwfParams& params, const BitString& x);

struct PrfKey {
    BitString key; // length lambda
};

// PRF: {0,1}^lambda x {0,1}^lambda -> {0,1}^lambda, the key folded into the
// mixing state each round.
BitString prf_eval(const PrfKey& key, const BitString& x);

// Deterministic expansion of a short seed into out_bits pseudorandom bits
// (counter mode over the mixing core). Used to derandomize key generation.
BitString bit_expand(const BitString& seed, std::size_t out_bits);

// Toeplitz universal hash {0,1}^{4*lambda} -> {0,1}^lambda over GF(2),
// defined by a diagonal seed of 4*lambda + lambda - 1 bits.
struct ToeplitzHash {
    std::size_t lambda;
    BitString diagonal_seed; // length 5*lambda - 1

    std::size_t input_bits() const { return 4 * lambda; }
    std::size_t output_bits() const { return lambda; }
};

ToeplitzHash hash_sample(RngStream& rng, std::size_t lambda);

ToeplitzHash hash_from_seed(std::size_t lambda, const BitString& diagonal_seed);

BitString hash_eval(const ToeplitzHash& h, const BitString& x);

} // namespace qkdsim
