#include "qkdsim/primitives.hpp"

namespace qkdsim {

namespace {

inline uint64_t rotl(uint64_t x, unsigned k) { return (x << k) | (x >> (64 - k)); }

constexpr uint64_t k_round_const[8] = {
    0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL, 0xa4093822299f31d0ULL,
    0x082efa98ec4e6c89ULL, 0x452821e638d01377ULL, 0xbe5466cf34e90c6cULL,
    0xc0ac29b7c97c50ddULL, 0x3f84d5b5b5470917ULL};

// Fixed 4-bit S-box (a permutation of 0..15), applied nibble-wise.
constexpr uint8_t k_sbox[16] = {0xc, 0x5, 0x6, 0xb, 0x9, 0x0, 0xa, 0xd,
                                0x3, 0xe, 0xf, 0x8, 0x4, 0x7, 0x1, 0x2};

inline uint64_t sbox_nibbles(uint64_t x) {
    uint64_t r = 0;
    for (unsigned i = 0; i < 16; ++i)
        r |= uint64_t(k_sbox[(x >> (4 * i)) & 0xf]) << (4 * i);
    return r;
}

struct MixState {
    uint64_t s[4];

    void round(unsigned r, uint64_t key_word) {
        s[0] += k_round_const[r & 7];
        s[1] = rotl(s[1] ^ s[0], 13) ^ key_word;
        s[2] = rotl(s[2] + s[1], 29);
        s[3] = rotl(s[3] ^ s[2], 41) + s[0];
        s[0] = sbox_nibbles(rotl(s[0], 7) ^ s[3]);
    }
};

// Shared sponge-style core for owf_eval, prf_eval and bit_expand. The key
// (possibly empty) is folded in on every round.
BitString mix_core(uint64_t family_id, unsigned rounds, uint64_t domain,
                   const BitString& input, const BitString& key,
                   std::size_t out_bits) {
    MixState st{{0x6a09e667f3bcc908ULL ^ family_id,
                 0xbb67ae8584caa73bULL ^ domain,
                 0x3c6ef372fe94f82bULL ^ (uint64_t(input.size()) << 32 | out_bits),
                 0xa54ff53a5f1d36f1ULL}};
    const auto& kw = key.words();
    auto key_word = [&](unsigned r) -> uint64_t {
        return kw.empty() ? 0 : kw[r % kw.size()];
    };
    unsigned rc = 0;
    for (uint64_t w : input.words()) {
        st.s[0] ^= w;
        for (unsigned r = 0; r < rounds; ++r) st.round(rc++, key_word(r));
    }
    // Blank rounds before squeezing.
    for (unsigned r = 0; r < rounds; ++r) st.round(rc++, key_word(r));
    BitString out(out_bits);
    std::size_t produced = 0;
    while (produced < out_bits) {
        uint64_t w = st.s[0] ^ st.s[2];
        for (std::size_t i = 0; i < 64 && produced < out_bits; ++i, ++produced)
            out.set(produced, int((w >> i) & 1));
        if (produced < out_bits)
            for (unsigned r = 0; r < rounds; ++r) st.round(rc++, key_word(r));
    }
    return out;
}

} // namespace

BitString owf_eval(const OwfParams& params, const BitString& x) {
    if (x.size() != params.input_bits)
        throw LengthMismatch("owf_eval: input length mismatch");
    return mix_core(params.family_id, params.round_count, /*domain=*/0x01,
                    x, BitString(), params.output_bits);
}

BitString prf_eval(const PrfKey& key, const BitString& x) {
    if (x.size() != key.key.size())
        throw LengthMismatch("prf_eval: input length must equal key length");
    return mix_core(/*family_id=*/1, /*rounds=*/6, /*domain=*/0x02,
                    x, key.key, x.size());
}

BitString bit_expand(const BitString& seed, std::size_t out_bits) {
    return mix_core(/*family_id=*/1, /*rounds=*/6, /*domain=*/0x03,
                    seed, BitString(), out_bits);
}

ToeplitzHash hash_sample(RngStream& rng, std::size_t lambda) {
    if (lambda < 1) throw std::invalid_argument("hash_sample: lambda must be >= 1");
    return ToeplitzHash{lambda, rng.bits(5 * lambda - 1)};
}

ToeplitzHash hash_from_seed(std::size_t lambda, const BitString& diagonal_seed) {
    if (diagonal_seed.size() != 5 * lambda - 1)
        throw LengthMismatch("hash_from_seed: seed length must be 5*lambda - 1");
    return ToeplitzHash{lambda, diagonal_seed};
}

BitString hash_eval(const ToeplitzHash& h, const BitString& x) {
    std::size_t in = h.input_bits();
    if (x.size() != in) throw LengthMismatch("hash_eval: input length mismatch");
    // T[i][j] = seed[i - j + in - 1]; constant along diagonals.
    BitString out(h.lambda);
    for (std::size_t i = 0; i < h.lambda; ++i) {
        int bit = 0;
        for (std::size_t j = 0; j < in; ++j)
            if (x.get(j)) bit ^= h.diagonal_seed.get(i + in - 1 - j);
        out.set(i, bit);
    }
    return out;
}

} // namespace qkdsim
