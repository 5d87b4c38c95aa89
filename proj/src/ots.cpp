#include "qkdsim/ots.hpp"

namespace qkdsim {

BitString OtsSignature::flat() const {
    BitString out(0);
    for (const auto& p : revealed) out = out.concat(p);
    return out;
}

OtsSignature OtsSignature::from_flat(const OtsParams& params, const BitString& bits) {
    if (bits.size() != params.signature_bits())
        throw LengthMismatch("OtsSignature::from_flat: wrong length");
    OtsSignature sig;
    for (std::size_t i = 0; i < params.message_bits; ++i)
        sig.revealed.push_back(bits.slice(i * params.preimage_bits, params.preimage_bits));
    return sig;
}

std::string OtsVerifyKey::to_hex() const {
    BitString flat(0);
    for (int b = 0; b < 2; ++b)
        for (const auto& img : images[b]) flat = flat.concat(img);
    return flat.to_hex();
}

OtsVerifyKey OtsVerifyKey::from_hex(const OtsParams& params, const std::string& hex) {
    std::size_t total = 2 * params.signature_bits();
    BitString flat = BitString::from_hex(hex, total);
    OtsVerifyKey vk{params, {}};
    std::size_t off = 0;
    for (int b = 0; b < 2; ++b)
        for (std::size_t i = 0; i < params.message_bits; ++i) {
            vk.images[b].push_back(flat.slice(off, params.preimage_bits));
            off += params.preimage_bits;
        }
    return vk;
}

OtsKeyPair sgen(const OtsParams& params, const BitString& coins) {
    if (coins.size() != params.coin_bits)
        throw CoinLengthMismatch("sgen: coin length mismatch");
    std::size_t per_slot = params.preimage_bits;
    BitString pool = bit_expand(coins, 2 * params.message_bits * per_slot);
    OtsSigningKey sk{params, {}};
    OtsVerifyKey vk{params, {}};
    OwfParams owf = params.owf();
    std::size_t off = 0;
    for (int b = 0; b < 2; ++b)
        for (std::size_t i = 0; i < params.message_bits; ++i) {
            BitString pre = pool.slice(off, per_slot);
            off += per_slot;
            sk.preimages[b].push_back(pre);
            vk.images[b].push_back(owf_eval(owf, pre));
        }
    return {std::move(vk), std::move(sk)};
}

OtsSignature sign(const OtsSigningKey& sk, const BitString& m) {
    if (m.size() != sk.params.message_bits)
        throw LengthMismatch("sign: message length mismatch");
    OtsSignature sig;
    for (std::size_t i = 0; i < m.size(); ++i)
        sig.revealed.push_back(sk.preimages[m.get(i)][i]);
    return sig;
}

int ver(const OtsVerifyKey& vk, const BitString& m, const OtsSignature& sig) {
    if (m.size() != vk.params.message_bits || sig.revealed.size() != m.size())
        throw LengthMismatch("ver: dimension mismatch");
    OwfParams owf = vk.params.owf();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (sig.revealed[i].size() != vk.params.preimage_bits)
            throw LengthMismatch("ver: preimage length mismatch");
        if (owf_eval(owf, sig.revealed[i]) != vk.images[m.get(i)][i]) return 0;
    }
    return 1;
}

BasisPredicate accepts_pred(const OtsVerifyKey& vk0, const OtsVerifyKey& vk1) {
    if (vk0.params != vk1.params || vk0.params.message_bits != 1)
        throw std::invalid_argument("accepts_pred: keys must share 1-bit-message params");
    OtsParams params = vk0.params;
    std::size_t len = 1 + params.signature_bits();
    auto pred = [vk0, vk1, params](const BitString& x) {
        int b = x.get(0);
        BitString m(1);
        m.set(0, b);
        OtsSignature sig = OtsSignature::from_flat(params, x.slice(1, params.signature_bits()));
        return ver(b == 0 ? vk0 : vk1, m, sig) == 1;
    };
    return BasisPredicate{len, pred};
}

std::optional<OtsSignature> brute_force_forge(const OtsVerifyKey& vk,
                                              const BitString& m,
                                              uint64_t budget) {
    const OtsParams& params = vk.params;
    OwfParams owf = params.owf();
    uint64_t space = params.preimage_bits >= 64
                         ? UINT64_MAX
                         : (uint64_t(1) << params.preimage_bits);
    uint64_t limit = std::min(budget, space);
    OtsSignature sig;
    for (std::size_t i = 0; i < params.message_bits; ++i) {
        const BitString& target = vk.images[m.get(i)][i];
        bool found = false;
        for (uint64_t c = 0; c < limit; ++c) {
            BitString cand = BitString::from_index(c, params.preimage_bits);
            if (owf_eval(owf, cand) == target) {
                sig.revealed.push_back(cand);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return sig;
}

} // namespace qkdsim
