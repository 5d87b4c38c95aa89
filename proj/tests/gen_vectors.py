#!/usr/bin/env python3
"""Independent generator for the golden vectors under tests/data/.

Reimplements the toy mixing core from scratch in Python so the C++
implementation is pinned against a second implementation rather than
against itself. Run from the repository root:

    python3 tests/gen_vectors.py
"""

import os
import random

MASK = (1 << 64) - 1

ROUND_CONST = [
    0x243F6A8885A308D3, 0x13198A2E03707344, 0xA4093822299F31D0,
    0x082EFA98EC4E6C89, 0x452821E638D01377, 0xBE5466CF34E90C6C,
    0xC0AC29B7C97C50DD, 0x3F84D5B5B5470917,
]

SBOX = [0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD,
        0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2]


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & MASK


def sbox_nibbles(x):
    r = 0
    for i in range(16):
        r |= SBOX[(x >> (4 * i)) & 0xF] << (4 * i)
    return r


def words(bits):
    """bits: list of 0/1, index 0 leftmost; LSB-first packing per 64-bit word."""
    out = []
    for base in range(0, len(bits), 64):
        w = 0
        for j, b in enumerate(bits[base:base + 64]):
            w |= b << j
        out.append(w)
    return out


def mix_core(family_id, rounds, domain, in_bits, key_bits, out_len):
    s = [
        0x6A09E667F3BCC908 ^ family_id,
        0xBB67AE8584CAA73B ^ domain,
        0x3C6EF372FE94F82B ^ (((len(in_bits) << 32) | out_len) & MASK),
        0xA54FF53A5F1D36F1,
    ]
    kw = words(key_bits)

    def key_word(r):
        return kw[r % len(kw)] if kw else 0

    rc = [0]

    # One absorption block: `rounds` rounds, where the key word is indexed
    # by the inner counter and the round constant by the global counter.
    def run_rounds():
        for inner in range(rounds):
            g = rc[0]
            s[0] = (s[0] + ROUND_CONST[g & 7]) & MASK
            s[1] = rotl(s[1] ^ s[0], 13) ^ key_word(inner)
            s[2] = rotl((s[2] + s[1]) & MASK, 29)
            s[3] = (rotl(s[3] ^ s[2], 41) + s[0]) & MASK
            s[0] = sbox_nibbles(rotl(s[0], 7) ^ s[3])
            rc[0] += 1

    for w in words(in_bits):
        s[0] ^= w
        run_rounds()
    run_rounds()

    out = []
    while len(out) < out_len:
        w = s[0] ^ s[2]
        i = 0
        while i < 64 and len(out) < out_len:
            out.append((w >> i) & 1)
            i += 1
        if len(out) < out_len:
            run_rounds()
    return out


def bits_to_hex(bits):
    """bit 0 -> MSB of first byte, zero-padded to whole bytes."""
    nbytes = (len(bits) + 7) // 8
    s = []
    for j in range(nbytes):
        byte = 0
        for k in range(8):
            i = 8 * j + k
            byte = (byte << 1) | (bits[i] if i < len(bits) else 0)
        s.append(f"{byte:02x}")
    return "".join(s)


def rand_bits(rng, n):
    return [rng.randrange(2) for _ in range(n)]


def main():
    data = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")
    os.makedirs(data, exist_ok=True)
    rng = random.Random(20260823)

    with open(os.path.join(data, "owf_vectors.txt"), "w") as f:
        f.write("# in_bits out_bits family rounds in_hex out_hex\n")
        cases = [(2, 2, 1, 4), (4, 4, 1, 4), (8, 8, 1, 4), (16, 16, 1, 4),
                 (24, 24, 1, 4), (8, 8, 2, 4), (8, 8, 1, 6), (70, 70, 1, 4),
                 (5, 9, 1, 4), (130, 40, 1, 4)]
        for (ib, ob, fam, rnds) in cases:
            for _ in range(4):
                x = rand_bits(rng, ib)
                y = mix_core(fam, rnds, 0x01, x, [], ob)
                f.write(f"{ib} {ob} {fam} {rnds} {bits_to_hex(x)} {bits_to_hex(y)}\n")
        # all-zeros and all-ones edge inputs
        for (ib, ob, fam, rnds) in [(8, 8, 1, 4), (16, 16, 1, 4)]:
            for x in ([0] * ib, [1] * ib):
                y = mix_core(fam, rnds, 0x01, x, [], ob)
                f.write(f"{ib} {ob} {fam} {rnds} {bits_to_hex(x)} {bits_to_hex(y)}\n")

    with open(os.path.join(data, "prf_vectors.txt"), "w") as f:
        f.write("# bits key_hex x_hex out_hex\n")
        for bits in (4, 8, 16, 32, 80):
            for _ in range(4):
                key = rand_bits(rng, bits)
                x = rand_bits(rng, bits)
                y = mix_core(1, 6, 0x02, x, key, bits)
                f.write(f"{bits} {bits_to_hex(key)} {bits_to_hex(x)} {bits_to_hex(y)}\n")

    with open(os.path.join(data, "expand_vectors.txt"), "w") as f:
        f.write("# seed_bits out_bits seed_hex out_hex\n")
        for (sb, ob) in [(8, 8), (16, 64), (32, 200), (32, 1024), (64, 7)]:
            for _ in range(3):
                seed = rand_bits(rng, sb)
                y = mix_core(1, 6, 0x03, seed, [], ob)
                f.write(f"{sb} {ob} {bits_to_hex(seed)} {bits_to_hex(y)}\n")

    print("wrote golden vectors to", data)


if __name__ == "__main__":
    main()
