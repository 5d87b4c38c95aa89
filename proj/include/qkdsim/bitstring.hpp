#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qkdsim/errors.hpp"

namespace qkdsim {

// Fixed-length GF(2) vector. Index 0 is the leftmost bit of the written
// string, i.e. the first qubit of a basis ket.
class BitString {
public:
    BitString() = default;

    explicit BitString(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitString zeros(std::size_t n) { return BitString(n); }

    // Parse a string of '0'/'1' characters, leftmost character = index 0.
    static BitString from_bits(const std::string& s) {
        BitString b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') {
                b.set(i, 1);
            } else if (s[i] != '0') {
                throw ParseError("BitString::from_bits: bad character");
            }
        }
        return b;
    }

    std::size_t size() const { return n_; }

    int get(std::size_t i) const {
        check_index(i);
        return int((w_[i >> 6] >> (i & 63)) & 1u);
    }

    void set(std::size_t i, int v) {
        check_index(i);
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v) {
            w_[i >> 6] |= mask;
        } else {
            w_[i >> 6] &= ~mask;
        }
    }

    BitString operator^(const BitString& o) const {
        check_len(o);
        BitString r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] ^= o.w_[i];
        return r;
    }

    BitString operator&(const BitString& o) const {
        check_len(o);
        BitString r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
        return r;
    }

    // Inner product mod 2.
    int dot(const BitString& o) const {
        check_len(o);
        uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return __builtin_popcountll(acc) & 1;
    }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    bool operator==(const BitString& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitString& o) const { return !(*this == o); }
    bool operator<(const BitString& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (std::size_t i = w_.size(); i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

    // Concatenation: this followed by o.
    BitString concat(const BitString& o) const {
        BitString r(n_ + o.n_);
        for (std::size_t i = 0; i < n_; ++i) r.set(i, get(i));
        for (std::size_t i = 0; i < o.n_; ++i) r.set(n_ + i, o.get(i));
        return r;
    }

    BitString slice(std::size_t begin, std::size_t len) const {
        if (begin + len > n_) throw IndexOutOfRange("BitString::slice out of range");
        BitString r(len);
        for (std::size_t i = 0; i < len; ++i) r.set(i, get(begin + i));
        return r;
    }

    // Array index with bit 0 as the most significant bit; requires n <= 64.
    uint64_t to_index() const {
        if (n_ > 64) throw TooManyQubits("BitString::to_index: too long");
        uint64_t idx = 0;
        for (std::size_t i = 0; i < n_; ++i) idx = (idx << 1) | uint64_t(get(i));
        return idx;
    }

    static BitString from_index(uint64_t idx, std::size_t n) {
        BitString b(n);
        for (std::size_t i = 0; i < n; ++i)
            b.set(i, int((idx >> (n - 1 - i)) & 1));
        return b;
    }

    std::string to_bit_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    // Hex encoding: bit 0 lands on the MSB of the first byte.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::size_t nbytes = (n_ + 7) / 8;
        std::string s;
        s.reserve(2 * nbytes);
        for (std::size_t j = 0; j < nbytes; ++j) {
            unsigned byte = 0;
            for (std::size_t k = 0; k < 8; ++k) {
                std::size_t i = 8 * j + k;
                byte = (byte << 1) | (i < n_ ? unsigned(get(i)) : 0u);
            }
            s.push_back(digits[byte >> 4]);
            s.push_back(digits[byte & 0xf]);
        }
        return s;
    }

    static BitString from_hex(const std::string& s, std::size_t n) {
        if (s.size() != 2 * ((n + 7) / 8))
            throw ParseError("BitString::from_hex: bad length");
        BitString b(n);
        auto val = [](char c) -> unsigned {
            if (c >= '0' && c <= '9') return unsigned(c - '0');
            if (c >= 'a' && c <= 'f') return unsigned(c - 'a' + 10);
            if (c >= 'A' && c <= 'F') return unsigned(c - 'A' + 10);
            throw ParseError("BitString::from_hex: bad digit");
        };
        for (std::size_t j = 0; j * 2 < s.size(); ++j) {
            unsigned byte = (val(s[2 * j]) << 4) | val(s[2 * j + 1]);
            for (std::size_t k = 0; k < 8; ++k) {
                std::size_t i = 8 * j + k;
                if (i < n) b.set(i, int((byte >> (7 - k)) & 1));
            }
        }
        return b;
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    void check_index(std::size_t i) const {
        if (i >= n_) throw IndexOutOfRange("BitString index out of range");
    }
    void check_len(const BitString& o) const {
        if (n_ != o.n_) throw LengthMismatch("BitString length mismatch");
    }

    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace qkdsim
