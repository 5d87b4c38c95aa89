#include "qkdsim/wire.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace qkdsim {

std::string ev_ciphertext_line(const EvCiphertext& ct) {
    if (ct.aborted) return "ABORT";
    return "EV " + std::to_string(ct.ct1) + " " + ct.ct2.to_hex();
}

EvCiphertext parse_ev_ciphertext_line(const std::string& line, std::size_t sig_bits) {
    if (line == "ABORT") return EvCiphertext::abort();
    std::istringstream is(line);
    std::string tag, bit, hex;
    if (!(is >> tag >> bit >> hex) || tag != "EV" || (bit != "0" && bit != "1"))
        throw ParseError("bad EV ciphertext line: " + line);
    EvCiphertext ct;
    ct.ct1 = bit == "1";
    ct.ct2 = BitString::from_hex(hex, sig_bits);
    return ct;
}

std::string comp_ciphertext_line(const CompCiphertext& ct) {
    if (ct.aborted) return "ABORT";
    std::string block = ct.quantum->serialize();
    std::replace(block.begin(), block.end(), '\n', '|');
    return "COMP " + block + " " + ct.r0.to_hex() + " " + ct.r1.to_hex();
}

CompCiphertext parse_comp_ciphertext_line(const std::string& line, std::size_t lambda) {
    if (line == "ABORT") return CompCiphertext::abort();
    if (line.rfind("COMP ", 0) != 0) throw ParseError("bad COMP ciphertext line: " + line);
    auto r1_pos = line.rfind(' ');
    auto r0_pos = line.rfind(' ', r1_pos - 1);
    if (r1_pos == std::string::npos || r0_pos == std::string::npos || r0_pos <= 5)
        throw ParseError("bad COMP ciphertext line: " + line);
    std::string block = line.substr(5, r0_pos - 5);
    std::replace(block.begin(), block.end(), '|', '\n');
    CompCiphertext ct;
    ct.quantum = SparseState::deserialize(block);
    ct.r0 = BitString::from_hex(line.substr(r0_pos + 1, r1_pos - r0_pos - 1), lambda);
    ct.r1 = BitString::from_hex(line.substr(r1_pos + 1), lambda);
    return ct;
}

void write_frame(std::ostream& os, const std::string& payload) {
    uint32_t len = uint32_t(payload.size());
    unsigned char hdr[4] = {(unsigned char)(len >> 24), (unsigned char)(len >> 16),
                            (unsigned char)(len >> 8), (unsigned char)len};
    os.write(reinterpret_cast<const char*>(hdr), 4);
    os.write(payload.data(), std::streamsize(payload.size()));
}

std::string read_frame(std::istream& is, std::size_t frame_index) {
    unsigned char hdr[4];
    if (!is.read(reinterpret_cast<char*>(hdr), 4))
        throw ParseError("truncated header at frame " + std::to_string(frame_index));
    uint32_t len = (uint32_t(hdr[0]) << 24) | (uint32_t(hdr[1]) << 16) |
                   (uint32_t(hdr[2]) << 8) | uint32_t(hdr[3]);
    std::string payload(len, '\0');
    if (len && !is.read(payload.data(), len))
        throw ParseError("truncated payload at frame " + std::to_string(frame_index));
    return payload;
}

std::string pk_to_string(const QkdClassicalPk& pk) {
    return pk.vk0.to_hex() + " " + pk.vk1.to_hex();
}

QkdClassicalPk pk_from_string(const OtsParams& params, const std::string& s) {
    auto sp = s.find(' ');
    if (sp == std::string::npos) throw ParseError("bad pk string: " + s);
    return QkdClassicalPk{OtsVerifyKey::from_hex(params, s.substr(0, sp)),
                          OtsVerifyKey::from_hex(params, s.substr(sp + 1))};
}

std::string response_to_string(const QkdParams& params, const Response& resp) {
    std::ostringstream os;
    os << resp.hash.diagonal_seed.to_hex() << "\n" << resp.vk.to_hex() << "\n";
    for (const auto& ct : resp.cts) os << ev_ciphertext_line(ct) << "\n";
    (void)params;
    return os.str();
}

namespace {

std::string key_to_string(const std::optional<BitString>& k) {
    return k ? k->to_hex() : "BOTTOM";
}

std::optional<BitString> key_from_string(const std::string& s, std::size_t lambda) {
    if (s == "BOTTOM") return std::nullopt;
    return BitString::from_hex(s, lambda);
}

} // namespace

void write_transcript(std::ostream& os, const QkdParams& params, const QkdTranscript& t) {
    write_frame(os, "QKDv1");
    std::size_t n = params.instance_count();
    if (t.first.msg.size() != n || t.first.mu.size() != n)
        throw LengthMismatch("write_transcript: first-message size mismatch");
    for (const auto& pk : t.first.msg) write_frame(os, pk_to_string(pk));
    for (const auto& st : t.first.mu) write_frame(os, st.serialize());
    if (t.blocked) {
        write_frame(os, "BLOCKED");
    } else if (!t.resp) {
        write_frame(os, "REJECTED");
    } else {
        write_frame(os, "RESP");
        write_frame(os, t.resp->hash.diagonal_seed.to_hex());
        write_frame(os, t.resp->vk.to_hex());
        for (const auto& ct : t.resp->cts) write_frame(os, ev_ciphertext_line(ct));
        write_frame(os, ""); // reserved empty quantum-response (eta) frame
    }
    write_frame(os, key_to_string(t.k0));
    write_frame(os, key_to_string(t.k1));
}

QkdTranscript read_transcript(std::istream& is, const QkdParams& params) {
    std::size_t fi = 0;
    std::string magic = read_frame(is, fi++);
    if (magic != "QKDv1") throw ParseError("bad transcript magic");
    QkdTranscript t;
    std::size_t n = params.instance_count();
    for (std::size_t i = 0; i < n; ++i)
        t.first.msg.push_back(pk_from_string(params.qpke_ots, read_frame(is, fi++)));
    for (std::size_t i = 0; i < n; ++i)
        t.first.mu.push_back(SparseState::deserialize(read_frame(is, fi++)));
    std::string tag = read_frame(is, fi++);
    if (tag == "BLOCKED") {
        t.blocked = true;
    } else if (tag == "RESP") {
        Response resp{hash_from_seed(params.lambda, BitString::from_hex(
                          read_frame(is, fi), 5 * params.lambda - 1)),
                      OtsVerifyKey::from_hex(params.bob_ots, read_frame(is, fi + 1)),
                      {}};
        fi += 2;
        for (std::size_t i = 0; i < n; ++i)
            resp.cts.push_back(parse_ev_ciphertext_line(read_frame(is, fi++),
                                                        params.qpke_ots.signature_bits()));
        if (!read_frame(is, fi++).empty())
            throw ParseError("expected empty eta frame " + std::to_string(fi - 1));
        t.resp = std::move(resp);
    } else if (tag != "REJECTED") {
        throw ParseError("bad response tag at frame " + std::to_string(fi - 1));
    }
    t.k0 = key_from_string(read_frame(is, fi++), params.lambda);
    t.k1 = key_from_string(read_frame(is, fi++), params.lambda);
    return t;
}

} // namespace qkdsim
