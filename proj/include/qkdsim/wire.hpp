#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qkdsim/qkd.hpp"
#include "qkdsim/qpke.hpp"

namespace qkdsim {

// --- ciphertext lines -------------------------------------------------------
// "EV <ct1 bit> <ct2 hex>" / "COMP <state block> <r0 hex> <r1 hex>" with the
// state block's newlines folded to '|'; "ABORT" for bottom.

std::string ev_ciphertext_line(const EvCiphertext& ct);
EvCiphertext parse_ev_ciphertext_line(const std::string& line, std::size_t sig_bits);

std::string comp_ciphertext_line(const CompCiphertext& ct);
CompCiphertext parse_comp_ciphertext_line(const std::string& line, std::size_t lambda);

// --- length-prefixed frames -------------------------------------------------
// Each frame is a 4-byte big-endian length followed by the payload bytes.

void write_frame(std::ostream& os, const std::string& payload);
std::string read_frame(std::istream& is, std::size_t frame_index);

// --- QKD session transcripts -------------------------------------------------

struct QkdTranscript {
    FirstMessage first;
    bool blocked = false;              // second message dropped in transit
    std::optional<Response> resp;      // absent when Bob rejected or blocked
    std::optional<BitString> k0, k1;   // derived keys; nullopt = bottom
};

void write_transcript(std::ostream& os, const QkdParams& params, const QkdTranscript& t);
QkdTranscript read_transcript(std::istream& is, const QkdParams& params);

std::string pk_to_string(const QkdClassicalPk& pk);
QkdClassicalPk pk_from_string(const OtsParams& params, const std::string& s);

std::string response_to_string(const QkdParams& params, const Response& resp);

} // namespace qkdsim
