#include "qkdsim/adversary.hpp"

#include <algorithm>
#include <sstream>

#include "qkdsim/wire.hpp"

namespace qkdsim {

std::string AdvInternal::dump() const {
    std::ostringstream os;
    for (const auto& n : notes) os << "note " << n << "\n";
    for (const auto& s : states) {
        std::string block = s.serialize();
        std::replace(block.begin(), block.end(), '\n', '|');
        os << "state " << block << "\n";
    }
    return os.str();
}

std::string ExperimentRecord::dump() const {
    std::ostringstream os;
    os << "scenario " << scenario << "\n";
    os << "seed " << seed << "\n";
    for (const auto& l : lines) os << l << "\n";
    os << "internal-begin\n" << internal.dump() << "internal-end\n";
    return os.str();
}

ExperimentRecord run_exp_everlasting(const AdversaryChannel& adv, int m,
                                     const EvParams& params, RngStream& rng) {
    ExperimentRecord rec{adv.name + "/ev", rng.seed(), {}, {}};
    EvSecretKey sk = ev_skgen(params, rng);
    EvPublicKey pk = ev_pkgen(params, sk);

    std::vector<std::string> classical = {pk.vk0.to_hex(), pk.vk1.to_hex()};
    std::vector<SparseState> quantum = {pk.rho};
    FirstFlow flow{classical, quantum};
    RngStream adv_rng = rng.split(0xadaULL);
    if (adv.tamper_first) adv.tamper_first(flow, rec.internal, adv_rng);

    EvCiphertext ct = ev_enc(quantum[0], pk, m, rng);
    rec.lines.push_back("message " + std::to_string(m));
    rec.lines.push_back("ct " + ev_ciphertext_line(ct));
    if (!ct.aborted)
        rec.lines.push_back("dec " + std::to_string(ev_dec(sk, ct)));
    return rec;
}

ExperimentRecord run_exp_computational(const AdversaryChannel& adv, int m,
                                       std::size_t n, const CompParams& params,
                                       RngStream& rng) {
    if (n < 1) throw std::invalid_argument("run_exp_computational: n >= 1 required");
    ExperimentRecord rec{adv.name + "/comp", rng.seed(), {}, {}};
    CompSecretKey sk = comp_skgen(params.lambda, rng);
    std::vector<CompPublicKey> pks;
    std::vector<std::string> classical;
    std::vector<SparseState> quantum;
    for (std::size_t i = 0; i < n; ++i) {
        pks.push_back(comp_pkgen(params, sk, rng));
        classical.push_back(pks.back().vk0.to_hex() + " " + pks.back().vk1.to_hex() +
                            " " + pks.back().r0.to_hex() + " " + pks.back().r1.to_hex());
        quantum.push_back(pks.back().rho);
    }
    FirstFlow flow{classical, quantum};
    RngStream adv_rng = rng.split(0xadaULL);
    if (adv.tamper_first) adv.tamper_first(flow, rec.internal, adv_rng);

    CompCiphertext ct = comp_enc(quantum[0], pks[0], m, rng);
    rec.lines.push_back("message " + std::to_string(m));
    rec.lines.push_back("ct " + comp_ciphertext_line(ct));
    if (!ct.aborted) {
        auto out = comp_dec(params, sk, ct, rng);
        rec.lines.push_back(out == CompDecOutcome::SupportMismatch
                                ? "dec support-mismatch"
                                : "dec " + std::to_string(out == CompDecOutcome::Bit1));
    }
    return rec;
}

ExperimentRecord run_qkdsec(const AdversaryChannel& adv, const QkdParams& params,
                            RngStream& rng, QkdSecOutcome* outcome) {
    ExperimentRecord rec{adv.name + "/qkd", rng.seed(), {}, {}};
    auto [first, alice] = qkd_first(params, rng);

    std::vector<std::string> classical;
    for (const auto& pk : first.msg) classical.push_back(pk_to_string(pk));
    std::vector<SparseState> quantum = first.mu;
    FirstFlow flow1{classical, quantum};
    RngStream adv_rng = rng.split(0xadaULL);
    if (adv.tamper_first) adv.tamper_first(flow1, rec.internal, adv_rng);

    SecondResult second = qkd_second(first.msg, quantum, params, rng);
    QkdSecOutcome keys;
    if (!second.resp) {
        keys.k0 = std::nullopt;
        keys.k1 = std::nullopt;
        rec.lines.push_back("second REJECTED");
    } else {
        keys.k0 = second.outcome.key;
        Response resp = *second.resp;
        SecondFlow flow2{&resp, false};
        if (adv.tamper_second) adv.tamper_second(flow2, rec.internal, adv_rng);
        if (flow2.blocked) {
            keys.k1 = std::nullopt;
            rec.lines.push_back("second BLOCKED");
        } else {
            keys.k1 = qkd_decode(alice, params, resp).key;
        }
    }
    auto key_str = [](const std::optional<BitString>& k) {
        return k ? k->to_hex() : std::string("BOTTOM");
    };
    rec.lines.push_back("k0 " + key_str(keys.k0));
    rec.lines.push_back("k1 " + key_str(keys.k1));
    if (outcome) *outcome = keys;
    return rec;
}

std::optional<KeysearchResult> keysearch_attack(const OtsVerifyKey& vk0,
                                                const OtsVerifyKey& vk1,
                                                const EvParams& params,
                                                uint64_t budget, RngStream& rng) {
    for (uint64_t it = 1; it <= budget; ++it) {
        EvSecretKey sk_star = ev_skgen(params, rng);
        if (sk_star.vk0 == vk0 && sk_star.vk1 == vk1) {
            EvPublicKey pk_star = ev_pkgen(params, sk_star);
            return KeysearchResult{std::move(sk_star), std::move(pk_star), it};
        }
    }
    return std::nullopt;
}

namespace {

BitString garbage_string(std::size_t n, RngStream& rng) {
    BitString x = rng.bits(n);
    x.set(0, 1); // land on the 1-branch with a (w.h.p.) invalid signature
    return x;
}

} // namespace

std::vector<AdversaryChannel> catalog(uint64_t keysearch_budget,
                                      std::optional<EvParams> keysearch_params) {
    std::vector<AdversaryChannel> chans;

    chans.push_back({"identity", false, 0, nullptr, nullptr});

    chans.push_back(
        {"measure_resend", false, 0,
         [](FirstFlow& f, AdvInternal& internal, RngStream& rng) {
             for (auto& st : f.quantum) {
                 BitString outcome = measure_computational(st, rng);
                 internal.notes.push_back("measured " + outcome.to_bit_string());
                 st = make_basis(outcome);
             }
         },
         nullptr});

    chans.push_back(
        {"substitute_basis_state", false, 0,
         [](FirstFlow& f, AdvInternal& internal, RngStream& rng) {
             (void)rng;
             // Keep the first term of each register: a valid basis state,
             // so the projector still accepts.
             for (auto& st : f.quantum) {
                 BitString kept = st.terms()[0].basis;
                 internal.notes.push_back("substituted " + kept.to_bit_string());
                 st = make_basis(kept);
             }
         },
         nullptr});

    chans.push_back(
        {"substitute_garbage", false, 0,
         [](FirstFlow& f, AdvInternal& internal, RngStream& rng) {
             (void)internal;
             for (auto& st : f.quantum)
                 st = make_basis(garbage_string(st.n_qubits(), rng));
         },
         nullptr});

    chans.push_back(
        {"flip_ciphertext_bit", /*tampers_classical=*/true, 0, nullptr,
         [](SecondFlow& f, AdvInternal& internal, RngStream& rng) {
             (void)internal;
             if (!f.resp || f.resp->cts.empty()) return;
             auto& ct = f.resp->cts[std::size_t(rng.below(f.resp->cts.size()))];
             if (ct.aborted) return;
             uint64_t pos = rng.below(1 + ct.ct2.size());
             if (pos == 0) {
                 ct.ct1 ^= 1;
             } else {
                 ct.ct2.set(std::size_t(pos - 1), ct.ct2.get(std::size_t(pos - 1)) ^ 1);
             }
         }});

    chans.push_back({"block_second_message", false, 0, nullptr,
                     [](SecondFlow& f, AdvInternal&, RngStream&) { f.blocked = true; }});

    chans.push_back(
        {"keysearch_wrapper", false, keysearch_budget,
         [keysearch_budget, keysearch_params](FirstFlow& f, AdvInternal& internal,
                                              RngStream& rng) {
             // Only meaningful against a single everlasting instance whose
             // params are known; otherwise the flow passes through untouched.
             if (!keysearch_params || f.classical.size() != 2 || f.quantum.size() != 1)
                 return;
             OtsVerifyKey vk0 = OtsVerifyKey::from_hex(keysearch_params->ots, f.classical[0]);
             OtsVerifyKey vk1 = OtsVerifyKey::from_hex(keysearch_params->ots, f.classical[1]);
             auto hit = keysearch_attack(vk0, vk1, *keysearch_params, keysearch_budget, rng);
             if (!hit) {
                 internal.notes.push_back("keysearch exhausted budget " +
                                          std::to_string(keysearch_budget));
                 return;
             }
             internal.notes.push_back("keysearch iterations " +
                                      std::to_string(hit->iterations));
             internal.notes.push_back("keysearch d0 " + std::to_string(hit->sk_star.d0));
             internal.notes.push_back(
                 "keysearch sigdiff " +
                 (hit->sk_star.sigma0.flat() ^ hit->sk_star.sigma1.flat()).to_hex());
             f.quantum[0] = hit->pk_star.rho;
         },
         nullptr});

    return chans;
}

const AdversaryChannel& find_channel(const std::vector<AdversaryChannel>& chans,
                                     const std::string& name) {
    for (const auto& c : chans)
        if (c.name == name) return c;
    throw std::invalid_argument("unknown scenario: " + name);
}

} // namespace qkdsim
