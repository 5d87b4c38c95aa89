// Command-line driver for the protocol experiments. Every run is a pure
// function of (config, seed); reports are stable "name value" lines so
// golden files diff cleanly.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "qkdsim/adversary.hpp"
#include "qkdsim/parallel.hpp"
#include "qkdsim/stats.hpp"
#include "qkdsim/wire.hpp"

using namespace qkdsim;

namespace {

struct RunConfig {
    std::string experiment;
    std::string scenario = "identity";
    std::size_t lambda = 4;
    std::size_t preimage_bits = 8;
    unsigned owf_rounds = 4;
    std::size_t trials = 1000;
    std::string budget = "1024";
    uint64_t seed = 1;
    std::string out_path;
};

struct Report {
    std::vector<std::pair<std::string, std::string>> lines;
    std::vector<std::string> records;
    bool ok = true;

    void add(const std::string& name, const std::string& value) {
        lines.emplace_back(name, value);
    }
    void add(const std::string& name, uint64_t value) {
        add(name, std::to_string(value));
    }
    void add(const std::string& name, double value) {
        std::ostringstream os;
        os.precision(10);
        os << value;
        add(name, os.str());
    }
    void require(const std::string& name, bool cond) {
        add("assert." + name, cond ? std::string("pass") : std::string("fail"));
        ok = ok && cond;
    }
};

uint64_t parse_budget(const std::string& budget, uint64_t full_value) {
    if (budget == "full") return full_value;
    return std::stoull(budget);
}

EvParams toy_ev_params() {
    // Secret-key space 2^9 (two 4-bit coin strings plus d0): enumerable.
    return EvParams{OtsParams{1, 2, /*coin_bits=*/4}};
}

void run_ev_qpke(const RunConfig& cfg, Report& rep) {
    EvParams params{OtsParams{1, cfg.preimage_bits, 32, 1, cfg.owf_rounds}};
    auto chans = catalog();
    const auto& adv = find_channel(chans, cfg.scenario);
    std::vector<int> aborts(cfg.trials), agree(cfg.trials);
    std::vector<std::string> dumps(cfg.trials);
    run_trials(cfg.trials, RngStream(cfg.seed), [&](std::size_t t, RngStream& rng) {
        int m = int(t & 1);
        ExperimentRecord rec = run_exp_everlasting(adv, m, params, rng);
        dumps[t] = rec.dump();
        bool aborted = rec.lines[1].find("ABORT") != std::string::npos;
        aborts[t] = aborted;
        agree[t] = !aborted && rec.lines.size() > 2 &&
                   rec.lines[2] == "dec " + std::to_string(m);
    });
    uint64_t n_abort = 0, n_agree = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        n_abort += uint64_t(aborts[t]);
        n_agree += uint64_t(agree[t]);
    }
    rep.add("trials", uint64_t(cfg.trials));
    rep.add("aborts", n_abort);
    rep.add("agreements", n_agree);
    rep.require("totals_conserved", n_agree + n_abort <= cfg.trials);
    if (cfg.scenario == "identity")
        rep.require("perfect_correctness", n_agree == cfg.trials && n_abort == 0);
    rep.records = std::move(dumps);
}

void run_comp_qpke(const RunConfig& cfg, Report& rep) {
    CompParams params{cfg.lambda,
                      OtsParams{1, cfg.preimage_bits, cfg.lambda, 1, cfg.owf_rounds}};
    auto chans = catalog();
    const auto& adv = find_channel(chans, cfg.scenario);
    std::vector<int> aborts(cfg.trials), agree(cfg.trials), mismatch(cfg.trials);
    std::vector<std::string> dumps(cfg.trials);
    run_trials(cfg.trials, RngStream(cfg.seed), [&](std::size_t t, RngStream& rng) {
        int m = int(t & 1);
        ExperimentRecord rec = run_exp_computational(adv, m, 3, params, rng);
        dumps[t] = rec.dump();
        bool aborted = rec.lines[1].find("ABORT") != std::string::npos;
        aborts[t] = aborted;
        if (!aborted) {
            const std::string& dec = rec.lines[2];
            mismatch[t] = dec == "dec support-mismatch";
            agree[t] = dec == "dec " + std::to_string(m);
        }
    });
    uint64_t n_abort = 0, n_agree = 0, n_mismatch = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        n_abort += uint64_t(aborts[t]);
        n_agree += uint64_t(agree[t]);
        n_mismatch += uint64_t(mismatch[t]);
    }
    rep.add("trials", uint64_t(cfg.trials));
    rep.add("aborts", n_abort);
    rep.add("agreements", n_agree);
    rep.add("support_mismatches", n_mismatch);
    if (cfg.scenario == "identity")
        rep.require("decrypts_with_certainty", n_agree == cfg.trials);
    rep.records = std::move(dumps);
}

void run_qkd(const RunConfig& cfg, Report& rep) {
    QkdParams params = QkdParams::standard(cfg.lambda, cfg.preimage_bits, 4);
    auto chans = catalog();
    const auto& adv = find_channel(chans, cfg.scenario);
    std::vector<int> agree(cfg.trials), rejects(cfg.trials), silent(cfg.trials);
    std::vector<std::string> dumps(cfg.trials);
    run_trials(cfg.trials, RngStream(cfg.seed), [&](std::size_t t, RngStream& rng) {
        QkdSecOutcome keys;
        ExperimentRecord rec = run_qkdsec(adv, params, rng, &keys);
        dumps[t] = rec.dump();
        if (!keys.k1) {
            rejects[t] = 1;
        } else if (keys.k0 && *keys.k0 == *keys.k1) {
            agree[t] = 1;
        } else {
            silent[t] = 1; // Alice accepted a key Bob does not hold
        }
    });
    uint64_t n_agree = 0, n_reject = 0, n_silent = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        n_agree += uint64_t(agree[t]);
        n_reject += uint64_t(rejects[t]);
        n_silent += uint64_t(silent[t]);
    }
    rep.add("sessions", uint64_t(cfg.trials));
    rep.add("key_agreements", n_agree);
    rep.add("rejections", n_reject);
    rep.add("silent_mismatches", n_silent);
    rep.require("totals_conserved", n_agree + n_reject + n_silent == cfg.trials);
    if (cfg.scenario == "identity")
        rep.require("all_sessions_agree", n_agree == cfg.trials);
    rep.records = std::move(dumps);
}

void run_appendix_attack(const RunConfig& cfg, Report& rep) {
    EvParams params = toy_ev_params();
    uint64_t keyspace = uint64_t(1) << (2 * params.ots.coin_bits + 1);
    uint64_t budget = parse_budget(cfg.budget, 128 * keyspace);
    uint64_t success = 0, correct = 0, total_iters = 0;
    RngStream base(cfg.seed);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        RngStream rng = base.split(t);
        EvSecretKey sk = ev_skgen(params, rng);
        EvPublicKey pk = ev_pkgen(params, sk);
        auto hit = keysearch_attack(pk.vk0, pk.vk1, params, budget, rng);
        if (!hit) continue;
        ++success;
        total_iters += hit->iterations;
        int m = int(t & 1);
        EvCiphertext ct = ev_enc(hit->pk_star.rho, pk, m, rng);
        if (!ct.aborted && ev_dec(hit->sk_star, ct) == m) ++correct;
    }
    rep.add("runs", uint64_t(cfg.trials));
    rep.add("budget", budget);
    rep.add("keyspace", keyspace);
    rep.add("successes", success);
    rep.add("correct_decryptions", correct);
    if (success)
        rep.add("mean_iterations", double(total_iters) / double(success));
    if (cfg.budget == "full") {
        rep.require("always_succeeds", success == cfg.trials);
        rep.require("always_decrypts", correct == cfg.trials);
    }
}

void run_extractor(const RunConfig& cfg, Report& rep) {
    // Exhaustive universality at lambda = 2: every seed of the 2^9-member
    // Toeplitz family, collision probability per pair must be <= 1/4.
    std::size_t lam = 2;
    std::size_t seed_bits = 5 * lam - 1;
    RngStream rng(cfg.seed);
    double worst = 0;
    for (std::size_t pair = 0; pair < 50; ++pair) {
        BitString x = rng.bits(4 * lam), y = rng.bits(4 * lam);
        if (x == y) continue;
        uint64_t coll = 0;
        for (uint64_t s = 0; s < (uint64_t(1) << seed_bits); ++s) {
            ToeplitzHash h{lam, BitString::from_index(s, seed_bits)};
            if (hash_eval(h, x) == hash_eval(h, y)) ++coll;
        }
        worst = std::max(worst, double(coll) / double(uint64_t(1) << seed_bits));
    }
    rep.add("universality_worst_pair", worst);
    rep.require("universality_bound", worst <= 0.25 + 1e-12);

    // Key uniformity over fresh QKD sessions.
    QkdParams params = QkdParams::standard(cfg.lambda, cfg.preimage_bits, 4);
    std::vector<std::string> keys(cfg.trials);
    run_trials(cfg.trials, RngStream(cfg.seed ^ 0x5eedULL), [&](std::size_t t, RngStream& r) {
        auto [first, alice] = qkd_first(params, r);
        SecondResult second = qkd_second(first.msg, first.mu, params, r);
        keys[t] = second.outcome.key ? second.outcome.key->to_hex() : "BOTTOM";
    });
    DistTable counts;
    for (uint64_t v = 0; v < (uint64_t(1) << cfg.lambda); ++v)
        counts.entries[BitString::from_index(v, cfg.lambda).to_hex()] = 0;
    for (const auto& k : keys) counts.add(k);
    double p = chi_square_uniform(counts);
    rep.add("key_uniformity_p", p);
    rep.require("key_uniformity", p > 0.001);
}

void run_ots_forgery(const RunConfig& cfg, Report& rep) {
    OtsParams params{1, cfg.preimage_bits, 32, 1, cfg.owf_rounds};
    uint64_t budget = parse_budget(cfg.budget, uint64_t(1) << cfg.preimage_bits);
    std::vector<int> forged(cfg.trials);
    run_trials(cfg.trials, RngStream(cfg.seed), [&](std::size_t t, RngStream& rng) {
        auto kp = sgen(params, rng.bits(params.coin_bits));
        BitString m(1);
        m.set(0, int(t & 1));
        OtsSignature sig = sign(kp.sk, m);
        // Strong forgery game: any valid (m*, sigma*) != (m, sigma) wins.
        BitString other(1);
        other.set(0, 1 - m.get(0));
        auto f = brute_force_forge(kp.vk, other, budget);
        if (f && ver(kp.vk, other, *f)) {
            forged[t] = 1;
            return;
        }
        auto g = brute_force_forge(kp.vk, m, budget);
        if (g && !(*g == sig) && ver(kp.vk, m, *g)) forged[t] = 1;
    });
    uint64_t n_forged = 0;
    for (int f : forged) n_forged += uint64_t(f);
    rep.add("trials", uint64_t(cfg.trials));
    rep.add("budget", budget);
    rep.add("forgeries", n_forged);
    rep.add("forgery_rate", double(n_forged) / double(cfg.trials));
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("bad config line: " + line);
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "experiment") cfg.experiment = val;
        else if (key == "scenario") cfg.scenario = val;
        else if (key == "lambda") cfg.lambda = std::stoul(val);
        else if (key == "preimage-bits") cfg.preimage_bits = std::stoul(val);
        else if (key == "owf-rounds") cfg.owf_rounds = unsigned(std::stoul(val));
        else if (key == "trials") cfg.trials = std::stoul(val);
        else if (key == "budget") cfg.budget = val;
        else if (key == "seed") cfg.seed = std::stoull(val);
        else if (key == "out") cfg.out_path = val;
        else throw std::runtime_error("unknown config key: " + key);
    }
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("QKDSIM_SEED")) cfg.seed = std::stoull(env);

    CLI::App app{"Exact desk-scale simulator for tamper-robust quantum "
                 "public-key encryption and two-message key distribution"};
    std::string config_file;
    app.add_option("--config", config_file, "key=value config file");
    app.add_option("--experiment", cfg.experiment,
                   "one of: ev-qpke, comp-qpke, qkd, appendix-attack, extractor, ots-forgery")
        ->required(false);
    app.add_option("--scenario", cfg.scenario, "adversary channel name");
    app.add_option("--lambda", cfg.lambda, "security parameter");
    app.add_option("--preimage-bits", cfg.preimage_bits, "Lamport preimage bits");
    app.add_option("--owf-rounds", cfg.owf_rounds, "mixing rounds of the toy OWF");
    app.add_option("--trials", cfg.trials, "number of trials / sessions");
    app.add_option("--budget", cfg.budget, "search budget (number or 'full')");
    app.add_option("--seed", cfg.seed, "root RNG seed");
    app.add_option("--out", cfg.out_path, "write report + records to this file");
    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_file.empty()) apply_config_file(config_file, cfg);
        if (cfg.experiment.empty())
            throw std::runtime_error("--experiment is required (via flag or config)");

        Report rep;
        rep.add("experiment", cfg.experiment);
        rep.add("scenario", cfg.scenario);
        rep.add("seed", cfg.seed);
        if (cfg.experiment == "ev-qpke") run_ev_qpke(cfg, rep);
        else if (cfg.experiment == "comp-qpke") run_comp_qpke(cfg, rep);
        else if (cfg.experiment == "qkd") run_qkd(cfg, rep);
        else if (cfg.experiment == "appendix-attack") run_appendix_attack(cfg, rep);
        else if (cfg.experiment == "extractor") run_extractor(cfg, rep);
        else if (cfg.experiment == "ots-forgery") run_ots_forgery(cfg, rep);
        else throw std::runtime_error("unknown experiment: " + cfg.experiment);

        std::ostringstream report;
        for (const auto& [name, value] : rep.lines)
            report << name << " " << value << "\n";
        std::cout << report.str();
        if (!cfg.out_path.empty()) {
            std::ofstream out(cfg.out_path);
            if (!out) throw std::runtime_error("cannot open output file: " + cfg.out_path);
            out << report.str();
            for (const auto& r : rep.records) out << "record-begin\n" << r << "record-end\n";
        }
        return rep.ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
