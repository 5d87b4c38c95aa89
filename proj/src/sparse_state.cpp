#include "qkdsim/sparse_state.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace qkdsim {

SparseState::SparseState(std::size_t n_qubits, std::vector<SparseTerm> terms)
    : n_(n_qubits), terms_(std::move(terms)) {
    if (n_ < 1) throw std::invalid_argument("SparseState: need at least one qubit");
    if (terms_.empty()) throw std::invalid_argument("SparseState: empty term list");
    std::set<BitString> seen;
    for (const auto& t : terms_) {
        if (t.basis.size() != n_)
            throw LengthMismatch("SparseState: term length mismatch");
        if (t.sign != 1 && t.sign != -1)
            throw std::invalid_argument("SparseState: sign must be +1 or -1");
        if (!seen.insert(t.basis).second)
            throw std::invalid_argument("SparseState: duplicate basis string");
    }
}

bool SparseState::operator==(const SparseState& o) const {
    if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
    auto key = [](const SparseState& s) {
        std::vector<std::pair<BitString, int>> v;
        for (const auto& t : s.terms_) v.emplace_back(t.basis, t.sign);
        std::sort(v.begin(), v.end());
        return v;
    };
    return key(*this) == key(o);
}

std::string SparseState::serialize() const {
    std::ostringstream os;
    os << "n=" << n_ << " k=" << terms_.size() << "\n";
    for (const auto& t : terms_)
        os << (t.sign > 0 ? '+' : '-') << ' ' << t.basis.to_bit_string() << "\n";
    return os.str();
}

SparseState SparseState::deserialize(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw ParseError("SparseState: missing header");
    std::size_t n = 0, k = 0;
    if (std::sscanf(header.c_str(), "n=%zu k=%zu", &n, &k) != 2)
        throw ParseError("SparseState: bad header: " + header);
    std::vector<SparseTerm> terms;
    for (std::size_t i = 0; i < k; ++i) {
        std::string line;
        if (!std::getline(is, line) || line.size() != n + 2)
            throw ParseError("SparseState: bad term line");
        int sign = line[0] == '+' ? 1 : line[0] == '-' ? -1 : 0;
        if (sign == 0 || line[1] != ' ')
            throw ParseError("SparseState: bad term line: " + line);
        terms.push_back({BitString::from_bits(line.substr(2)), sign});
    }
    return SparseState(n, std::move(terms));
}

SparseState make_basis(const BitString& x) {
    return SparseState(x.size(), {{x, 1}});
}

SparseState superpose2(const BitString& x0, const BitString& x1, int d0) {
    if (x0.size() != x1.size())
        throw LengthMismatch("superpose2: basis strings of unequal length");
    if (x0 == x1) throw EqualBasisStrings("superpose2: equal basis strings");
    return SparseState(x0.size(), {{x0, 1}, {x1, (d0 & 1) ? -1 : 1}});
}

SparseState apply_z_phase(const SparseState& state, std::size_t qubit_index, int m) {
    if (qubit_index >= state.n_qubits())
        throw IndexOutOfRange("apply_z_phase: qubit index out of range");
    std::vector<SparseTerm> terms = state.terms();
    if (m & 1) {
        for (auto& t : terms)
            if (t.basis.get(qubit_index)) t.sign = -t.sign;
    }
    return SparseState(state.n_qubits(), std::move(terms));
}

ProjectResult project(const SparseState& state, const BasisPredicate& pred, RngStream& rng) {
    if (pred.length != state.n_qubits())
        throw LengthMismatch("project: predicate length mismatch");
    std::vector<SparseTerm> keep;
    for (const auto& t : state.terms())
        if (pred.accepts(t.basis)) keep.push_back(t);
    std::size_t total = state.term_count();
    std::size_t good = keep.size();
    if (good == 0) return {ProjectOutcome::Reject, std::nullopt};
    // Accept with probability good/total; exact via an integer draw.
    if (good < total && rng.below(total) >= good)
        return {ProjectOutcome::Reject, std::nullopt};
    return {ProjectOutcome::Accept, SparseState(state.n_qubits(), std::move(keep))};
}

BitString measure_computational(const SparseState& state, RngStream& rng) {
    std::size_t i = std::size_t(rng.below(state.term_count()));
    return state.terms()[i].basis;
}

BitString measure_hadamard_all(const SparseState& state, RngStream& rng) {
    std::size_t n = state.n_qubits();
    if (state.term_count() == 1) return rng.bits(n);
    if (state.term_count() != 2)
        throw UnsupportedTermCount("measure_hadamard_all: more than two terms");
    const auto& t0 = state.terms()[0];
    const auto& t1 = state.terms()[1];
    int d0 = (t0.sign * t1.sign < 0) ? 1 : 0;
    BitString diff = t0.basis ^ t1.basis;
    // Uniform over the affine set {d : <d, diff> = d0}: fix the first
    // differing coordinate, sample the rest freely.
    std::size_t pivot = 0;
    while (!diff.get(pivot)) ++pivot;
    BitString d = rng.bits(n);
    d.set(pivot, 0);
    d.set(pivot, d.dot(diff) ^ d0);
    return d;
}

std::vector<double> analytic_hadamard_distribution(const SparseState& state) {
    std::size_t n = state.n_qubits();
    if (n > k_dense_max_qubits)
        throw TooManyQubits("analytic_hadamard_distribution: register too large");
    std::size_t dim = std::size_t(1) << n;
    std::vector<double> p(dim, 0.0);
    if (state.term_count() == 1) {
        std::fill(p.begin(), p.end(), 1.0 / double(dim));
        return p;
    }
    if (state.term_count() != 2)
        throw UnsupportedTermCount("analytic_hadamard_distribution: more than two terms");
    const auto& t0 = state.terms()[0];
    const auto& t1 = state.terms()[1];
    int d0 = (t0.sign * t1.sign < 0) ? 1 : 0;
    BitString diff = t0.basis ^ t1.basis;
    double mass = 2.0 / double(dim); // 2^{n-1} outcomes
    for (std::size_t idx = 0; idx < dim; ++idx) {
        BitString d = BitString::from_index(idx, n);
        if (d.dot(diff) == d0) p[idx] = mass;
    }
    return p;
}

BitString sample_hadamard(const SparseState& state, RngStream& rng) {
    if (state.term_count() <= 2) return measure_hadamard_all(state, rng);
    auto dist = dense_hadamard_distribution(dense_from_sparse(state));
    // Inverse-CDF draw on a 53-bit uniform.
    double u = double(rng.next_u64() >> 11) * 0x1p-53;
    double acc = 0.0;
    for (std::size_t idx = 0; idx < dist.size(); ++idx) {
        acc += dist[idx];
        if (u < acc) return BitString::from_index(idx, state.n_qubits());
    }
    return BitString::from_index(dist.size() - 1, state.n_qubits());
}

DenseState dense_from_sparse(const SparseState& state) {
    if (state.n_qubits() > k_dense_max_qubits)
        throw TooManyQubits("dense_from_sparse: register too large");
    std::size_t dim = std::size_t(1) << state.n_qubits();
    DenseState d{state.n_qubits(), std::vector<double>(dim, 0.0)};
    double amp = 1.0 / std::sqrt(double(state.term_count()));
    for (const auto& t : state.terms())
        d.amplitudes[t.basis.to_index()] = t.sign * amp;
    return d;
}

namespace {

std::vector<double> to_distribution(std::vector<double> v, std::size_t n) {
    double norm = std::pow(2.0, -double(n)); // (2^{-n/2})^2
    for (auto& x : v) x = x * x * norm;
    return v;
}

} // namespace

std::vector<double> dense_hadamard_distribution_serial(const DenseState& state) {
    std::vector<double> v = state.amplitudes;
    std::size_t dim = v.size();
    for (std::size_t half = 1; half < dim; half <<= 1) {
        for (std::size_t i = 0; i < dim; i += 2 * half) {
            for (std::size_t j = i; j < i + half; ++j) {
                double a = v[j];
                double b = v[j + half];
                v[j] = a + b;
                v[j + half] = a - b;
            }
        }
    }
    return to_distribution(std::move(v), state.n_qubits);
}

std::vector<double> dense_hadamard_distribution(const DenseState& state) {
    std::vector<double> v = state.amplitudes;
    std::size_t dim = v.size();
    for (std::size_t half = 1; half < dim; half <<= 1) {
#pragma omp parallel for schedule(static) if (dim >= (1u << 12))
        for (long long blk = 0; blk < (long long)(dim / (2 * half)); ++blk) {
            std::size_t i = std::size_t(blk) * 2 * half;
            for (std::size_t j = i; j < i + half; ++j) {
                double a = v[j];
                double b = v[j + half];
                v[j] = a + b;
                v[j + half] = a - b;
            }
        }
    }
    return to_distribution(std::move(v), state.n_qubits);
}

} // namespace qkdsim
