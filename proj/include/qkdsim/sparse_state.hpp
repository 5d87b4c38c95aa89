#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qkdsim/bitstring.hpp"
#include "qkdsim/rng.hpp"

namespace qkdsim {

// Exact pure state supported on a small set of basis strings, all with the
// same magnitude 1/sqrt(#terms) and a sign in {+1,-1}. Normalization is
// structural, so the protocol path never touches floating point.
struct SparseTerm {
    BitString basis;
    int sign; // +1 or -1
};

class SparseState {
public:
    SparseState(std::size_t n_qubits, std::vector<SparseTerm> terms);

    std::size_t n_qubits() const { return n_; }
    const std::vector<SparseTerm>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const SparseState& o) const;

    std::string serialize() const;
    static SparseState deserialize(const std::string& text);

private:
    std::size_t n_;
    std::vector<SparseTerm> terms_;
};

// Total boolean function over basis strings of a declared length.
struct BasisPredicate {
    std::size_t length;
    std::function<bool(const BitString&)> accepts;
};

enum class ProjectOutcome { Accept, Reject };

struct ProjectResult {
    ProjectOutcome outcome;
    std::optional<SparseState> post; // present iff Accept
};

SparseState make_basis(const BitString& x);

// (|x0> + (-1)^{d0} |x1>)/sqrt(2).
SparseState superpose2(const BitString& x0, const BitString& x1, int d0);

// Multiplies each term's sign by (-1)^{m * bit_at(basis, qubit_index)}.
SparseState apply_z_phase(const SparseState& state, std::size_t qubit_index, int m);

// Two-outcome measurement {Pi, Id - Pi} where Pi accepts basis strings
// satisfying pred. On Reject the post-state is absent (callers abort).
ProjectResult project(const SparseState& state, const BasisPredicate& pred, RngStream& rng);

BitString measure_computational(const SparseState& state, RngStream& rng);

// Hadamard-basis measurement of all qubits. Supports 1- and 2-term states
// via the closed-form affine-subspace law; larger states must go through
// the dense backend.
BitString measure_hadamard_all(const SparseState& state, RngStream& rng);

// Routes through measure_hadamard_all when possible, otherwise samples the
// dense Walsh-Hadamard distribution (n_qubits <= n_dense_max).
BitString sample_hadamard(const SparseState& state, RngStream& rng);

// Exact Hadamard-measurement law of a 1- or 2-term state, as a vector of
// 2^n probabilities indexed by BitString::to_index().
std::vector<double> analytic_hadamard_distribution(const SparseState& state);

inline constexpr std::size_t k_dense_max_qubits = 20;

// Brute-force oracle backend.
struct DenseState {
    std::size_t n_qubits;
    std::vector<double> amplitudes; // size 2^n
};

DenseState dense_from_sparse(const SparseState& state);

// Born-rule distribution of measuring H^{(x)n} |state> in the computational
// basis, via an explicit Walsh-Hadamard transform. OpenMP-parallel.
std::vector<double> dense_hadamard_distribution(const DenseState& state);

// Serial reference implementation kept for testing the parallel kernel.
std::vector<double> dense_hadamard_distribution_serial(const DenseState& state);

} // namespace qkdsim
