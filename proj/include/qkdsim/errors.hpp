#pragma once

#include <stdexcept>
#include <string>

namespace qkdsim {

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct EqualBasisStrings : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedTermCount : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooManyQubits : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CoinLengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct AbortCiphertext : std::logic_error {
    using std::logic_error::logic_error;
};

struct LabelMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InsufficientCounts : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qkdsim
