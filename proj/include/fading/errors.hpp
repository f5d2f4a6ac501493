#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fading {

// Vertex id outside [0, n).
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Invalid size, length or option passed to an operation.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Caller handed in a colouring that breaks the operation's precondition.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// Input text could not be decoded. position is a byte offset for graph6
// and a 1-based line number for edge lists.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// The naive oracle refuses graphs above its size cap.
struct OracleRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fading
