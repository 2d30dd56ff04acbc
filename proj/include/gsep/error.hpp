#pragma once

#include <stdexcept>
#include <string>

namespace gsep {

enum class ErrorKind {
    dimension,     // odd/mismatched dimensions
    asymmetry,     // matrix not symmetric within tolerance
    mode_count,    // operation restricted to a specific number of modes
    unphysical,    // covariance violates V + (i/2)Omega >= 0
    singular,      // singular covariance or block
    parameter,     // out-of-range constructor argument
    constraint,    // scaling vector outside the semigroup
    optimization,  // no feasible point found
    parse,         // malformed input document
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace gsep
