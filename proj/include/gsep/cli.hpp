#pragma once

#include "json.hpp"

#include <iosfwd>

namespace gsep::cli {

enum ExitCode : int {
    kSeparable = 0,
    kEntangled = 1,
    kInvalidInput = 2,
    kUnphysical = 3,
};

/// Exit status implied by a `check` report: 3 unphysical, 1 entangled
/// (classification or scaling violation), 0 otherwise.
int exit_code_for(const nlohmann::json &report);

/// Entry point shared by the gsep binary and the tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gsep::cli
