#pragma once

#include <stdexcept>
#include <string>

namespace eulink {

// Bad or unsupported user input (CLI exit code 2).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A cross-check that can only fail through an implementation bug or a
// violated unconditional identity (CLI exit code 3).
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace eulink
