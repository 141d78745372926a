#pragma once

#include <stdexcept>
#include <string>

namespace gdsa {

/// Raised for any violated precondition: bad input files, unknown keys,
/// unresolvable node names, invalid algorithm arguments. The tool layer
/// converts these into error results; they never escape the server loop.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace gdsa
