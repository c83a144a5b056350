#pragma once

#include <stdexcept>
#include <string>

namespace forge {

// All recoverable failures carry a stable machine-readable code
// ("not-minimal", "apery-bound-exceeded", ...) plus a human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace forge
