#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mcg {

// Library errors carry a stable machine-readable code (e.g. "LabelArity",
// "NotCarried") plus a human-readable detail string. The CLI maps the code
// straight into its JSON error object and exit status 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& detail) {
    throw Error(std::move(code), detail);
}

} // namespace mcg
