#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace schottky {

// Domain error with a stable machine-readable code ("HostOverlap",
// "InvalidOrder", ...). The CLI prints the code on stderr and exits 1;
// I/O and parse failures use IoError and exit 2 instead.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

} // namespace schottky
