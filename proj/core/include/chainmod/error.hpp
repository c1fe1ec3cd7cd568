#pragma once

#include <stdexcept>
#include <string>

namespace chainmod {

// Error taxonomy shared by the library and the CLI exit codes:
// input errors map to exit 2, resource caps to exit 3, and failures of a
// statement the library is supposed to certify ("theorem violations") to
// exit 1. Violations are never swallowed silently.
enum class ErrorKind { Input, CapExceeded, Violation };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    static Error input(const std::string& what) { return Error(ErrorKind::Input, what); }
    static Error cap(const std::string& what) { return Error(ErrorKind::CapExceeded, what); }
    static Error violation(const std::string& what) { return Error(ErrorKind::Violation, what); }

private:
    ErrorKind kind_;
};

}  // namespace chainmod
