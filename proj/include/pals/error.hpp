#pragma once

#include <stdexcept>
#include <string>

namespace pals {

enum class ErrorKind {
    Validation,  // bad parameters or inconsistent input data
    NotFound,    // bounded search exhausted
    Format,      // malformed file (magic, version, syntax)
    Rekey,       // message-key counter exhausted
    Io,          // filesystem failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace pals
