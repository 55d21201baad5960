#pragma once

#include <stdexcept>
#include <string>

namespace qgdef {

enum class ErrorKind {
    Config,       // malformed input or options
    Precondition, // a mathematical hypothesis of the construction fails
    Obstruction,  // a cocycle does not cobound; carries a residual class
    Internal,     // an identity that must hold by construction did not
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what, std::string detail = {})
        : std::runtime_error(what), kind_(kind), detail_(std::move(detail)) {}
    ErrorKind kind() const { return kind_; }
    // Optional machine-readable payload (JSON text), e.g. a residual class.
    const std::string& detail() const { return detail_; }

  private:
    ErrorKind kind_;
    std::string detail_;
};

inline const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::Config: return "config";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Obstruction: return "obstruction";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what, std::string detail = {}) {
    throw Error(kind, what, std::move(detail));
}

inline void check_internal(bool ok, const std::string& what) {
    if (!ok)
        fail(ErrorKind::Internal, what);
}

} // namespace qgdef
