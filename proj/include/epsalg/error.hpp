#pragma once

#include <stdexcept>
#include <string>

namespace epsalg {

/// Error category, mapped to CLI exit codes by the front end.
enum class ErrorKind {
    validation,  ///< a mathematical constraint failed (exit 1)
    parse,       ///< malformed input text or config (exit 2)
    conductor,   ///< value not representable at the session conductor (exit 3)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), m_kind(kind) {}
    ErrorKind kind() const noexcept { return m_kind; }

private:
    ErrorKind m_kind;
};

[[noreturn]] inline void fail_validation(const std::string& what) { throw Error(ErrorKind::validation, what); }
[[noreturn]] inline void fail_parse(const std::string& what) { throw Error(ErrorKind::parse, what); }
[[noreturn]] inline void fail_conductor(const std::string& what) { throw Error(ErrorKind::conductor, what); }

}  // namespace epsalg
