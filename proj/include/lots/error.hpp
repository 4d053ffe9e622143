#pragma once

#include <stdexcept>
#include <string>

namespace lots {

// Error taxonomy shared by the library and the CLI exit codes:
// Parse = 2, Validation = 3, Usage = 4, Io = 5.
enum class ErrorKind { Parse, Validation, Usage, Io };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error parse_error(const std::string& msg) { return Error(ErrorKind::Parse, msg); }
inline Error validation_error(const std::string& msg) { return Error(ErrorKind::Validation, msg); }
inline Error usage_error(const std::string& msg) { return Error(ErrorKind::Usage, msg); }
inline Error io_error(const std::string& msg) { return Error(ErrorKind::Io, msg); }

} // namespace lots
