#pragma once

#include <stdexcept>
#include <string>

namespace dreamgen {

// Error category; the CLI maps these onto process exit codes
// (data -> 1, usage -> 2, protocol -> 3).
enum class ErrKind { Data, Usage, Protocol };

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

inline Error data_error(const std::string& msg) { return Error(ErrKind::Data, msg); }
inline Error usage_error(const std::string& msg) { return Error(ErrKind::Usage, msg); }
inline Error protocol_error(const std::string& msg) { return Error(ErrKind::Protocol, msg); }

} // namespace dreamgen
