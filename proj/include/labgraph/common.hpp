#pragma once

#include <stdexcept>
#include <string>

namespace labgraph {

// Error taxonomy mapped to CLI exit codes: config=2, data=3, numeric=4.
enum class ErrorKind { Config, Data, Numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

    static Error config(const std::string& msg) { return Error(ErrorKind::Config, msg); }
    static Error data(const std::string& msg) { return Error(ErrorKind::Data, msg); }
    static Error numeric(const std::string& msg) { return Error(ErrorKind::Numeric, msg); }

private:
    ErrorKind kind_;
};

inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Config: return 2;
        case ErrorKind::Data: return 3;
        case ErrorKind::Numeric: return 4;
    }
    return 1;
}

} // namespace labgraph
