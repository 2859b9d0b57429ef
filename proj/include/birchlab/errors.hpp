#pragma once

#include <stdexcept>
#include <string>

namespace birchlab {

// Machine-readable failure codes surfaced through reports and exit status.
enum class ErrorCode {
    config_parse = 2,
    precondition = 3,
    budget_exceeded = 4,
    certification_failure = 5,
    window_insufficient = 6,
    congruence_failure = 7,
    precision_exhausted = 8,
    internal = 9,
};

class BirchError : public std::runtime_error {
  public:
    BirchError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }
    const char* code_name() const {
        switch (code_) {
            case ErrorCode::config_parse: return "config_parse";
            case ErrorCode::precondition: return "precondition";
            case ErrorCode::budget_exceeded: return "budget_exceeded";
            case ErrorCode::certification_failure: return "certification_failure";
            case ErrorCode::window_insufficient: return "window_insufficient";
            case ErrorCode::congruence_failure: return "congruence_failure";
            case ErrorCode::precision_exhausted: return "precision_exhausted";
            case ErrorCode::internal: return "internal";
        }
        return "unknown";
    }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw BirchError(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace birchlab
