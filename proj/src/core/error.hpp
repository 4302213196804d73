#ifndef FUSIONLENS_CORE_ERROR_HPP
#define FUSIONLENS_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fusionlens {

enum class ErrorCode {
    invalid_argument,  // malformed input or configuration
    parse,             // unparseable file contents
    io,                // filesystem failure
    backend,           // backend rejected the request
    transport,         // remote backend unreachable; safe to retry
    data,              // statistical precondition violated
    single_sample,     // corpus-level statistic requested on < 2 documents
    undefined_stat,    // zero-variance correlation or effect size
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    bool retriable() const { return code_ == ErrorCode::transport; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace fusionlens

#endif
