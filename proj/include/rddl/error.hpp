#pragma once

#include <stdexcept>
#include <string>

namespace rddl {

struct SourceLocation {
    int line = 0;    // 1-based; 0 means "no location"
    int column = 0;

    bool valid() const { return line > 0; }
    std::string to_string() const {
        return std::to_string(line) + ":" + std::to_string(column);
    }
};

enum class ErrorCode {
    Lexical,
    Syntax,
    Validation,
    Grounding,
    Cycle,
    Evaluation,
    Sampling,
    Relaxation,
    EnvUsage,
    Config,
    Io,
};

const char* error_code_name(ErrorCode code);

class RddlError : public std::runtime_error {
public:
    RddlError(ErrorCode code, std::string message, SourceLocation loc = {})
        : std::runtime_error(format(code, message, loc)),
          code_(code),
          loc_(loc),
          message_(std::move(message)) {}

    ErrorCode code() const { return code_; }
    SourceLocation location() const { return loc_; }
    const std::string& raw_message() const { return message_; }

private:
    static std::string format(ErrorCode code, const std::string& message,
                              SourceLocation loc);

    ErrorCode code_;
    SourceLocation loc_;
    std::string message_;
};

}  // namespace rddl
