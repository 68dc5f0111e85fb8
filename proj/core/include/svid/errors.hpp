#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace svid {

/// Precondition violated: invalid node id, infeasible parameters, empty input.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed input text. Carries the 1-based line number and source name when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0, std::string source = {})
        : std::runtime_error(compose(message, line, source)),
          message_(message),
          source_(std::move(source)),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string& message() const noexcept { return message_; }
    [[nodiscard]] const std::string& source() const noexcept { return source_; }

private:
    std::string message_;
    std::string source_;
    std::size_t line_;

    static std::string compose(const std::string& message, std::size_t line,
                               const std::string& source) {
        std::string out = source;
        if (line != 0) {
            out += (out.empty() ? "line " : ":") + std::to_string(line);
        }
        return out.empty() ? message : out + ": " + message;
    }
};

/// Invalid strategy / simulation / command configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace svid
