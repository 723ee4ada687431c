#pragma once

#include <stdexcept>
#include <string>

namespace ctxrec {

/// Malformed input file (bad header, ragged row, bad rating value).
/// `line` is 1-based; 0 means the location is unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Invalid run configuration (unknown model name, bad target context, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

/// A pairwise similarity table was queried for a condition it does not cover.
class MissingEntryError : public std::runtime_error {
public:
    explicit MissingEntryError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace ctxrec
