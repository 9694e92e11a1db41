#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zhawkes {

// Bad key, bad value or missing key in a run configuration file.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed data file; carries the 1-based offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// SDE state became non-finite; carries the step index where it happened.
class NonfiniteState : public std::runtime_error {
public:
    NonfiniteState(const std::string& what, std::size_t step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

}  // namespace zhawkes
