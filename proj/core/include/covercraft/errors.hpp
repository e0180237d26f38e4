#pragma once

#include <stdexcept>
#include <string>

namespace covercraft {

// Raised when an exhaustive 2^n operation is asked to run above its
// configured length cap.  The message names the cap so callers can
// surface it verbatim.
class limit_error : public std::runtime_error {
public:
    limit_error(unsigned n, unsigned limit)
        : std::runtime_error("exhaustive operation refused: n=" + std::to_string(n) +
                             " exceeds the configured limit " + std::to_string(limit)),
          n_(n),
          limit_(limit) {}

    unsigned n() const noexcept { return n_; }
    unsigned limit() const noexcept { return limit_; }

private:
    unsigned n_;
    unsigned limit_;
};

// Raised by strict-mode constructions when a theorem hypothesis fails;
// the message names the failed hypothesis and the offending values.
class hypothesis_error : public std::runtime_error {
public:
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the code text parser with a 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace covercraft
