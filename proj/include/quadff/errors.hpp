#pragma once

#include <stdexcept>
#include <string>

namespace quadff {

// A mathematical hypothesis of the requested computation does not hold for
// the given input (d not squarefree, inert infinite place where a geometric
// extension is required, even-degree d outside the supported search regime).
// The CLI maps this to exit code 1.
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded (point-count budget, search degree
// cap with no witness found, continued-fraction step cap). Exit code 1.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed polynomial text. `position` is the byte offset of the first
// offending character; the message already includes it. Exit code 1.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    size_t position;
};

// An internal cross-check failed: a value two independent code paths must
// agree on did not match. Always a bug, never a user error. Exit code 2.
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalCheckError(what);
}

}  // namespace quadff
