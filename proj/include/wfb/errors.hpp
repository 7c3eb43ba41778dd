#pragma once

#include <stdexcept>
#include <string>

namespace wfb {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input: bad model parameters, out-of-range arguments, wrong degrees.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Connecting maps of a long exact sequence are not forced to vanish.
struct AmbiguousTriangle : Error {
    explicit AmbiguousTriangle(const std::string& msg) : Error(msg) {}
};

// A run of nef_decompose hit a configuration the decomposition lemma excludes
// (pairing <= -2, or a non-orthogonal negative set): the vanishing hypothesis
// H^{>0}(O(D)) = 0 cannot hold for the supplied model.
struct HypothesisViolation : Error {
    explicit HypothesisViolation(const std::string& msg) : Error(msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    size_t offset;
    std::string expected;
    ParseError(size_t off, const std::string& exp)
        : Error("syntax error at offset " + std::to_string(off) + ": expected " + exp),
          offset(off), expected(exp) {}
};

} // namespace wfb
