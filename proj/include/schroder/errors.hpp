#pragma once

#include <stdexcept>
#include <string>

namespace schroder {

// Input text could not be tokenized (bad character, malformed number, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Step sequence is well-formed text but violates the path boundary conditions.
class NotAPathError : public std::runtime_error {
public:
    NotAPathError(const std::string& what, int step_index)
        : std::runtime_error(what), step_index(step_index) {}
    int step_index;  // 1-based index of the first violating step
};

// Permutation lies outside the class an operation is defined on.
class NotInClassError : public std::runtime_error {
public:
    explicit NotInClassError(const std::string& what) : std::runtime_error(what) {}
};

class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedQueryError : public std::runtime_error {
public:
    explicit UnsupportedQueryError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownClaimError : public std::runtime_error {
public:
    explicit UnknownClaimError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace schroder
