#pragma once

#include <stdexcept>
#include <string>

namespace fibzeta {

// Base class for all library failures.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid mathematical input (zero denominator, zeta argument below 2, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// Evaluation requested at a pole (cot at an integer, polygamma at a
// non-positive integer).
class pole_error : public error {
public:
    explicit pole_error(const std::string& what) : error(what) {}
};

// Caller broke an interface contract (parity constraint, mismatched
// cross-check parameters, bad CLI arguments).
class usage_error : public error {
public:
    explicit usage_error(const std::string& what) : error(what) {}
};

// An internal scheme could not reach the requested accuracy.
class precision_error : public error {
public:
    explicit precision_error(const std::string& what) : error(what) {}
};

} // namespace fibzeta
