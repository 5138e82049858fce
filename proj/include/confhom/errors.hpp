#pragma once

#include <stdexcept>
#include <string>

namespace confhom {

// Malformed input documents (JSON syntax, bad coefficients, unknown names).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally invalid algebraic data (broken invariants of a ring or model).
struct model_error : std::runtime_error {
    explicit model_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation was requested outside the domain it is defined on.
struct compute_error : std::runtime_error {
    explicit compute_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace confhom
