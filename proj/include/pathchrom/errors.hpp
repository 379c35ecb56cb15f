#pragma once

#include <stdexcept>
#include <string>

namespace pathchrom {

// Bad argument values (degenerate sizes, non-permutations, failed preconditions).
struct invalid_parameter : std::invalid_argument {
    explicit invalid_parameter(const std::string& what) : std::invalid_argument(what) {}
};

// Vertex id outside the ambient graph, or a set over the wrong universe.
struct invalid_vertex : std::invalid_argument {
    explicit invalid_vertex(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed decomposition (tree field not a tree, bag count mismatch, ...).
struct invalid_structure : std::runtime_error {
    explicit invalid_structure(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a size guard and no override was given.
struct size_limit_error : std::runtime_error {
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Text input rejected; carries the 1-based offending line.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace pathchrom
