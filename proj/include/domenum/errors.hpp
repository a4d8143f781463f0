#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domenum {

using vertex_t = std::uint32_t;

/// Base class for every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_vertex : public error {
public:
    using error::error;
};

class invalid_edge : public error {
public:
    using error::error;
};

class invalid_partition : public error {
public:
    using error::error;
};

/// An input violates the precondition of an operation. The witness, when
/// present, is a vertex sequence certifying the violation (a chordless
/// cycle, an induced path, an isolated vertex, ...).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what, std::vector<vertex_t> witness = {})
        : error(what), witness_(std::move(witness)) {}

    const std::vector<vertex_t>& witness() const noexcept { return witness_; }

private:
    std::vector<vertex_t> witness_;
};

/// A hypergraph holds an empty hyperedge, so no transversal exists.
class no_transversal : public precondition_error {
public:
    using precondition_error::precondition_error;
};

/// A graph has an isolated vertex, so no total dominating set exists.
class no_total_dominating_set : public precondition_error {
public:
    using precondition_error::precondition_error;
};

/// A graph is disconnected (or empty), so no connected dominating set exists.
class no_connected_dominating_set : public precondition_error {
public:
    using precondition_error::precondition_error;
};

class degenerate_input : public precondition_error {
public:
    using precondition_error::precondition_error;
};

/// Raised when an internal postcondition fails; always a bug upstream.
class contract_violation : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace domenum
