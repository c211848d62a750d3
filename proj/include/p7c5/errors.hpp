#pragma once

#include <stdexcept>
#include <string>

namespace p7c5 {

// Bad user input: malformed graphs, out-of-range vertices, unknown names.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested data that is not shipped with the build (e.g. figure graphs
// whose adjacency tables are absent from the data file).
class unsupported_error : public input_error {
public:
    explicit unsupported_error(const std::string& what) : input_error(what) {}
};

// An exact procedure was asked to run above its configured size cap.
class size_limit_error : public std::runtime_error {
public:
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee this library relies on failed at runtime.  Seeing
// one of these on a graph that genuinely belongs to the advertised class is
// a bug (either here or in the theory) and test suites treat it as such.
class structure_error : public std::runtime_error {
public:
    explicit structure_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace p7c5
