#pragma once

#include <stdexcept>
#include <string>

namespace gcoh {

// Bad user-supplied input (unknown names, malformed data, unsupported parameters).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Input that parses but is mathematically inconsistent (invalid group table,
// non-equivariant map, complex that fails d∘d = 0, ...).
struct inconsistency_error : std::runtime_error {
    explicit inconsistency_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed the library's size guards.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gcoh
