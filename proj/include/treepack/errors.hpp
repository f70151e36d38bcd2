#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treepack {

// Bad arguments to an operation (unknown vertex, k out of range, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed serialized input. byte_offset points at the offending byte.
struct FormatError : std::runtime_error {
    std::size_t byte_offset;
    FormatError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
};

// Instance exceeds a configured structural cap (partition enumeration, mask width).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// More objects exist than the caller's enumeration limit.
struct EnumerationOverflow : std::runtime_error {
    std::size_t limit;
    explicit EnumerationOverflow(std::size_t lim)
        : std::runtime_error("enumeration exceeds limit " + std::to_string(lim)),
          limit(lim) {}
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A proven invariant failed at runtime. Never caught internally.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace treepack
