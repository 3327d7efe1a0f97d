#pragma once

#include <stdexcept>
#include <string>

namespace k4cert {

// Thrown when a structural invariant that the construction guarantees for
// valid inputs turns out false at runtime. Reaching one of these means a bug
// in this library, never a recoverable input condition.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool condition, const std::string& what) {
    if (!condition) throw internal_error("invariant violated: " + what);
}

} // namespace detail

} // namespace k4cert
