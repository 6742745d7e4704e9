#pragma once

#include <stdexcept>
#include <string>

namespace polyred {

// Raised when an internal invariant breaks; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  explicit InternalError(std::string const& what_) : std::logic_error(what_) {}
};

inline void internal_check(bool ok, char const* what) {
  if (!ok) throw InternalError(what);
}

}  // namespace polyred
