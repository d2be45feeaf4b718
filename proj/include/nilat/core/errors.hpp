#pragma once

#include <stdexcept>
#include <string>

namespace nilat {

// Malformed data: bad indices, wrong sizes, unparsable numbers.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Well-formed data violating an operation's mathematical precondition.
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

// Input that is not of the structural type an operation classifies.
struct StructuralError : std::domain_error {
  using std::domain_error::domain_error;
};

inline void require_input(bool ok, const std::string &msg) {
  if (!ok) throw InputError(msg);
}

inline void require(bool ok, const std::string &msg) {
  if (!ok) throw PreconditionError(msg);
}

} // namespace nilat
