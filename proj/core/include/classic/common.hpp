#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace classic {

/// How attributes are interpreted: as partial functions or as total ones.
enum class Semantics { Partial, Total };

std::string_view to_string(Semantics s);

/// An operation was asked to work outside its fragment, e.g. total-attribute
/// reasoning on a concept that is not in the same-as/conjunction fragment.
class SemanticModeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An invariant of the implementation was violated. Never expected.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace classic
