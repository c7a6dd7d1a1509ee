#pragma once

#include <stdexcept>
#include <string>

namespace trideform {

/// Malformed or invalid user-supplied data (bad file, wrong shape, failed validation).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A computation would need cochain arities or word lengths beyond the configured bound.
class TruncationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside the domain on which it is defined
/// (e.g. a gauge action on a non Maurer-Cartan element).
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace trideform
