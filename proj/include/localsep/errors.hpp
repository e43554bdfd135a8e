#pragma once

#include <stdexcept>
#include <string>

namespace localsep {

/// Malformed or unsupported input data (bad ids, parallel edges, parse failures).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A result that the algorithms guarantee for well-formed inputs could not be produced.
class DataIntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace localsep
