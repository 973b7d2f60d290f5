#pragma once

#include <stdexcept>
#include <string>

namespace grovelab {

/// Malformed or out-of-domain user input.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computed result contradicted an invariant the library relies on.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace grovelab
