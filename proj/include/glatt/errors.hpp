#pragma once

#include <stdexcept>

namespace glatt {

struct NotInvertibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderCapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GroupMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signals a state the mathematics rules out; always an implementation bug.
struct InternalInconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace glatt
