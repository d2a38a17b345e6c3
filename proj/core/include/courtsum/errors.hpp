#pragma once

#include <stdexcept>
#include <string>

namespace courtsum {

// Hard failures throw; recoverable conditions are reported through warning
// lists on the returned records instead.

struct MissingFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemaViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrainCountTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyCorpusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HeaderNotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateLabelsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingleClassDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFiniteLossError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyGridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingReferenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace courtsum
