#pragma once

#include <stdexcept>
#include <string>

namespace dadc {

// Error taxonomy shared by the library and the CLI.  The CLI maps these to
// process exit codes: parameter_error -> 2, data errors (parse, format,
// empty dataset, validation, io) -> 3, no_center_error -> 4.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration or argument values (bad k, bad threshold, ...).
class parameter_error : public error {
public:
    using error::error;
};

// A row that cannot be parsed; the message names the offending line.
class parse_error : public error {
public:
    using error::error;
};

// Structurally inconsistent input (ragged rows, non-square matrix, ...).
class format_error : public error {
public:
    using error::error;
};

// Input stream contained no data rows.
class empty_dataset_error : public error {
public:
    using error::error;
};

// Supplied data violates a declared invariant (asymmetric matrix, negative
// distance, degenerate noise bounds, ...).
class validation_error : public error {
public:
    using error::error;
};

// Filesystem-level failure (unreadable input, unwritable output).
class io_error : public error {
public:
    using error::error;
};

// The decision-graph partition produced zero centers on degenerate input.
class no_center_error : public error {
public:
    using error::error;
};

} // namespace dadc
