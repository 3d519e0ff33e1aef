#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsync {

// Base of the pipeline error hierarchy. The CLI maps subclasses to exit
// codes: IoError -> 2, ValidationError (and subclasses) -> 3,
// AlignmentInfeasibleError -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed Standard MIDI File content; carries the offending byte offset.
class MidiParseError : public ValidationError {
public:
    MidiParseError(const std::string& what, std::size_t byte_offset)
        : ValidationError(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}
    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

class StaffDetectError : public ValidationError {
public:
    StaffDetectError(const std::string& what, int strip_index)
        : ValidationError(what + " (strip " + std::to_string(strip_index) + ")"),
          strip_index_(strip_index) {}
    int strip_index() const { return strip_index_; }

private:
    int strip_index_;
};

// The DTW end cell cannot be reached under steps {(1,1),(1,2),(2,1)}.
class AlignmentInfeasibleError : public Error {
public:
    AlignmentInfeasibleError(int rows, int cols)
        : Error("alignment infeasible for cost matrix of shape " + std::to_string(rows) +
                "x" + std::to_string(cols) + " (path slope is limited to [1/2, 2])"),
          rows_(rows), cols_(cols) {}
    int rows() const { return rows_; }
    int cols() const { return cols_; }

private:
    int rows_, cols_;
};

}  // namespace bsync
