#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tapps {

enum class ErrorKind {
    // data frame operations
    UnknownSeries,
    UnknownName,
    DuplicateName,
    DuplicateSeries,
    SeriesMismatch,
    LabelMismatch,
    LengthMismatch,
    NonNumericCell,
    InvalidValue,
    // language
    LexError,
    ParseError,
    CyclicInclude,
    FileNotFound,
    // vm
    UnknownDataFrame,
    DuplicateFrameName,
    UnknownParameterSet,
    DuplicateParameterSetName,
    UnknownPlugin,
    EmptySlot,
    MissingInputFrame,
    PluginFailure,
    SpawnFailure,
    InvalidArgument,
    // persistence
    RaggedRow,
    EmptyFile,
    WriteFailure,
    FormatError,
    VersionMismatch,
};

std::string_view error_kind_name(ErrorKind kind);

// Every user-facing failure in the interpreter is raised as an Error. The VM
// catches it per statement and renders what() as a single line.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Positioned parse failure; position is a token index (or character column for
// lexing errors).
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, const std::string& message, std::size_t position,
               std::string found)
        : Error(kind, message), position_(position), found_(std::move(found)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::size_t position_;
    std::string found_;
};

}  // namespace tapps
