#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace baba {

enum class ErrorCode {
    EmptyAssumptions,
    NonBipolarRule,
    MissingContrary,
    DuplicateContrary,
    ContraryOfNonAssumption,
    UnknownName,
    UnknownSentence,
    SyntaxError,
    UnknownArgument,
    MissingInterpretation,
    InvalidVariant,
    InfeasibleParams,
    TooLarge,
    NotAnAF,
    IllegalSelection,
    NoBlank,
    Timeout,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Which declaration list a validation error refers to.
enum class DeclKind { None, Language, Assumption, Contrary, Rule };

/// Raised by framework construction; `index` points into the offending declaration list
/// so that parsers can attribute the error to a source line.
class FrameworkError : public Error {
public:
    FrameworkError(ErrorCode code, const std::string & message, DeclKind kind = DeclKind::None, std::size_t index = 0);

    [[nodiscard]] DeclKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    DeclKind kind_;
    std::size_t index_;
};

/// Error with a 1-based source position. Used for SyntaxError, UnknownArgument and
/// framework validation errors surfaced through a parser.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string & message);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace baba
