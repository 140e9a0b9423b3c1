#include <bipolar_aba/error.hpp>

namespace baba {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EmptyAssumptions: return "EmptyAssumptions";
    case ErrorCode::NonBipolarRule: return "NonBipolarRule";
    case ErrorCode::MissingContrary: return "MissingContrary";
    case ErrorCode::DuplicateContrary: return "DuplicateContrary";
    case ErrorCode::ContraryOfNonAssumption: return "ContraryOfNonAssumption";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnknownSentence: return "UnknownSentence";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownArgument: return "UnknownArgument";
    case ErrorCode::MissingInterpretation: return "MissingInterpretation";
    case ErrorCode::InvalidVariant: return "InvalidVariant";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAnAF: return "NotAnAF";
    case ErrorCode::IllegalSelection: return "IllegalSelection";
    case ErrorCode::NoBlank: return "NoBlank";
    case ErrorCode::Timeout: return "Timeout";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string & message) :
    std::runtime_error(std::string(to_string(code)) + ": " + message),
    code_(code)
{
}

FrameworkError::FrameworkError(ErrorCode code, const std::string & message, DeclKind kind, std::size_t index) :
    Error(code, message),
    kind_(kind),
    index_(index)
{
}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string & message) :
    Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
    line_(line),
    column_(column)
{
}

} // namespace baba
