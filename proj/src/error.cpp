#include "twistkit/error.hpp"

#include <sstream>

namespace twistkit
{

const char* error_name(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::InvalidLeafIndex: return "InvalidLeafIndex";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::UnboundedRegion: return "UnboundedRegion";
    case ErrorKind::BoxTooLarge: return "BoxTooLarge";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::NonUnitImage: return "NonUnitImage";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::NonGenericHom: return "NonGenericHom";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    }
    return "Unknown";
}

namespace
{

std::string describe_parse_failure(std::size_t offset, const std::vector<std::string>& expected,
                                   const std::string& found)
{
    std::ostringstream os;
    os << "at byte " << offset << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
    {
        if (i > 0)
            os << (i + 1 == expected.size() ? " or " : ", ");
        os << expected[i];
    }
    os << ", found " << (found.empty() ? "end of input" : "'" + found + "'");
    return os.str();
}

} // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorKind::ParseError, describe_parse_failure(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected))
{
}

} // namespace twistkit
