#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistkit
{

enum class ErrorKind
{
    InvalidLeafIndex,
    ParseError,
    CapExceeded,
    InvalidInput,
    UnboundedRegion,
    BoxTooLarge,
    VariableMismatch,
    NonUnitImage,
    UnsupportedRing,
    NonGenericHom,
    DimensionMismatch,
    DegenerateSpan,
};

const char* error_name(ErrorKind kind) noexcept;

/// Every failure surfaced by the library carries one of the names above so
/// the CLI can report it in structured diagnostics.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const char* name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

class ParseError : public Error
{
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

} // namespace twistkit
