#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latres
{

class LatresError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// An operation was called on input outside its domain (e.g. a non-anchor).
class PreconditionError : public LatresError
{
public:
    using LatresError::LatresError;
};

class ParseError : public LatresError
{
public:
    ParseError(std::size_t line, const std::string& what)
        : LatresError("line " + std::to_string(line) + ": " + what), m_line(line)
    {
    }

    std::size_t line() const noexcept { return m_line; }

private:
    std::size_t m_line;
};

class ResourceLimitError : public LatresError
{
public:
    using LatresError::LatresError;
};

// Raised by the normalization circuit breaker.
class NonTerminationError : public LatresError
{
public:
    using LatresError::LatresError;
};

/// Resource guard: returns LATRES_MAX_ELEMENTS when set, else `fallback`.
std::size_t resource_guard(std::size_t fallback);

} // namespace latres
