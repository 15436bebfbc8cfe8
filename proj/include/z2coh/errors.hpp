#ifndef Z2COH_ERRORS_HPP
#define Z2COH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace z2coh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/// A supplied differential pair does not compose to zero.
class CompositionNotZero : public Error
{
    public:
        using Error::Error;
};

/// A supplied map does not commute with the differentials.
class NotChainMap : public Error
{
    public:
        using Error::Error;
};

class InvalidComplex : public Error
{
    public:
        using Error::Error;
};

class InvalidSystem : public Error
{
    public:
        using Error::Error;
};

class SubcomplexNotInvariant : public Error
{
    public:
        using Error::Error;
};

class NotInvolution : public Error
{
    public:
        using Error::Error;
};

class UnknownSpace : public Error
{
    public:
        using Error::Error;
};

/// Malformed input text; the message carries the line and column.
class ParseError : public Error
{
    public:
        using Error::Error;
};

class DimensionMismatch : public Error
{
    public:
        using Error::Error;
};

}   // namespace z2coh

#endif
