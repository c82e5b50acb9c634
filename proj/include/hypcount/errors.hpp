#ifndef HYPCOUNT_ERRORS_HPP
#define HYPCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypcount
{

// Base of every error raised by the library. The CLI maps these to exit code 2.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Inverting (or raising to a negative power) a series whose constant term is zero.
class zero_constant_term : public error
{
public:
    zero_constant_term() : error("series has zero constant term") {}
};

// Composition requires the inner series to vanish at the origin.
class nonzero_constant_term : public error
{
public:
    nonzero_constant_term() : error("inner series of a composition must have zero constant term") {}
};

// q d/dq is only defined here for integral exponents.
class fractional_exponent : public error
{
public:
    fractional_exponent() : error("operation requires integral exponents (denom = 1)") {}
};

class domain_error : public error
{
public:
    using error::error;
};

class bound_too_small : public error
{
public:
    using error::error;
};

} // namespace hypcount

#endif
