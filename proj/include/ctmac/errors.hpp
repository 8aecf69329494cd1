#pragma once

#include <stdexcept>
#include <string>

namespace ctmac
{

// Division by an exact zero, or a rational function evaluated/specialized at a pole.
class PoleError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Input outside the domain of an operation (omega_{u,v} with v = +-1, c = 0 with mu != 0, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Mismatched variable counts, degrees or sizes.
class StructuralError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A verification was asked for outside the regime where its statement applies.
class Refused : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed (e.g. an extra interpolation sample disagrees).
class InvariantError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace ctmac
