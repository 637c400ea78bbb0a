#pragma once

#include <stdexcept>
#include <string>

namespace qpigou {

/// Raised when an argument lies outside the domain of an operation. Carries
/// the name of the offending parameter so front ends can report it.
class DomainError : public std::domain_error
{
public:
    DomainError(std::string parameter, const std::string& what)
        : std::domain_error(parameter + ": " + what), parameter_(std::move(parameter))
    {
    }

    const std::string& parameter() const noexcept { return parameter_; }

private:
    std::string parameter_;
};

} // namespace qpigou
