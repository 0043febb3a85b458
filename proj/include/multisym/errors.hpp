#ifndef MULTISYM_ERRORS_HPP
#define MULTISYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msym
{

// An internal identity failed to re-expand; results must not be trusted.
class SelfCheckFailure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A linear-algebra computation would exceed the configured dimension cap.
class CapExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace msym

#endif
