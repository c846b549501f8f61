#ifndef EQUIHITCH_ERRORS_HPP
#define EQUIHITCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace equihitch {

// Rejected input: invalid cover data, out-of-range argument, malformed jobspec.
// CLI maps this to exit code 1.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A cross-checked identity failed (forms disagree, non-integral total, ...).
// Never expected on valid input; CLI maps this to exit code 2.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace equihitch

#endif
