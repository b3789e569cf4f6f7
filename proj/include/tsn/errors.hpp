// errors.hpp -- exception types shared across the toolkit
#ifndef TSN_ERRORS_HPP
#define TSN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsn {

// Malformed or inconsistent data: bad file rows, self-loop edges,
// members missing from a frame, degenerate graphs fed to an analysis.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameters or configuration: k < 3, thresholds out of range,
// incompatible option combinations.
class ParamError : public std::invalid_argument {
public:
    explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace tsn

#endif
