#ifndef LEAFSPACE_ERRORS_HPP
#define LEAFSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leafspace {

// Mixing scalars from different quadratic fields, or vectors/forms of
// different ambient dimension.
struct FieldMismatchError : std::invalid_argument {
    explicit FieldMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// An affine substitution produced a phase outside (pi/2)*Z; the result
// would leave the exact trigonometric model.
struct PhaseError : std::runtime_error {
    explicit PhaseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace leafspace

#endif
