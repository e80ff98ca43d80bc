#pragma once

#include <stdexcept>
#include <string>

namespace gfi {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// normalize() received only -inf log-values.
struct AllZeroError : Error {
    explicit AllZeroError(const std::string& msg) : Error(msg) {}
};

// Argument outside the support of the distribution or grid.
struct OutOfDomainError : Error {
    explicit OutOfDomainError(const std::string& msg) : Error(msg) {}
};

// Two grid densities do not share the same grid.
struct GridMismatchError : Error {
    explicit GridMismatchError(const std::string& msg) : Error(msg) {}
};

// Design matrix is rank deficient where full rank is required.
struct SingularDesignError : Error {
    explicit SingularDesignError(const std::string& msg) : Error(msg) {}
};

// Fisher information matrix is singular.
struct SingularInformationError : Error {
    explicit SingularInformationError(const std::string& msg) : Error(msg) {}
};

// Initial state handed to a sampler violates the model constraints.
struct InitInvalidError : Error {
    explicit InitInvalidError(const std::string& msg) : Error(msg) {}
};

// Domain cannot host the requested artificial design points.
struct InfeasibleGeometryError : Error {
    explicit InfeasibleGeometryError(const std::string& msg) : Error(msg) {}
};

// Record key not present in the embedded reference table.
struct UnknownCellError : Error {
    explicit UnknownCellError(const std::string& msg) : Error(msg) {}
};

// Operation only implemented for one-dimensional parameters.
struct DimensionUnsupportedError : Error {
    explicit DimensionUnsupportedError(const std::string& msg) : Error(msg) {}
};

// Invalid experiment configuration (CLI / config file).
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace gfi
