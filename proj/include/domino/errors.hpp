#pragma once

#include <stdexcept>
#include <string>

namespace domino {

/// Thrown when an adaptive numerical routine cannot reach its requested
/// tolerance (quadrature non-convergence, iteration limits).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace domino
