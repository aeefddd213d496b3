#pragma once

#include <stdexcept>

namespace hawkes {

/// Fewer events than free parameters of the requested order.
class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simulation exceeded its event cap or time cap.
class RunawaySimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two poles of the Laplace-domain denominator coincide within tolerance.
class MultipleRootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Polynomial root finding failed or produced inconsistent poles.
class RootFindingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hawkes
