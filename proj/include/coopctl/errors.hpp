#ifndef COOPCTL_ERRORS_HPP
#define COOPCTL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coopctl {

// Parameter outside its documented domain (b <= c, p outside [0,1], ...).
struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

// Boundary-value problem has no solution: x0 + delta >= 1 or inputs outside (0,1).
struct InfeasibleBounds : std::domain_error {
    explicit InfeasibleBounds(const std::string& what) : std::domain_error(what) {}
};

// Trajectory never reached the requested target state within the horizon.
struct NoCrossing : std::runtime_error {
    explicit NoCrossing(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coopctl

#endif
