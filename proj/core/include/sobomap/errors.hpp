#pragma once

#include <stdexcept>
#include <string>

namespace sobomap {

// Invalid parameters or out-of-contract inputs. CLI maps this to exit code 2.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation hit a singular point; carries the offending distance.
struct SingularityError : std::runtime_error {
    double dist;
    explicit SingularityError(const std::string& what, double d)
        : std::runtime_error(what), dist(d) {}
};

// A constructor or pipeline could not produce a valid object
// (failed quality gate, no admissible shift, ...). CLI exit code 3.
struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

// Requested a combination outside the supported v1 envelope.
struct UnsupportedError : std::domain_error {
    explicit UnsupportedError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace sobomap
