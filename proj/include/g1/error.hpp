/** @file error.hpp

    @brief Typed error used throughout the library.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace g1 {

/// Failure categories. Names match the documented error conditions of each module.
enum class ErrorKind {
    // ratpoly
    DegreeStructure,
    ParseRational,
    // surface
    DanglingReference,
    SlotReuse,
    SelfGluedEdge,
    NonManifoldVertex,
    // gluing
    MissingGluing,
    ZeroDenominator,
    Condition1Violated,
    Condition2Violated,
    CrossingVertexDegree,
    TopologyViolated,
    InfeasibleCorrection,
    // syzygy
    NonCoprimeInput,
    DegreeBoundViolated,
    // basis
    PropagationInconsistent,
    SingularInconsistent,
    IntegralInfeasible,
    BelowSeparability,
    CertificationFailed,
    // verify
    SizeLimit,
    // io
    InputError,
    Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace g1
