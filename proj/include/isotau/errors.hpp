#pragma once

#include <stdexcept>
#include <string>

namespace isotau {

// Gamma/Barnes argument at (or numerically on top of) a pole.
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Series failed to reach the stopping tolerance within the term budget.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Cauchy denominator closer to zero than the resonance guard allows.
struct ResonanceError : std::runtime_error {
    explicit ResonanceError(const std::string& what) : std::runtime_error(what) {}
};

// Maya diagram / charged partition monotonicity violated.
struct MalformedDiagram : std::runtime_error {
    explicit MalformedDiagram(const std::string& what) : std::runtime_error(what) {}
};

// Kernel evaluation outside its domain of validity.
struct EvaluationError : std::runtime_error {
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isotau
