#pragma once

#include <string>
#include <vector>

#include "maxplus/switched.hpp"

namespace maxplus {

/// Trajectory X(0..horizon). applied[k] names the matrix taking X(k) to X(k+1).
struct Trace {
    Schedule schedule;
    std::vector<Vector> states;
    std::vector<std::string> applied;

    unsigned long horizon() const { return states.empty() ? 0 : states.size() - 1; }
};

/// Runs X(k+1) = A_{i(k)} X(k) for `horizon` steps.
/// Throws ZeroInitialState, DimensionMismatch or UnknownMatrixName.
Trace simulate(const Schedule& schedule, const MatrixMap& matrices, const Vector& x0, unsigned long horizon);

struct PeriodicityReport {
    bool detected = false;
    unsigned long period = 0;
    Rational lambda_per_step;
    unsigned long transient = 0;
};

inline constexpr unsigned long kDefaultMaxPeriod = 64;

/**
 * Smallest d <= max_period such that X(k+d) = (d lambda) X(k) holds on the
 * final third of the trace, with epsilon components matching epsilon. The
 * transient is then moved back to the earliest index from which the relation
 * holds through the end. A candidate d is only tried when the window holds at
 * least d comparisons.
 */
PeriodicityReport detect_periodicity(const Trace& trace, unsigned long max_period = kDefaultMaxPeriod);

/// Horizon long enough for detection to see the composed system's full
/// transient and two complete periods in its window: K (3 k0 + 6 d).
unsigned long recommended_horizon(const SwitchedSpectral& spectral);

struct CrossValidation {
    SwitchedSpectral spectral;
    PeriodicityReport empirical;
    unsigned long horizon = 0;
    bool agree = false;
    std::string diagnostics;
};

/// Compares the spectral prediction with the simulated trajectory. Agreement
/// means identical lambda per step, an empirical period dividing the predicted
/// one, and an empirical transient no later than the predicted one.
/// A horizon of 0 selects recommended_horizon().
CrossValidation cross_validate(const Schedule& schedule, const MatrixMap& matrices, const Vector& x0,
                               unsigned long horizon = 0, unsigned long max_steps = kDefaultTransientCap);

}  // namespace maxplus
