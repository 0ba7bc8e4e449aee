#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ontic/prob/joint_distribution.hpp"
#include "ontic/qm/measurement.hpp"
#include "ontic/qm/state.hpp"
#include "ontic/tolerances.hpp"

namespace ontic::qm {

// Name of the outcome variable in distributions produced by this layer.
inline constexpr const char* kOutcomeVar = "X";

// Outcome distribution {x -> <psi|Pi_x|psi>} as a one-variable table over
// the measurement's outcome labels.
prob::JointDistribution born_rule(const PureState& s, const Measurement& m);

// Outcome distribution for every (state label, measurement label) pair.
std::map<std::pair<std::string, std::string>, prob::JointDistribution>
statistics_table(const std::vector<PureState>& states, const MeasurementSet& ms);

// True iff some supported measurement separates the two states by more
// than `tol` in total variation.
bool statistics_distinguish(const PureState& s0, const PureState& s1, const MeasurementSet& ms,
                            double tol = kCheckTol);

}  // namespace ontic::qm
