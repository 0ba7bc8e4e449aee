#pragma once

#include <string>
#include <vector>

#include "ontic/prob/joint_distribution.hpp"
#include "ontic/tolerances.hpp"

namespace ontic::prob {

/**
 * Worst-case deviation from the Markov chain U <-> V <-> W on `d`.
 *
 * Extra variables of `d` are summed out first. The value is the maximum,
 * over (v, w) cells with mass above kSupportEps, of
 * tv_distance(P_{U|V=v,W=w}, P_{U|V=v}); it is zero (up to rounding)
 * exactly when conditioning on W adds nothing to V for predicting U.
 *
 * The chain property itself is symmetric in U and W, but the deviation is
 * measured on the U-side conditionals; swap the arguments to measure the
 * other orientation.
 */
double markov_deviation(const JointDistribution& d,
                        const std::vector<std::string>& u,
                        const std::vector<std::string>& v,
                        const std::vector<std::string>& w);

bool is_markov_chain(const JointDistribution& d,
                     const std::vector<std::string>& u,
                     const std::vector<std::string>& v,
                     const std::vector<std::string>& w,
                     double tol = kCheckTol);

// tv_distance(P_{UV}, P_U x P_V) after summing out everything else.
double independence_deviation(const JointDistribution& d,
                              const std::vector<std::string>& u,
                              const std::vector<std::string>& v);

}  // namespace ontic::prob
