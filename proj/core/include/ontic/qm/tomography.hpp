#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>

#include "ontic/prob/joint_distribution.hpp"
#include "ontic/qm/measurement.hpp"
#include "ontic/qm/state.hpp"

namespace ontic::qm {

// Coordinates of a Hermitian d x d matrix in an orthonormal (Frobenius)
// real basis of dimension d^2: diagonal entries, then sqrt(2) * Re and
// sqrt(2) * Im of each upper off-diagonal entry.
Eigen::VectorXd hermitian_coords(const Eigen::MatrixXcd& h);
Eigen::MatrixXcd hermitian_from_coords(const Eigen::VectorXd& coords, Eigen::Index dim);

// Rank of the real linear span of all projectors of the supported
// measurements, inside the d^2-dimensional space of Hermitian matrices.
int projector_span_rank(const MeasurementSet& ms);

// True iff the supported projectors span the full Hermitian space
// (rank == d^2), so statistics identify an arbitrary state.
bool is_tomographically_complete(const MeasurementSet& ms);

/**
 * Recover a pure state from outcome statistics.
 *
 * `stats` maps each supported measurement label to its outcome
 * distribution. The fit minimizes sum over (a, x) of
 * (tr(rho Pi^a_x) - p(x|a))^2 subject to tr(rho) = 1, then projects onto
 * the top eigenvector. CompletenessError if the measurement set is not
 * tomographically complete; NotPureError if the top eigenvalue falls
 * below kPurityMin (the statistics are not those of a pure state).
 */
PureState reconstruct_state(const std::map<std::string, prob::JointDistribution>& stats,
                            const MeasurementSet& ms, std::string label = "reconstructed");

}  // namespace ontic::qm
