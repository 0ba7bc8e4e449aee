#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

#include "ontic/qm/state.hpp"
#include "ontic/tolerances.hpp"

namespace ontic::qm {

/**
 * A projective measurement: a labelled family of d x d projectors, one per
 * outcome label, that is Hermitian, idempotent, mutually orthogonal and
 * sums to the identity (all within kNormTol, entrywise).
 */
class Measurement {
public:
    Measurement(std::string label, std::vector<std::string> outcomes,
                std::vector<Eigen::MatrixXcd> projectors);

    const std::string& label() const { return label_; }
    Eigen::Index dim() const { return projectors_.front().rows(); }
    std::size_t outcome_count() const { return outcomes_.size(); }
    const std::vector<std::string>& outcomes() const { return outcomes_; }
    const std::string& outcome(std::size_t i) const { return outcomes_.at(i); }
    const Eigen::MatrixXcd& projector(std::size_t i) const { return projectors_.at(i); }

private:
    std::string label_;
    std::vector<std::string> outcomes_;
    std::vector<Eigen::MatrixXcd> projectors_;
};

// Measurements plus the setting distribution P_A over their labels.
class MeasurementSet {
public:
    MeasurementSet(std::vector<Measurement> measurements, std::vector<double> probabilities);

    std::size_t size() const { return measurements_.size(); }
    Eigen::Index dim() const { return measurements_.front().dim(); }
    const Measurement& at(std::size_t i) const { return measurements_.at(i); }
    double probability(std::size_t i) const { return probabilities_.at(i); }
    const std::vector<double>& probabilities() const { return probabilities_; }

    // Indices of measurements with P_A above the support threshold.
    std::vector<std::size_t> supported(double eps = kSupportEps) const;

    bool has(const std::string& label) const;
    const Measurement& find(const std::string& label) const;
    std::size_t index_of(const std::string& label) const;

    // Outcome labels across all measurements, in first-appearance order.
    std::vector<std::string> outcome_union() const;

private:
    std::vector<Measurement> measurements_;
    std::vector<double> probabilities_;
};

// Measurement of the computational basis {|0>, ..., |d-1>}, outcomes "0".."d-1".
Measurement computational_basis_measurement(Eigen::Index dim, std::string label = "Z");

// Qubit Pauli measurements; outcomes "0" (+1 eigenvector) and "1" (-1).
Measurement pauli_x_measurement(std::string label = "X");
Measurement pauli_y_measurement(std::string label = "Y");
Measurement pauli_z_measurement(std::string label = "Z");

// Measurement projecting onto the columns of a unitary; outcomes "0".."d-1".
Measurement basis_measurement_from_unitary(std::string label, const Eigen::MatrixXcd& unitary);

}  // namespace ontic::qm
