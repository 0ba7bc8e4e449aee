#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "ontic/tolerances.hpp"

namespace ontic::qm {

using Complex = std::complex<double>;

// A labelled wave function: a unit vector in C^d, d >= 2. Global phase is
// physically irrelevant; use states_equal_up_to_phase for identity.
class PureState {
public:
    PureState(std::string label, Eigen::VectorXcd amplitudes);

    const std::string& label() const { return label_; }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    Eigen::Index dim() const { return amplitudes_.size(); }

    Complex overlap(const PureState& other) const;

private:
    std::string label_;
    Eigen::VectorXcd amplitudes_;
};

// True iff |<a|b>| >= 1 - tol, i.e. the two vectors describe the same wave
// function for all statistical purposes.
bool states_equal_up_to_phase(const PureState& a, const PureState& b, double tol = kPhaseTol);

// Computational basis vector e_k as a PureState.
PureState basis_state(Eigen::Index dim, Eigen::Index k, std::string label = "");

}  // namespace ontic::qm
