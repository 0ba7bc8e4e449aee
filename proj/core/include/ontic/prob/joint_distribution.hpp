#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ontic/prob/variable_space.hpp"

namespace ontic::prob {

/**
 * Exact joint probability table over named finite variables.
 *
 * Storage: flat row-major weight array, one axis per VariableSpace, last
 * axis fastest. Weights are nonnegative and sum to 1 within kNormTol.
 * Instances are immutable after construction; every operation returns a
 * new table. Axes are addressed by variable name, never by position.
 */
class JointDistribution {
public:
    JointDistribution(std::vector<VariableSpace> spaces, std::vector<double> weights);

    static JointDistribution uniform(std::vector<VariableSpace> spaces);
    static JointDistribution point_mass(std::vector<VariableSpace> spaces, const Assignment& at);

    // Outer product of two tables over disjoint variable sets.
    static JointDistribution product(const JointDistribution& a, const JointDistribution& b);

    const std::vector<VariableSpace>& spaces() const { return spaces_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    std::size_t axis_count() const { return spaces_.size(); }

    bool has_variable(const std::string& name) const;
    // Axis position of a variable; NameError if absent.
    std::size_t axis_of(const std::string& name) const;
    std::vector<std::string> variable_names() const;

    double weight_at(std::span<const std::size_t> index) const;
    std::size_t flat_index(std::span<const std::size_t> index) const;

    // Probability of a (possibly partial) assignment.
    double mass_of(const Assignment& event) const;

    // Sum out every variable not in `keep`; result axes stay in this
    // table's order. Total mass is preserved.
    JointDistribution marginal(const std::vector<std::string>& keep) const;

    // Normalized distribution of the remaining variables given `given`.
    // SupportError if the conditioning event has mass <= kSupportEps.
    JointDistribution condition(const Assignment& given) const;

private:
    std::vector<VariableSpace> spaces_;
    std::vector<std::size_t> strides_;
    std::vector<double> weights_;
};

// Total variation distance (1/2) * sum |p - q|. The tables must hold the
// same variables with identical value lists; axis order may differ.
double tv_distance(const JointDistribution& p, const JointDistribution& q);

}  // namespace ontic::prob
