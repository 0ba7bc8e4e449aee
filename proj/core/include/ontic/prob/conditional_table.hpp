#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ontic/prob/variable_space.hpp"

namespace ontic::prob {

/**
 * Conditional table P(target | given...).
 *
 * Storage: one normalized row of target.size() entries per cell of the
 * given-axes product, rows laid out row-major over the given axes (last
 * given axis fastest). Every row must be a distribution: entries >= 0,
 * sum 1 within kNormTol.
 */
class ConditionalTable {
public:
    ConditionalTable(std::vector<VariableSpace> given, VariableSpace target,
                     std::vector<double> rows);

    const std::vector<VariableSpace>& given() const { return given_; }
    const VariableSpace& target() const { return target_; }

    std::size_t row_count() const;
    std::size_t row_index(std::span<const std::size_t> given_index) const;

    std::span<const double> row(std::span<const std::size_t> given_index) const;
    std::span<const double> row_at(std::size_t row) const;

    double at(std::span<const std::size_t> given_index, std::size_t target_index) const;

    const std::vector<double>& data() const { return rows_; }

private:
    std::vector<VariableSpace> given_;
    std::vector<std::size_t> given_strides_;
    VariableSpace target_;
    std::vector<double> rows_;
};

}  // namespace ontic::prob
