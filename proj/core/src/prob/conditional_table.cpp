#include "ontic/prob/conditional_table.hpp"

#include <cmath>
#include <string>

#include "ontic/tolerances.hpp"

namespace ontic::prob {

ConditionalTable::ConditionalTable(std::vector<VariableSpace> given, VariableSpace target,
                                   std::vector<double> rows)
    : given_(std::move(given)),
      given_strides_(compute_strides(given_)),
      target_(std::move(target)),
      rows_(std::move(rows)) {
    const std::size_t expected = table_size(given_) * target_.size();
    if (rows_.size() != expected) {
        throw ShapeError("conditional table has " + std::to_string(rows_.size()) +
                         " entries, expected " + std::to_string(expected));
    }
    const std::size_t n_rows = row_count();
    for (std::size_t r = 0; r < n_rows; ++r) {
        double total = 0.0;
        for (std::size_t t = 0; t < target_.size(); ++t) {
            const double p = rows_[r * target_.size() + t];
            if (!(p >= 0.0)) {
                throw ValidationError("conditional table row " + std::to_string(r) +
                                      " has a negative (or NaN) entry");
            }
            total += p;
        }
        if (std::abs(total - 1.0) > kNormTol) {
            throw ValidationError("conditional table row " + std::to_string(r) + " sums to " +
                                  std::to_string(total) + ", expected 1");
        }
    }
}

std::size_t ConditionalTable::row_count() const {
    return table_size(given_);
}

std::size_t ConditionalTable::row_index(std::span<const std::size_t> given_index) const {
    std::size_t row = 0;
    for (std::size_t axis = 0; axis < given_.size(); ++axis) {
        row += given_strides_[axis] * given_index[axis];
    }
    return row;
}

std::span<const double> ConditionalTable::row_at(std::size_t row) const {
    return std::span<const double>(rows_.data() + row * target_.size(), target_.size());
}

std::span<const double> ConditionalTable::row(std::span<const std::size_t> given_index) const {
    return row_at(row_index(given_index));
}

double ConditionalTable::at(std::span<const std::size_t> given_index, std::size_t target_index) const {
    return rows_[row_index(given_index) * target_.size() + target_index];
}

}  // namespace ontic::prob
