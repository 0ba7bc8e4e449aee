#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ontic/errors.hpp"

namespace ontic::prob {

// A named random variable with a finite, ordered set of value labels.
class VariableSpace {
public:
    VariableSpace(std::string name, std::vector<std::string> values);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    const std::string& value(std::size_t i) const { return values_.at(i); }

    // Index of `label` within this space; NameError if absent.
    std::size_t index_of(const std::string& label) const;
    bool contains(const std::string& label) const;

    bool operator==(const VariableSpace& other) const {
        return name_ == other.name_ && values_ == other.values_;
    }

private:
    std::string name_;
    std::vector<std::string> values_;
};

// Partial assignment of value labels to variables, keyed by variable name.
using Assignment = std::map<std::string, std::string>;

// Row-major strides for a list of spaces (last axis fastest).
std::vector<std::size_t> compute_strides(const std::vector<VariableSpace>& spaces);

// Total number of cells in the product of the spaces.
std::size_t table_size(const std::vector<VariableSpace>& spaces);

// Odometer increment of a multi-index over `spaces`. Returns false once the
// index wraps back to all zeros.
bool advance_index(std::vector<std::size_t>& index, const std::vector<VariableSpace>& spaces);

}  // namespace ontic::prob
