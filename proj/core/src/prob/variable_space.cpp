#include "ontic/prob/variable_space.hpp"

#include <algorithm>
#include <unordered_set>

namespace ontic::prob {

VariableSpace::VariableSpace(std::string name, std::vector<std::string> values)
    : name_(std::move(name)), values_(std::move(values)) {
    if (name_.empty()) {
        throw ValidationError("variable space needs a nonempty name");
    }
    if (values_.empty()) {
        throw ValidationError("variable space '" + name_ + "' needs at least one value");
    }
    std::unordered_set<std::string> seen;
    for (const auto& v : values_) {
        if (!seen.insert(v).second) {
            throw ValidationError("variable space '" + name_ + "' has duplicate value '" + v + "'");
        }
    }
}

std::size_t VariableSpace::index_of(const std::string& label) const {
    auto it = std::find(values_.begin(), values_.end(), label);
    if (it == values_.end()) {
        throw NameError("value '" + label + "' not in variable space '" + name_ + "'");
    }
    return static_cast<std::size_t>(it - values_.begin());
}

bool VariableSpace::contains(const std::string& label) const {
    return std::find(values_.begin(), values_.end(), label) != values_.end();
}

std::vector<std::size_t> compute_strides(const std::vector<VariableSpace>& spaces) {
    std::vector<std::size_t> strides(spaces.size(), 1);
    for (std::size_t i = spaces.size(); i-- > 1;) {
        strides[i - 1] = strides[i] * spaces[i].size();
    }
    return strides;
}

std::size_t table_size(const std::vector<VariableSpace>& spaces) {
    std::size_t n = 1;
    for (const auto& s : spaces) n *= s.size();
    return n;
}

bool advance_index(std::vector<std::size_t>& index, const std::vector<VariableSpace>& spaces) {
    for (std::size_t axis = spaces.size(); axis-- > 0;) {
        if (++index[axis] < spaces[axis].size()) return true;
        index[axis] = 0;
    }
    return false;
}

}  // namespace ontic::prob
