#include "ontic/prob/joint_distribution.hpp"

#include <cmath>
#include <unordered_set>

#include "ontic/tolerances.hpp"

namespace ontic::prob {

namespace {

void check_no_duplicate_names(const std::vector<VariableSpace>& spaces) {
    std::unordered_set<std::string> seen;
    for (const auto& s : spaces) {
        if (!seen.insert(s.name()).second) {
            throw ValidationError("duplicate variable name '" + s.name() + "' in joint distribution");
        }
    }
}

}  // namespace

JointDistribution::JointDistribution(std::vector<VariableSpace> spaces, std::vector<double> weights)
    : spaces_(std::move(spaces)), strides_(compute_strides(spaces_)), weights_(std::move(weights)) {
    if (spaces_.empty()) {
        throw ValidationError("joint distribution needs at least one variable");
    }
    check_no_duplicate_names(spaces_);
    if (weights_.size() != table_size(spaces_)) {
        throw ShapeError("weight table has " + std::to_string(weights_.size()) +
                         " entries, expected " + std::to_string(table_size(spaces_)));
    }
    double total = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) {
            throw ValidationError("joint distribution has a negative (or NaN) weight");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kNormTol) {
        throw ValidationError("joint distribution weights sum to " + std::to_string(total) +
                              ", expected 1 within tolerance");
    }
}

JointDistribution JointDistribution::uniform(std::vector<VariableSpace> spaces) {
    const std::size_t n = table_size(spaces);
    return JointDistribution(std::move(spaces), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

JointDistribution JointDistribution::point_mass(std::vector<VariableSpace> spaces, const Assignment& at) {
    std::vector<std::size_t> index(spaces.size(), 0);
    for (std::size_t axis = 0; axis < spaces.size(); ++axis) {
        auto it = at.find(spaces[axis].name());
        if (it == at.end()) {
            throw ArgumentError("point_mass: no value given for variable '" + spaces[axis].name() + "'");
        }
        index[axis] = spaces[axis].index_of(it->second);
    }
    const auto strides = compute_strides(spaces);
    std::size_t flat = 0;
    for (std::size_t axis = 0; axis < spaces.size(); ++axis) flat += strides[axis] * index[axis];
    std::vector<double> weights(table_size(spaces), 0.0);
    weights[flat] = 1.0;
    return JointDistribution(std::move(spaces), std::move(weights));
}

JointDistribution JointDistribution::product(const JointDistribution& a, const JointDistribution& b) {
    for (const auto& s : b.spaces_) {
        if (a.has_variable(s.name())) {
            throw ArgumentError("product: variable '" + s.name() + "' appears in both factors");
        }
    }
    std::vector<VariableSpace> spaces = a.spaces_;
    spaces.insert(spaces.end(), b.spaces_.begin(), b.spaces_.end());
    std::vector<double> weights(a.weights_.size() * b.weights_.size());
    std::size_t k = 0;
    for (double wa : a.weights_) {
        for (double wb : b.weights_) weights[k++] = wa * wb;
    }
    return JointDistribution(std::move(spaces), std::move(weights));
}

bool JointDistribution::has_variable(const std::string& name) const {
    for (const auto& s : spaces_) {
        if (s.name() == name) return true;
    }
    return false;
}

std::size_t JointDistribution::axis_of(const std::string& name) const {
    for (std::size_t axis = 0; axis < spaces_.size(); ++axis) {
        if (spaces_[axis].name() == name) return axis;
    }
    throw NameError("unknown variable '" + name + "'");
}

std::vector<std::string> JointDistribution::variable_names() const {
    std::vector<std::string> names;
    names.reserve(spaces_.size());
    for (const auto& s : spaces_) names.push_back(s.name());
    return names;
}

std::size_t JointDistribution::flat_index(std::span<const std::size_t> index) const {
    std::size_t flat = 0;
    for (std::size_t axis = 0; axis < spaces_.size(); ++axis) flat += strides_[axis] * index[axis];
    return flat;
}

double JointDistribution::weight_at(std::span<const std::size_t> index) const {
    return weights_[flat_index(index)];
}

double JointDistribution::mass_of(const Assignment& event) const {
    // Fixed-axis scan: iterate the full table, skipping cells that do not
    // match the event. Tables are desk-scale, so no cleverness needed.
    std::vector<std::ptrdiff_t> required(spaces_.size(), -1);
    for (const auto& [name, label] : event) {
        const std::size_t axis = axis_of(name);
        required[axis] = static_cast<std::ptrdiff_t>(spaces_[axis].index_of(label));
    }
    double total = 0.0;
    std::vector<std::size_t> index(spaces_.size(), 0);
    do {
        bool match = true;
        for (std::size_t axis = 0; axis < spaces_.size(); ++axis) {
            if (required[axis] >= 0 && index[axis] != static_cast<std::size_t>(required[axis])) {
                match = false;
                break;
            }
        }
        if (match) total += weights_[flat_index(index)];
    } while (advance_index(index, spaces_));
    return total;
}

JointDistribution JointDistribution::marginal(const std::vector<std::string>& keep) const {
    if (keep.empty()) {
        throw ArgumentError("marginal: keep set must be nonempty");
    }
    std::vector<bool> kept(spaces_.size(), false);
    for (const auto& name : keep) kept[axis_of(name)] = true;

    std::vector<VariableSpace> out_spaces;
    std::vector<std::size_t> out_axes;
    for (std::size_t axis = 0; axis < spaces_.size(); ++axis) {
        if (kept[axis]) {
            out_spaces.push_back(spaces_[axis]);
            out_axes.push_back(axis);
        }
    }
    if (out_axes.size() == spaces_.size()) return *this;

    const auto out_strides = compute_strides(out_spaces);
    std::vector<double> out_weights(table_size(out_spaces), 0.0);
    std::vector<std::size_t> index(spaces_.size(), 0);
    do {
        std::size_t flat = 0;
        for (std::size_t k = 0; k < out_axes.size(); ++k) flat += out_strides[k] * index[out_axes[k]];
        out_weights[flat] += weights_[flat_index(index)];
    } while (advance_index(index, spaces_));
    return JointDistribution(std::move(out_spaces), std::move(out_weights));
}

JointDistribution JointDistribution::condition(const Assignment& given) const {
    if (given.empty()) {
        throw ArgumentError("condition: given assignment must be nonempty");
    }
    std::vector<std::ptrdiff_t> required(spaces_.size(), -1);
    for (const auto& [name, label] : given) {
        const std::size_t axis = axis_of(name);
        required[axis] = static_cast<std::ptrdiff_t>(spaces_[axis].index_of(label));
    }

    std::vector<VariableSpace> out_spaces;
    std::vector<std::size_t> out_axes;
    for (std::size_t axis = 0; axis < spaces_.size(); ++axis) {
        if (required[axis] < 0) {
            out_spaces.push_back(spaces_[axis]);
            out_axes.push_back(axis);
        }
    }
    if (out_spaces.empty()) {
        throw ArgumentError("condition: at least one variable must remain free");
    }

    const auto out_strides = compute_strides(out_spaces);
    std::vector<double> out_weights(table_size(out_spaces), 0.0);
    double mass = 0.0;
    std::vector<std::size_t> index(spaces_.size(), 0);
    do {
        bool match = true;
        for (std::size_t axis = 0; axis < spaces_.size(); ++axis) {
            if (required[axis] >= 0 && index[axis] != static_cast<std::size_t>(required[axis])) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        std::size_t flat = 0;
        for (std::size_t k = 0; k < out_axes.size(); ++k) flat += out_strides[k] * index[out_axes[k]];
        const double w = weights_[flat_index(index)];
        out_weights[flat] += w;
        mass += w;
    } while (advance_index(index, spaces_));

    if (mass <= kSupportEps) {
        throw SupportError("conditioning event has probability " + std::to_string(mass) +
                           " (below support threshold)");
    }
    for (double& w : out_weights) w /= mass;
    return JointDistribution(std::move(out_spaces), std::move(out_weights));
}

double tv_distance(const JointDistribution& p, const JointDistribution& q) {
    if (p.axis_count() != q.axis_count()) {
        throw ShapeError("tv_distance: tables hold different numbers of variables");
    }
    // Map q's axes onto p's by name; value lists must match exactly.
    std::vector<std::size_t> q_axis_for_p(p.axis_count());
    for (std::size_t axis = 0; axis < p.axis_count(); ++axis) {
        const auto& space = p.spaces()[axis];
        const std::size_t q_axis = [&] {
            try {
                return q.axis_of(space.name());
            } catch (const NameError&) {
                throw ShapeError("tv_distance: variable '" + space.name() + "' missing from one table");
            }
        }();
        if (!(q.spaces()[q_axis] == space)) {
            throw ShapeError("tv_distance: variable '" + space.name() + "' has mismatched values");
        }
        q_axis_for_p[axis] = q_axis;
    }
    double sum = 0.0;
    std::vector<std::size_t> index(p.axis_count(), 0);
    std::vector<std::size_t> q_index(p.axis_count(), 0);
    do {
        for (std::size_t axis = 0; axis < p.axis_count(); ++axis) q_index[q_axis_for_p[axis]] = index[axis];
        sum += std::abs(p.weight_at(index) - q.weight_at(q_index));
    } while (advance_index(index, p.spaces()));
    return 0.5 * sum;
}

}  // namespace ontic::prob
