#include "ontic/prob/markov.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace ontic::prob {

namespace {

void check_disjoint_nonempty(const JointDistribution& d,
                             std::initializer_list<const std::vector<std::string>*> sets) {
    std::unordered_set<std::string> seen;
    for (const auto* set : sets) {
        if (set->empty()) {
            throw ArgumentError("variable sets must be nonempty");
        }
        for (const auto& name : *set) {
            d.axis_of(name);  // NameError for unknown variables
            if (!seen.insert(name).second) {
                throw ArgumentError("variable sets overlap at '" + name + "'");
            }
        }
    }
}

Assignment assignment_for(const JointDistribution& d, const std::vector<std::string>& names,
                          const std::vector<std::size_t>& index) {
    Assignment a;
    for (const auto& name : names) {
        const std::size_t axis = d.axis_of(name);
        a[name] = d.spaces()[axis].value(index[axis]);
    }
    return a;
}

}  // namespace

double markov_deviation(const JointDistribution& d,
                        const std::vector<std::string>& u,
                        const std::vector<std::string>& v,
                        const std::vector<std::string>& w) {
    check_disjoint_nonempty(d, {&u, &v, &w});

    std::vector<std::string> all = u;
    all.insert(all.end(), v.begin(), v.end());
    all.insert(all.end(), w.begin(), w.end());
    const JointDistribution m = d.marginal(all);

    std::vector<std::string> vw = v;
    vw.insert(vw.end(), w.begin(), w.end());
    const JointDistribution mvw = m.marginal(vw);

    // P_{U|V=v} is shared by every w-cell of the same v-cell; cache it.
    std::map<Assignment, JointDistribution> u_given_v;

    double worst = 0.0;
    std::vector<std::size_t> index(mvw.axis_count(), 0);
    do {
        if (mvw.weight_at(index) <= kSupportEps) continue;
        Assignment at_v = assignment_for(mvw, v, index);
        Assignment at_vw = at_v;
        for (const auto& name : w) {
            const std::size_t axis = mvw.axis_of(name);
            at_vw[name] = mvw.spaces()[axis].value(index[axis]);
        }

        auto it = u_given_v.find(at_v);
        if (it == u_given_v.end()) {
            it = u_given_v.emplace(at_v, m.condition(at_v).marginal(u)).first;
        }
        const JointDistribution u_given_vw = m.condition(at_vw);
        worst = std::max(worst, tv_distance(u_given_vw, it->second));
    } while (advance_index(index, mvw.spaces()));
    return worst;
}

bool is_markov_chain(const JointDistribution& d,
                     const std::vector<std::string>& u,
                     const std::vector<std::string>& v,
                     const std::vector<std::string>& w,
                     double tol) {
    if (!(tol > 0.0)) {
        throw ArgumentError("is_markov_chain: tolerance must be positive");
    }
    return markov_deviation(d, u, v, w) <= tol;
}

double independence_deviation(const JointDistribution& d,
                              const std::vector<std::string>& u,
                              const std::vector<std::string>& v) {
    check_disjoint_nonempty(d, {&u, &v});
    std::vector<std::string> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    const JointDistribution joint = d.marginal(uv);
    const JointDistribution product =
        JointDistribution::product(joint.marginal(u), joint.marginal(v));
    return tv_distance(joint, product);
}

}  // namespace ontic::prob
