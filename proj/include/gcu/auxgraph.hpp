#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "completion.hpp"

namespace gcu {

// Per union-class attributes. Index i describes class i + 1.
struct AuxVertex {
    bool equal_e = false;  // the union class is a single E-class
    bool equal_f = false;
    bool keeps_e = false;  // every union rule into it is matched by all E-rule combinations
    bool keeps_f = false;
    std::vector<ClassId> adj;  // ascending, deduplicated
};

struct AuxGraph {
    std::vector<AuxVertex> vertices;

    std::size_t size() const { return vertices.size(); }
    const AuxVertex& at(ClassId a) const { return vertices.at(a - 1); }
};

// Union rule annotated with how many distinct E- and F-rules map onto it.
struct UnionRuleInfo {
    ClassId rhs = 0;
    std::size_t counter_e = 0;
    std::size_t counter_f = 0;
};

struct Cad {
    SubtermDag dag;
    VertexRelation tau_e, tau_f;
    Completion e;      // R⟨E,F⟩
    Completion f;      // R⟨F,E⟩
    Completion u;      // R⟨E∪F⟩
    std::set<std::pair<ClassId, ClassId>> inc_e;  // (union class, E-class inside it)
    std::set<std::pair<ClassId, ClassId>> inc_f;
    std::vector<std::size_t> num_e;  // index union class - 1
    std::vector<std::size_t> num_f;
    std::vector<ClassId> union_of_e;  // index E-class - 1
    std::vector<ClassId> union_of_f;
    std::map<RuleKey, UnionRuleInfo> union_rules;
    AuxGraph aux;
};

namespace detail {
// Whether the product of num over args equals count, without overflow.
inline bool product_equals(const std::vector<ClassId>& args, const std::vector<std::size_t>& num,
                           std::size_t count) {
    std::size_t prod = 1;
    for (auto a : args) {
        prod *= num[a - 1];
        if (prod > count) return false;
    }
    return prod == count;
}
}  // namespace detail

// Completes E, F and E ∪ F on one shared DAG and derives the AUX graph.
inline Cad cad(const Gtes& e, const Gtes& f) {
    Cad out;
    {
        auto b = build_dag(e, f);
        out.dag = std::move(b.dag);
        out.tau_e = std::move(b.tau_e);
        out.tau_f = std::move(b.tau_f);
    }
    VertexRelation tau_u = out.tau_e;
    tau_u.insert(tau_u.end(), out.tau_f.begin(), out.tau_f.end());
    out.e = fgc(out.dag, out.tau_e);
    out.f = fgc(out.dag, out.tau_f);
    out.u = fgc(out.dag, tau_u);

    const auto& pu = out.u.partition;
    const std::size_t k = pu.class_count();
    auto map_classes = [&](const Completion& side, std::set<std::pair<ClassId, ClassId>>& inc,
                           std::vector<std::size_t>& num, std::vector<ClassId>& up) {
        num.assign(k, 0);
        up.assign(side.partition.class_count(), 0);
        for (ClassId c = 1; c <= side.partition.class_count(); ++c) {
            ClassId a = pu.find(side.partition.representative(c));
            up[c - 1] = a;
            if (inc.emplace(a, c).second) ++num[a - 1];
        }
    };
    map_classes(out.e, out.inc_e, out.num_e, out.union_of_e);
    map_classes(out.f, out.inc_f, out.num_f, out.union_of_f);

    for (const auto& [key, rhs] : out.u.rules) out.union_rules.emplace(key, UnionRuleInfo{rhs, 0, 0});
    auto count_into = [&](const Completion& side, const std::vector<ClassId>& up, bool is_e) {
        for (const auto& [key, rhs] : side.rules) {
            RuleKey uk{key.symbol, {}};
            for (auto b : key.args) uk.args.push_back(up[b - 1]);
            auto it = out.union_rules.find(uk);
            if (it == out.union_rules.end()) throw InternalError("side rule without union rule");
            ++(is_e ? it->second.counter_e : it->second.counter_f);
        }
    };
    count_into(out.e, out.union_of_e, true);
    count_into(out.f, out.union_of_f, false);

    out.aux.vertices.resize(k);
    for (ClassId a = 1; a <= k; ++a) {
        auto& v = out.aux.vertices[a - 1];
        v.equal_e = out.num_e[a - 1] == 1;
        v.equal_f = out.num_f[a - 1] == 1;
        v.keeps_e = v.keeps_f = true;
    }
    for (const auto& [key, info] : out.union_rules) {
        auto& v = out.aux.vertices[info.rhs - 1];
        if (!detail::product_equals(key.args, out.num_e, info.counter_e)) v.keeps_e = false;
        if (!detail::product_equals(key.args, out.num_f, info.counter_f)) v.keeps_f = false;
    }
    for (const auto& [a, b] : out.u.backsteps) out.aux.vertices[a - 1].adj.push_back(b);
    return out;
}

// Vertices reachable from a by a walk of length at least one.
inline std::vector<ClassId> positive_step_reachable(const AuxGraph& g, ClassId a) {
    std::vector<char> seen(g.size() + 1, 0);
    std::vector<ClassId> stack(g.at(a).adj.begin(), g.at(a).adj.end());
    std::vector<ClassId> out;
    while (!stack.empty()) {
        auto b = stack.back();
        stack.pop_back();
        if (seen[b]) continue;
        seen[b] = 1;
        out.push_back(b);
        for (auto c : g.at(b).adj)
            if (!seen[c]) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// One line per vertex: name equal_E equal_F keeps_E keeps_F -> successors.
inline std::string dump(const AuxGraph& g) {
    std::ostringstream os;
    for (ClassId a = 1; a <= g.size(); ++a) {
        const auto& v = g.at(a);
        os << a << ' ' << v.equal_e << ' ' << v.equal_f << ' ' << v.keeps_e << ' ' << v.keeps_f
           << " ->";
        for (std::size_t i = 0; i < v.adj.size(); ++i) os << (i ? "," : " ") << v.adj[i];
        os << '\n';
    }
    return os.str();
}

}  // namespace gcu
