#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "auxgraph.hpp"

namespace gcu {

enum class Side { E, F };

enum class CaseKind { BothTotal, Unary, OneTotalHigherArity, NoneTotalHigherArity };

enum class Which { E, F, Both, Neither };

struct MainCase {
    CaseKind kind = CaseKind::NoneTotalHigherArity;
    Which which_total = Which::Neither;
    bool operator==(const MainCase&) const = default;
};

inline std::string to_string(CaseKind k) {
    switch (k) {
        case CaseKind::BothTotal: return "BothTotal";
        case CaseKind::Unary: return "Unary";
        case CaseKind::OneTotalHigherArity: return "OneTotalHigherArity";
        case CaseKind::NoneTotalHigherArity: return "NoneTotalHigherArity";
    }
    return "?";
}

inline std::string to_string(Side s) { return s == Side::E ? "E" : "F"; }

inline std::string to_string(Which w) {
    switch (w) {
        case Which::E: return "E";
        case Which::F: return "F";
        case Which::Both: return "both";
        case Which::Neither: return "neither";
    }
    return "?";
}

inline MainCase classify(const Signature& sig, bool total_e, bool total_f) {
    Which w = total_e ? (total_f ? Which::Both : Which::E) : (total_f ? Which::F : Which::Neither);
    if (w == Which::Both) return {CaseKind::BothTotal, w};
    if (sig.is_unary()) return {CaseKind::Unary, w};
    if (w != Which::Neither) return {CaseKind::OneTotalHigherArity, w};
    return {CaseKind::NoneTotalHigherArity, w};
}

// Outcome of one structural check. On failure `at` is the offending union
// class and `witness` the class or equation index that exposed it.
struct CheckResult {
    bool ok = true;
    ClassId at = 0;
    ClassId witness = 0;
    std::string reason;

    static CheckResult pass() { return {}; }
    static CheckResult fail(ClassId a, ClassId w, std::string why) { return {false, a, w, std::move(why)}; }
};

namespace detail {
inline bool equal_on(const AuxVertex& v, Side s) { return s == Side::E ? v.equal_e : v.equal_f; }
inline bool keeps_on(const AuxVertex& v, Side s) { return s == Side::E ? v.keeps_e : v.keeps_f; }

// DFS from the successors of a with marks stamped `session`. Returns the
// first vertex lacking keeps on side s, or 0.
inline ClassId first_not_keeping(const AuxGraph& g, ClassId a, Side s, std::vector<std::size_t>& mark,
                                 std::size_t session, std::vector<std::size_t>* visits) {
    std::vector<ClassId> stack(g.at(a).adj.rbegin(), g.at(a).adj.rend());
    while (!stack.empty()) {
        auto b = stack.back();
        stack.pop_back();
        if (mark[b] == session) continue;
        mark[b] = session;
        if (visits) ++(*visits)[b];
        const auto& v = g.at(b);
        if (!keeps_on(v, s)) return b;
        for (auto it = v.adj.rbegin(); it != v.adj.rend(); ++it)
            if (mark[*it] != session) stack.push_back(*it);
    }
    return 0;
}
}  // namespace detail

struct NpdfsStats {
    std::size_t outer_visits = 0;
    std::size_t max_inner_visits = 0;  // per vertex, per outer vertex
};

// Union is a congruence iff for every vertex a one side has equal(a) and
// keeps on everything reachable from a in at least one step.
inline CheckResult npdfs(const AuxGraph& g, NpdfsStats* stats = nullptr) {
    const std::size_t k = g.size();
    std::vector<std::size_t> mark(k + 1, 0);
    std::vector<std::size_t> visits;
    std::size_t session = 0;
    for (ClassId a = 1; a <= k; ++a) {
        const auto& v = g.at(a);
        if (stats) {
            ++stats->outer_visits;
            visits.assign(k + 1, 0);
        }
        auto* vp = stats ? &visits : nullptr;
        if (!v.equal_e && !v.equal_f) return CheckResult::fail(a, a, "class splits on both sides");
        bool ok = false;
        ClassId bad = 0;
        if (v.equal_e) {
            bad = detail::first_not_keeping(g, a, Side::E, mark, ++session, vp);
            ok = bad == 0;
        }
        if (!ok && v.equal_f) {
            auto b = detail::first_not_keeping(g, a, Side::F, mark, ++session, vp);
            ok = b == 0;
            if (bad == 0) bad = b;
        }
        if (!ok) return CheckResult::fail(a, bad, "reachable class does not keep");
        if (stats)
            for (auto c : visits) stats->max_inner_visits = std::max(stats->max_inner_visits, c);
    }
    return CheckResult::pass();
}

// Every union class is a single E-class or a single F-class.
inline CheckResult case2_check(const AuxGraph& g) {
    for (ClassId a = 1; a <= g.size(); ++a) {
        const auto& v = g.at(a);
        if (!v.equal_e && !v.equal_f) return CheckResult::fail(a, a, "class splits on both sides");
    }
    return CheckResult::pass();
}

// Linear check when R on side `total` is total: each class not equal on the
// total side must only reach classes keeping on the other side.
inline CheckResult pdfs(const AuxGraph& g, Side total) {
    const Side other = total == Side::E ? Side::F : Side::E;
    if (auto c2 = case2_check(g); !c2.ok) return c2;
    std::vector<char> visited(g.size() + 1, 0);
    for (ClassId a = 1; a <= g.size(); ++a) {
        if (detail::equal_on(g.at(a), total)) continue;
        std::vector<ClassId> stack(g.at(a).adj.rbegin(), g.at(a).adj.rend());
        while (!stack.empty()) {
            auto b = stack.back();
            stack.pop_back();
            if (visited[b]) continue;
            visited[b] = 1;
            const auto& v = g.at(b);
            if (!detail::keeps_on(v, other)) return CheckResult::fail(a, b, "reachable class does not keep");
            for (auto it = v.adj.rbegin(); it != v.adj.rend(); ++it)
                if (!visited[*it]) stack.push_back(*it);
        }
    }
    return CheckResult::pass();
}

// E ⊆ ↔*_F or F ⊆ ↔*_E. On failure `at`/`witness` are the 1-based indices of
// the first uncovered E- and F-equation.
inline CheckResult case4_check(const VertexRelation& tau_e, const VertexRelation& tau_f,
                               const Partition& rho_e, const Partition& rho_f) {
    auto first_uncovered = [](const VertexRelation& tau, const Partition& rho) -> ClassId {
        for (std::size_t i = 0; i < tau.size(); ++i)
            if (!rho.same(tau[i].first, tau[i].second)) return static_cast<ClassId>(i + 1);
        return 0;
    };
    ClassId e_out = first_uncovered(tau_e, rho_f);
    if (e_out == 0) return CheckResult::pass();
    ClassId f_out = first_uncovered(tau_f, rho_e);
    if (f_out == 0) return CheckResult::pass();
    return CheckResult::fail(e_out, f_out, "neither system is contained in the other");
}

struct DecisionStats {
    std::size_t n = 0;  // size(E) + size(F)
    std::size_t vertices = 0;
    std::size_t classes_e = 0, classes_f = 0, classes_u = 0;
    bool total_e = false, total_f = false, total_u = false;
};

struct Verdict {
    bool union_is_congruence = false;
    MainCase main_case;
    CheckResult check;
    std::string diagnostic;  // empty on a yes verdict
    DecisionStats stats;
};

namespace detail {
inline std::string class_text(const Signature& sig, const Cad& c, ClassId a) {
    return "[" + to_string(sig, c.dag.term(c.u.partition.representative(a))) + "]";
}

inline std::string explain(const Signature& sig, const Cad& c, const MainCase& mc,
                           const CheckResult& r, const Gtes& e, const Gtes& f) {
    if (r.ok) return {};
    if (mc.kind == CaseKind::NoneTotalHigherArity) {
        auto nth = [&](const Gtes& g, std::size_t i) {
            auto it = g.begin();
            std::advance(it, static_cast<std::ptrdiff_t>(i - 1));
            return to_string(sig, it->lhs) + " = " + to_string(sig, it->rhs);
        };
        return "E equation " + nth(e, r.at) + " does not hold in F and F equation " +
               nth(f, r.witness) + " does not hold in E";
    }
    if (r.at == r.witness && r.reason == "class splits on both sides")
        return "union class " + class_text(sig, c, r.at) + " splits into several E-classes and several F-classes";
    return "union class " + class_text(sig, c, r.at) + " reaches " + class_text(sig, c, r.witness) +
           ", which does not keep its rules";
}
}  // namespace detail

inline Verdict decide_union(const Signature& sig, const Cad& c, const Gtes& e, const Gtes& f) {
    Verdict v;
    const bool flag = signature_flag(sig, e, f).flag;
    v.stats.n = size(e) + size(f);
    v.stats.vertices = c.dag.size();
    v.stats.classes_e = c.e.constants.size();
    v.stats.classes_f = c.f.constants.size();
    v.stats.classes_u = c.u.constants.size();
    v.stats.total_e = is_total(sig, flag, c.e);
    v.stats.total_f = is_total(sig, flag, c.f);
    v.stats.total_u = is_total(sig, flag, c.u);
    v.main_case = classify(sig, v.stats.total_e, v.stats.total_f);
    switch (v.main_case.kind) {
        case CaseKind::BothTotal: v.check = case2_check(c.aux); break;
        case CaseKind::Unary: v.check = npdfs(c.aux); break;
        case CaseKind::OneTotalHigherArity:
            v.check = pdfs(c.aux, v.main_case.which_total == Which::E ? Side::E : Side::F);
            break;
        case CaseKind::NoneTotalHigherArity:
            v.check = case4_check(c.tau_e, c.tau_f, c.e.partition, c.f.partition);
            break;
    }
    v.union_is_congruence = v.check.ok;
    v.diagnostic = detail::explain(sig, c, v.main_case, v.check, e, f);
    return v;
}

inline Verdict decide_union(const Signature& sig, const Gtes& e, const Gtes& f) {
    return decide_union(sig, cad(e, f), e, f);
}

}  // namespace gcu
