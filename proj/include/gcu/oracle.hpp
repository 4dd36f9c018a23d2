#pragma once

// Brute-force reference procedures. Nothing here calls the fast closure,
// completion or decision code; only the term, equation-set and DAG types
// are shared.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "closure.hpp"
#include "completion.hpp"
#include "errors.hpp"
#include "gtes.hpp"

namespace gcu::oracle {

// Congruence closure by repeated full passes until nothing merges.
inline Partition naive_closure(const SubtermDag& dag, std::span<const std::pair<VertexId, VertexId>> tau) {
    const std::size_t n = dag.size();
    std::vector<std::uint32_t> label(n);
    std::vector<std::vector<VertexId>> members(n);
    for (std::size_t v = 0; v < n; ++v) {
        label[v] = static_cast<std::uint32_t>(v);
        members[v] = {static_cast<VertexId>(v)};
    }
    auto merge = [&](VertexId u, VertexId v) {
        auto a = label[u], b = label[v];
        if (a == b) return false;
        if (members[a].size() < members[b].size()) std::swap(a, b);
        for (auto w : members[b]) label[w] = a;
        members[a].insert(members[a].end(), members[b].begin(), members[b].end());
        members[b].clear();
        return true;
    };
    for (auto [u, v] : tau) merge(u, v);
    for (bool changed = true; changed;) {
        changed = false;
        std::map<std::vector<std::uint32_t>, VertexId> seen;
        for (VertexId v = 0; v < n; ++v) {
            std::vector<std::uint32_t> key{dag.label(v)};
            for (auto c : dag.children(v)) key.push_back(label[c]);
            auto [it, fresh] = seen.emplace(std::move(key), v);
            if (!fresh && merge(it->second, v)) changed = true;
        }
    }
    return Partition::from_labels(label);
}

// s ↔*_E t, decided on the subterms of E, s and t.
inline bool oracle_word(const Gtes& e, const Term& s, const Term& t) {
    SubtermDag dag;
    VertexRelation tau;
    for (const auto& eq : e) tau.emplace_back(dag.add(eq.lhs), dag.add(eq.rhs));
    auto vs = dag.add(s), vt = dag.add(t);
    return naive_closure(dag, tau).same(vs, vt);
}

inline constexpr std::size_t kDefaultTermCap = 20000;

// All ground terms of height <= h, grouped by exact height.
struct TermUniverse {
    std::vector<std::vector<Term>> by_height;

    std::size_t count() const {
        std::size_t n = 0;
        for (const auto& l : by_height) n += l.size();
        return n;
    }
};

namespace detail {
// Calls emit(indices) for every m-tuple over [0, hi) with at least one index
// in [lo, hi), in lexicographic order.
template <class F>
void for_each_tuple(std::size_t m, std::size_t lo, std::size_t hi, F&& emit) {
    if (hi == 0) return;
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
        bool fresh = false;
        for (auto i : idx) fresh = fresh || i >= lo;
        if (fresh) emit(idx);
        std::size_t p = m;
        while (p > 0 && ++idx[p - 1] == hi) idx[--p] = 0;
        if (p == 0) return;
    }
}

inline std::size_t tuple_count(std::size_t m, std::size_t lo, std::size_t hi, std::size_t cap) {
    auto pow_capped = [&](std::size_t b) {
        std::size_t r = 1;
        for (std::size_t i = 0; i < m; ++i) {
            r *= b;
            if (r > cap + hi) return cap + hi + 1;
        }
        return r;
    };
    auto all = pow_capped(hi), old = pow_capped(lo);
    return all > cap + hi ? cap + 1 : all - old;
}
}  // namespace detail

inline TermUniverse enumerate_terms(const Signature& sig, std::size_t max_height,
                                    std::size_t cap = kDefaultTermCap) {
    TermUniverse u;
    std::vector<const Term*> flat;
    std::size_t total = 0;
    for (std::size_t h = 0; h <= max_height; ++h) {
        std::size_t lo = h == 0 ? 0 : flat.size() - u.by_height.back().size();
        std::size_t hi = flat.size();
        std::vector<Term> level;
        for (SymbolId s = 0; s < sig.size(); ++s) {
            std::size_t m = sig.arity(s);
            if ((h == 0) != (m == 0)) continue;
            if (m == 0) {
                level.push_back(Term{s, {}});
                continue;
            }
            total += detail::tuple_count(m, lo, hi, cap);
            if (total + level.size() > cap) throw CapacityError("term universe exceeds cap");
            detail::for_each_tuple(m, lo, hi, [&](const std::vector<std::size_t>& idx) {
                Term t{s, {}};
                for (auto i : idx) t.children.push_back(*flat[i]);
                level.push_back(std::move(t));
            });
        }
        if (total + level.size() > cap) throw CapacityError("term universe exceeds cap");
        u.by_height.push_back(std::move(level));
        for (const auto& t : u.by_height.back()) flat.push_back(&t);
    }
    return u;
}

// First pair (s, t), in enumeration order, with height <= max_height,
// s ↔*_{E∪F} t, and s, t related by neither ↔*_E nor ↔*_F. Enumeration
// order is by height, then symbol order, then children in enumeration order.
// Only the first term of each (E, F, E∪F) class triple is kept, which finds
// the same first pair as the full enumeration.
inline std::optional<std::pair<Term, Term>> counterexample_search(const Signature& sig, const Gtes& e,
                                                                  const Gtes& f, std::size_t max_height,
                                                                  std::size_t cap = kDefaultTermCap) {
    SubtermDag dag;
    VertexRelation tau_e, tau_f;
    for (const auto& eq : e) tau_e.emplace_back(dag.add(eq.lhs), dag.add(eq.rhs));
    for (const auto& eq : f) tau_f.emplace_back(dag.add(eq.lhs), dag.add(eq.rhs));
    VertexRelation tau_u = tau_e;
    tau_u.insert(tau_u.end(), tau_f.begin(), tau_f.end());

    using Triple = std::tuple<ClassId, ClassId, ClassId>;
    std::vector<VertexId> reps;
    std::vector<Triple> rep_triple;
    std::size_t generated = 0;
    std::size_t level_start = 0;
    for (std::size_t h = 0; h <= max_height; ++h) {
        std::size_t lo = level_start, hi = reps.size();
        std::vector<VertexId> cand;
        for (SymbolId s = 0; s < sig.size(); ++s) {
            std::size_t m = sig.arity(s);
            if ((h == 0) != (m == 0)) continue;
            if (m == 0) {
                cand.push_back(dag.intern(s, {}));
                continue;
            }
            generated += detail::tuple_count(m, lo, hi, cap);
            if (generated > cap) throw CapacityError("counterexample search exceeds term cap");
            detail::for_each_tuple(m, lo, hi, [&](const std::vector<std::size_t>& idx) {
                std::vector<VertexId> kids;
                for (auto i : idx) kids.push_back(reps[i]);
                cand.push_back(dag.intern(s, kids));
            });
        }
        if (h == 0) generated += cand.size();
        if (generated > cap) throw CapacityError("counterexample search exceeds term cap");

        auto pe = naive_closure(dag, tau_e);
        auto pf = naive_closure(dag, tau_f);
        auto pu = naive_closure(dag, tau_u);
        std::set<Triple> seen;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            rep_triple[i] = {pe.find(reps[i]), pf.find(reps[i]), pu.find(reps[i])};
            seen.insert(rep_triple[i]);
        }
        level_start = reps.size();
        for (auto v : cand) {
            Triple t{pe.find(v), pf.find(v), pu.find(v)};
            if (seen.insert(t).second) {
                reps.push_back(v);
                rep_triple.push_back(t);
            }
        }
    }

    std::map<ClassId, std::vector<std::size_t>> by_union;
    for (std::size_t i = 0; i < reps.size(); ++i) by_union[std::get<2>(rep_triple[i])].push_back(i);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& [ei, fi, ui] = rep_triple[i];
        for (auto j : by_union[ui]) {
            if (j <= i) continue;
            if (std::get<0>(rep_triple[j]) != ei && std::get<1>(rep_triple[j]) != fi)
                return std::make_pair(dag.term(reps[i]), dag.term(reps[j]));
        }
    }
    return std::nullopt;
}

struct Counterexample {
    std::size_t height = 0;  // smallest bound at which a pair exists
    std::pair<Term, Term> pair;
};

// Runs counterexample_search with bounds 0, 1, ..., max_height and returns
// the first pair found, so a witness at a low height never needs the full
// universe at max_height. Empty result means none up to max_height.
inline std::optional<Counterexample> shallowest_counterexample(const Signature& sig, const Gtes& e, const Gtes& f,
                                                               std::size_t max_height,
                                                               std::size_t cap = kDefaultTermCap) {
    for (std::size_t h = 0; h <= max_height; ++h)
        if (auto w = counterexample_search(sig, e, f, h, cap)) return Counterexample{h, std::move(*w)};
    return std::nullopt;
}

namespace detail {
inline bool rewrite_once(const Gtrs& r, ExtTerm& t) {
    for (auto& c : t.children)
        if (rewrite_once(r, c)) return true;
    if (t.is_class) return false;
    RuleKey key{t.id, {}};
    for (const auto& c : t.children) {
        if (!c.is_class) return false;
        key.args.push_back(c.id);
    }
    auto it = std::find_if(r.begin(), r.end(), [&](const auto& rule) { return rule.first == key; });
    if (it == r.end()) return false;
    t = ExtTerm::constant(it->second);
    return true;
}

inline ExtTerm reduce(const Gtrs& r, ExtTerm t) {
    while (rewrite_once(r, t)) {
    }
    return t;
}

struct ContextSearch {
    const Signature& sig;
    const Gtrs& r;
    std::size_t classes;
    ClassId target;
    std::size_t budget;

    bool dfs(const ExtTerm& t, std::size_t depth) {
        if (budget-- == 0) throw CapacityError("context enumeration exceeds cap");
        auto nf = reduce(r, t);
        if (depth >= 1 && nf.is_class && nf.id == target) return true;
        if (depth == classes || !nf.is_class) return false;
        for (SymbolId s = 0; s < sig.size(); ++s) {
            std::size_t m = sig.arity(s);
            if (m == 0) continue;
            for (std::size_t hole = 0; hole < m; ++hole) {
                std::vector<std::size_t> fill(m - 1, 1);
                for (;;) {
                    ExtTerm w{false, s, {}};
                    for (std::size_t i = 0, j = 0; i < m; ++i)
                        w.children.push_back(i == hole ? t : ExtTerm::constant(static_cast<ClassId>(fill[j++])));
                    if (dfs(w, depth + 1)) return true;
                    std::size_t p = fill.size();
                    while (p > 0 && ++fill[p - 1] > classes) fill[--p] = 1;
                    if (p == 0) break;
                }
            }
        }
        return false;
    }
};
}  // namespace detail

// Whether some non-empty context δ of hole depth <= class_count rewrites
// δ[b] to a under r. Fillers are class constants.
inline bool context_reachability(const Signature& sig, const Gtrs& r, std::size_t class_count, ClassId a,
                                 ClassId b, std::size_t cap = 1'000'000) {
    detail::ContextSearch s{sig, r, class_count, a, cap};
    return s.dfs(ExtTerm::constant(b), 0);
}

}  // namespace gcu::oracle
