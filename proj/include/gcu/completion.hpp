#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "closure.hpp"
#include "errors.hpp"
#include "gtes.hpp"

namespace gcu {

struct ClassConstant {
    ClassId name = 0;
    std::size_t cardinality = 0;
};

// Left-hand side σ(c1,...,cm) of a flat rule.
struct RuleKey {
    SymbolId symbol = 0;
    std::vector<ClassId> args;
    auto operator<=>(const RuleKey&) const = default;
    bool operator==(const RuleKey&) const = default;
};

struct Rule {
    RuleKey lhs;
    ClassId rhs = 0;
    bool operator==(const Rule&) const = default;
};

// Flat ground rewrite system over Σ ∪ C, at most one rule per left side.
class Gtrs {
public:
    // Inserts unless the left side exists; returns the stored right side.
    ClassId add(RuleKey lhs, ClassId rhs) { return rules_.emplace(std::move(lhs), rhs).first->second; }

    std::optional<ClassId> lookup(const RuleKey& lhs) const {
        auto it = rules_.find(lhs);
        if (it == rules_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<ClassId> lookup(SymbolId s, std::vector<ClassId> args) const {
        return lookup(RuleKey{s, std::move(args)});
    }

    std::size_t count() const { return rules_.size(); }
    bool empty() const { return rules_.empty(); }
    auto begin() const { return rules_.begin(); }
    auto end() const { return rules_.end(); }

    std::vector<Rule> rules() const {
        std::vector<Rule> out;
        for (const auto& [k, r] : rules_) out.push_back({k, r});
        return out;
    }

    bool operator==(const Gtrs&) const = default;

private:
    std::map<RuleKey, ClassId> rules_;
};

// Sum over rules of size(lhs) + size(rhs).
inline std::size_t size(const Gtrs& r) {
    std::size_t n = 0;
    for (const auto& [k, rhs] : r) n += k.args.size() + 2;
    return n;
}

// Pairs (a, b): b is an argument of a rule whose right side is a.
using BackSteps = std::set<std::pair<ClassId, ClassId>>;

struct Completion {
    Partition partition;
    std::vector<ClassConstant> constants;  // constants[i].name == i + 1
    Gtrs rules;
    BackSteps backsteps;
};

// Rules and back-steps read off a finished partition of the DAG.
inline Completion complete_from(const SubtermDag& dag, Partition p) {
    Completion c;
    for (ClassId k = 1; k <= p.class_count(); ++k) c.constants.push_back({k, p.cardinality(k)});
    for (VertexId v = 0; v < dag.size(); ++v) {
        RuleKey key{dag.label(v), {}};
        for (auto ch : dag.children(v)) key.args.push_back(p.find(ch));
        ClassId rhs = p.find(v);
        for (auto a : key.args) c.backsteps.emplace(rhs, a);
        c.rules.add(std::move(key), rhs);
    }
    c.partition = std::move(p);
    return c;
}

// Completion of tau over a prebuilt DAG.
inline Completion fgc(const SubtermDag& dag, std::span<const std::pair<VertexId, VertexId>> tau) {
    return complete_from(dag, congruence_closure(dag, tau));
}

// R⟨E,F⟩: E completed over the subterms of E ∪ F.
inline Completion fgc(const Gtes& e, const Gtes& f) {
    auto b = build_dag(e, f);
    return fgc(b.dag, b.tau_e);
}

// Whether every σ(c1..cm) over Σ and C has a rule. `flag` says every
// symbol of Σ occurs in the systems.
inline bool is_total(const Signature& sig, bool flag, std::size_t class_count, const Gtrs& r) {
    if (!flag || r.empty()) return false;
    std::vector<std::size_t> per_symbol(sig.size(), 0);
    for (const auto& [k, rhs] : r)
        if (k.symbol < per_symbol.size()) ++per_symbol[k.symbol];
    for (SymbolId s = 0; s < sig.size(); ++s) {
        std::size_t need = 1;
        for (std::size_t i = 0; i < sig.arity(s); ++i) {
            need *= class_count;
            if (need > per_symbol[s]) return false;
        }
        if (need > per_symbol[s]) return false;
    }
    return true;
}

inline bool is_total(const Signature& sig, bool flag, const Completion& c) {
    return is_total(sig, flag, c.constants.size(), c.rules);
}

// No left side reduces under the other rules and no right side is reducible.
inline bool is_reduced(const Gtrs& r, std::size_t class_count) {
    for (const auto& [k, rhs] : r) {
        if (rhs == 0 || rhs > class_count) return false;
        for (auto a : k.args)
            if (a == 0 || a > class_count) return false;
    }
    // Proper subterms of a flat left side are class constants, which no rule
    // rewrites, and left sides are unique keys.
    return true;
}

// Term over Σ ∪ C.
struct ExtTerm {
    bool is_class = false;
    std::uint32_t id = 0;  // SymbolId, or ClassId when is_class
    std::vector<ExtTerm> children;

    static ExtTerm constant(ClassId c) { return ExtTerm{true, c, {}}; }
    static ExtTerm from(const Term& t) {
        ExtTerm e{false, t.symbol, {}};
        for (const auto& c : t.children) e.children.push_back(from(c));
        return e;
    }
    auto operator<=>(const ExtTerm&) const = default;
    bool operator==(const ExtTerm&) const = default;
};

inline std::size_t size(const ExtTerm& t) {
    std::size_t n = 1;
    for (const auto& c : t.children) n += size(c);
    return n;
}

inline std::string to_string(const Signature& sig, const ExtTerm& t) {
    if (t.is_class) return "[" + std::to_string(t.id) + "]";
    std::string out = sig.name(t.id);
    if (t.children.empty()) return out;
    out += '(';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ',';
        out += to_string(sig, t.children[i]);
    }
    return out + ')';
}

namespace detail {
inline ExtTerm normalize(const Gtrs& r, const ExtTerm& t, std::size_t& budget) {
    if (t.is_class) return t;
    ExtTerm out{false, t.id, {}};
    out.children.reserve(t.children.size());
    bool flat = true;
    for (const auto& c : t.children) {
        out.children.push_back(normalize(r, c, budget));
        flat = flat && out.children.back().is_class;
    }
    if (!flat) return out;
    RuleKey key{t.id, {}};
    for (const auto& c : out.children) key.args.push_back(c.id);
    if (auto rhs = r.lookup(key)) {
        if (budget == 0) throw InternalError("normal form step bound exceeded");
        --budget;
        return ExtTerm::constant(*rhs);
    }
    return out;
}
}  // namespace detail

// Innermost normal form. Every step shrinks the term, so the bound
// 10·size·(|R|+1) is never reached by a well-formed system.
inline ExtTerm normal_form(const Gtrs& r, const ExtTerm& t) {
    std::size_t budget = 10 * size(t) * (r.count() + 1);
    return detail::normalize(r, t, budget);
}

inline ExtTerm normal_form(const Gtrs& r, const Term& t) { return normal_form(r, ExtTerm::from(t)); }

// Decides s ↔*_E t by completing E against F ∪ {s≐s, t≐t}.
inline bool word_problem(const Gtes& e, const Gtes& f, const Term& s, const Term& t) {
    Gtes g = f;
    g.insert(s, s);
    g.insert(t, t);
    auto c = fgc(e, g);
    return normal_form(c.rules, s) == normal_form(c.rules, t);
}

}  // namespace gcu
