#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "signature.hpp"
#include "term.hpp"

namespace gcu {

struct Equation {
    Term lhs;
    Term rhs;

    std::strong_ordering operator<=>(const Equation&) const = default;
    bool operator==(const Equation&) const = default;
};

// Finite set of ground equations.
class Gtes {
public:
    Gtes() = default;
    Gtes(std::initializer_list<Equation> eqs) {
        for (const auto& e : eqs) insert(e);
    }

    // False when the equation was already present.
    bool insert(Equation e) { return eqs_.insert(std::move(e)).second; }
    bool insert(Term l, Term r) { return insert(Equation{std::move(l), std::move(r)}); }

    std::size_t count() const { return eqs_.size(); }
    bool empty() const { return eqs_.empty(); }
    auto begin() const { return eqs_.begin(); }
    auto end() const { return eqs_.end(); }
    bool contains(const Equation& e) const { return eqs_.count(e) != 0; }

    bool operator==(const Gtes&) const = default;

private:
    std::set<Equation> eqs_;
};

// Sum of both sides' sizes over all equations.
inline std::size_t size(const Gtes& e) {
    std::size_t n = 0;
    for (const auto& eq : e) n += size(eq.lhs) + size(eq.rhs);
    return n;
}

inline Gtes unite(const Gtes& a, const Gtes& b) {
    Gtes out = a;
    for (const auto& eq : b) out.insert(eq);
    return out;
}

inline std::set<Term> st(const Gtes& e) {
    std::set<Term> out;
    for (const auto& eq : e) {
        detail::collect_subterms(eq.lhs, out);
        detail::collect_subterms(eq.rhs, out);
    }
    return out;
}

struct SignatureFlag {
    std::vector<SymbolId> used;  // ascending
    bool flag = false;           // every symbol of the signature occurs
};

namespace detail {
inline void mark_symbols(const Term& t, std::vector<char>& seen) {
    if (t.symbol < seen.size()) seen[t.symbol] = 1;
    for (const auto& c : t.children) mark_symbols(c, seen);
}
}  // namespace detail

inline SignatureFlag signature_flag(const Signature& sig, const Gtes& e, const Gtes& f) {
    std::vector<char> seen(sig.size(), 0);
    for (const Gtes* g : {&e, &f})
        for (const auto& eq : *g) {
            detail::mark_symbols(eq.lhs, seen);
            detail::mark_symbols(eq.rhs, seen);
        }
    SignatureFlag out;
    for (SymbolId s = 0; s < seen.size(); ++s)
        if (seen[s]) out.used.push_back(s);
    out.flag = out.used.size() == sig.size();
    return out;
}

using VertexId = std::uint32_t;
using VertexRelation = std::vector<std::pair<VertexId, VertexId>>;

namespace detail {
struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : k) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};
}  // namespace detail

// Hash-consed subterm graph: one vertex per distinct term, children ordered.
class SubtermDag {
public:
    std::size_t size() const { return labels_.size(); }
    SymbolId label(VertexId v) const { return labels_.at(v); }
    std::span<const VertexId> children(VertexId v) const {
        const auto& c = children_.at(v);
        return {c.data(), c.size()};
    }
    std::size_t arity(VertexId v) const { return children_.at(v).size(); }

    VertexId intern(SymbolId s, std::span<const VertexId> kids) {
        std::vector<std::uint32_t> key;
        key.reserve(kids.size() + 1);
        key.push_back(s);
        key.insert(key.end(), kids.begin(), kids.end());
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        for (auto k : kids)
            if (k >= labels_.size()) throw std::out_of_range("child vertex out of range");
        auto v = static_cast<VertexId>(labels_.size());
        labels_.push_back(s);
        children_.emplace_back(kids.begin(), kids.end());
        index_.emplace(std::move(key), v);
        return v;
    }

    VertexId add(const Term& t) {
        std::vector<VertexId> kids;
        kids.reserve(t.children.size());
        for (const auto& c : t.children) kids.push_back(add(c));
        return intern(t.symbol, kids);
    }

    std::optional<VertexId> find(const Term& t) const {
        std::vector<std::uint32_t> key{t.symbol};
        for (const auto& c : t.children) {
            auto v = find(c);
            if (!v) return std::nullopt;
            key.push_back(*v);
        }
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<VertexId> find(SymbolId s, std::span<const VertexId> kids) const {
        std::vector<std::uint32_t> key{s};
        key.insert(key.end(), kids.begin(), kids.end());
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // The term denoted by vertex v.
    Term term(VertexId v) const {
        Term t{label(v), {}};
        for (auto c : children(v)) t.children.push_back(term(c));
        return t;
    }

private:
    std::vector<SymbolId> labels_;
    std::vector<std::vector<VertexId>> children_;
    std::unordered_map<std::vector<std::uint32_t>, VertexId, detail::KeyHash> index_;
};

struct DagBuild {
    SubtermDag dag;
    VertexRelation tau_e;
    VertexRelation tau_f;
};

// Vertices are exactly ST(E ∪ F); tau_e / tau_f are the equation pairs.
inline DagBuild build_dag(const Gtes& e, const Gtes& f) {
    DagBuild out;
    for (const auto& eq : e) out.tau_e.emplace_back(out.dag.add(eq.lhs), out.dag.add(eq.rhs));
    for (const auto& eq : f) out.tau_f.emplace_back(out.dag.add(eq.lhs), out.dag.add(eq.rhs));
    return out;
}

}  // namespace gcu
