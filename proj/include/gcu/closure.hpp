#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gtes.hpp"

namespace gcu {

using ClassId = std::uint32_t;  // 1-based class name

// Final equivalence on DAG vertices. Classes are named 1..k in ascending
// order of their smallest vertex.
class Partition {
public:
    Partition() = default;

    // root_of[v] is any label; vertices sharing a label share a class.
    static Partition from_labels(std::span<const std::uint32_t> root_of) {
        Partition p;
        p.class_of_.resize(root_of.size());
        std::unordered_map<std::uint32_t, ClassId> names;
        for (std::size_t v = 0; v < root_of.size(); ++v) {
            auto [it, fresh] = names.emplace(root_of[v], static_cast<ClassId>(names.size() + 1));
            if (fresh) {
                p.representative_.push_back(static_cast<VertexId>(v));
                p.cardinality_.push_back(0);
            }
            p.class_of_[v] = it->second;
            ++p.cardinality_[it->second - 1];
        }
        return p;
    }

    ClassId find(VertexId v) const {
        if (v >= class_of_.size())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        return class_of_[v];
    }
    bool same(VertexId u, VertexId v) const { return find(u) == find(v); }

    std::size_t vertex_count() const { return class_of_.size(); }
    std::size_t class_count() const { return representative_.size(); }
    std::size_t cardinality(ClassId c) const { return cardinality_.at(c - 1); }
    VertexId representative(ClassId c) const { return representative_.at(c - 1); }
    const std::vector<ClassId>& names() const { return class_of_; }

    bool operator==(const Partition&) const = default;

private:
    std::vector<ClassId> class_of_;
    std::vector<VertexId> representative_;
    std::vector<std::size_t> cardinality_;
};

// Union-find with union by size and path compression.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        std::uint32_t r = x;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[x] != r) {
            auto next = parent_[x];
            parent_[x] = r;
            x = next;
        }
        return r;
    }
    // Returns the surviving root, or the common root if already joined.
    std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }
    // Attach root `from` under root `to`.
    void link(std::uint32_t from, std::uint32_t to) {
        parent_[from] = to;
        size_[to] += size_[from];
    }
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::size_t> size_;
};

// Congruence closure of tau over the DAG (use-lists plus signature table).
inline Partition congruence_closure(const SubtermDag& dag, std::span<const std::pair<VertexId, VertexId>> tau) {
    const std::size_t n = dag.size();
    UnionFind uf(n);
    std::vector<std::vector<VertexId>> uses(n);
    for (VertexId v = 0; v < n; ++v)
        for (auto c : dag.children(v)) uses[c].push_back(v);
    for (auto& u : uses) {
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
    }

    using Key = std::vector<std::uint32_t>;
    std::unordered_map<Key, VertexId, detail::KeyHash> table;
    auto key_of = [&](VertexId v) {
        Key k;
        k.reserve(dag.arity(v) + 1);
        k.push_back(dag.label(v));
        for (auto c : dag.children(v)) k.push_back(uf.find(c));
        return k;
    };

    std::vector<std::pair<VertexId, VertexId>> pending(tau.begin(), tau.end());
    for (VertexId v = 0; v < n; ++v) {
        if (dag.arity(v) == 0) continue;
        auto [it, fresh] = table.emplace(key_of(v), v);
        if (!fresh) pending.emplace_back(v, it->second);
    }

    while (!pending.empty()) {
        auto [a, b] = pending.back();
        pending.pop_back();
        auto ra = uf.find(a), rb = uf.find(b);
        if (ra == rb) continue;
        // Weight is the use-list length; the lighter class is absorbed and
        // only its parents change signature.
        if (uses[ra].size() > uses[rb].size()) std::swap(ra, rb);
        auto moved = std::move(uses[ra]);
        uses[ra].clear();
        for (auto p : moved) {
            auto it = table.find(key_of(p));
            if (it != table.end() && it->second == p) table.erase(it);
        }
        uf.link(ra, rb);
        for (auto p : moved) {
            auto [it, fresh] = table.emplace(key_of(p), p);
            if (!fresh && uf.find(it->second) != uf.find(p)) pending.emplace_back(p, it->second);
        }
        uses[rb].insert(uses[rb].end(), moved.begin(), moved.end());
    }

    std::vector<std::uint32_t> roots(n);
    for (VertexId v = 0; v < n; ++v) roots[v] = uf.find(v);
    return Partition::from_labels(roots);
}

}  // namespace gcu
