#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gcu/gcu.hpp"

namespace testing_support {

inline gcu::Problem corpus_problem(const std::string& file) {
    std::ifstream in(std::filesystem::path(GCU_CORPUS_DIR) / file);
    if (!in) throw std::runtime_error("missing corpus file " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return gcu::parse_problem(ss.str());
}

// Rule written with symbolic class labels, e.g. {"f", {"#"}, "f#"}.
struct LabeledRule {
    std::string symbol;
    std::vector<std::string> args;
    std::string rhs;
};

// Whether some bijection from labels to class names turns `expected` into
// exactly the rules of `actual`.
inline bool same_up_to_renaming(const gcu::Signature& sig, const gcu::Gtrs& actual, std::size_t classes,
                                const std::vector<LabeledRule>& expected) {
    std::set<std::string> label_set;
    for (const auto& r : expected) {
        label_set.insert(r.rhs);
        label_set.insert(r.args.begin(), r.args.end());
    }
    if (label_set.size() != classes || expected.size() != actual.count()) return false;
    std::vector<std::string> labels(label_set.begin(), label_set.end());
    std::vector<gcu::ClassId> perm(classes);
    std::iota(perm.begin(), perm.end(), 1u);
    do {
        std::map<std::string, gcu::ClassId> name;
        for (std::size_t i = 0; i < labels.size(); ++i) name[labels[i]] = perm[i];
        bool all = true;
        for (const auto& r : expected) {
            auto s = sig.lookup(r.symbol);
            if (!s) return false;
            std::vector<gcu::ClassId> args;
            for (const auto& a : r.args) args.push_back(name[a]);
            auto got = actual.lookup(*s, args);
            if (!got || *got != name[r.rhs]) {
                all = false;
                break;
            }
        }
        if (all) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Union class (1-based) containing the term written as `text`.
inline gcu::ClassId union_class(const gcu::Problem& p, const gcu::Cad& c, const std::string& text) {
    auto v = c.dag.find(gcu::parse_term(p.sig, text));
    if (!v) throw std::runtime_error("term not in W: " + text);
    return c.u.partition.find(*v);
}

// Sorted list of classes as sorted lists of printed terms.
inline std::vector<std::vector<std::string>> classes_as_text(const gcu::Signature& sig, const gcu::SubtermDag& dag,
                                                             const gcu::Partition& p) {
    std::vector<std::vector<std::string>> out(p.class_count());
    for (gcu::VertexId v = 0; v < dag.size(); ++v) out[p.find(v) - 1].push_back(gcu::to_string(sig, dag.term(v)));
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::vector<std::string>> sorted_classes(std::vector<std::vector<std::string>> cs) {
    for (auto& c : cs) std::sort(c.begin(), c.end());
    std::sort(cs.begin(), cs.end());
    return cs;
}

}  // namespace testing_support
