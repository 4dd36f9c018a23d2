#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "decide.hpp"
#include "oracle.hpp"
#include "problem.hpp"

namespace gcu {

struct FuzzParams {
    std::size_t max_symbols = 4;
    std::size_t max_arity = 2;
    std::size_t max_height = 3;
    std::size_t max_equations = 5;
    std::size_t check_height = 4;    // yes-verdicts are checked up to this height
    std::size_t refute_height = 3;   // counterexamples up to this height force no
    std::size_t max_attempts = 50;   // resamples per slot when the oracle hits its cap
};

inline Term random_term(std::mt19937_64& rng, const Signature& sig, std::size_t max_height) {
    std::vector<SymbolId> consts, funs;
    for (SymbolId s = 0; s < sig.size(); ++s) (sig.arity(s) == 0 ? consts : funs).push_back(s);
    auto pick = [&](const std::vector<SymbolId>& v) {
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };
    std::bernoulli_distribution leaf(0.45);
    if (max_height == 0 || funs.empty() || leaf(rng)) return Term{pick(consts), {}};
    SymbolId s = pick(funs);
    Term t{s, {}};
    for (std::size_t i = 0; i < sig.arity(s); ++i) t.children.push_back(random_term(rng, sig, max_height - 1));
    return t;
}

inline Signature random_signature(std::mt19937_64& rng, const FuzzParams& p) {
    Signature sig;
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, p.max_symbols)(rng);
    // Half the signatures are unary so that the unary case is well covered.
    std::size_t arity_cap = std::bernoulli_distribution(0.5)(rng) ? std::min<std::size_t>(1, p.max_arity) : p.max_arity;
    std::uniform_int_distribution<std::size_t> ar(0, arity_cap);
    sig.add("c0", 0);
    for (std::size_t i = 1; i < k; ++i) {
        std::size_t a = ar(rng);
        sig.add((a == 0 ? "c" : "f") + std::to_string(i), a);
    }
    return sig;
}

inline Problem random_problem(std::mt19937_64& rng, const FuzzParams& p) {
    Problem pr;
    pr.sig = random_signature(rng, p);
    std::uniform_int_distribution<std::size_t> neq(0, p.max_equations);
    std::uniform_int_distribution<std::size_t> hgt(0, p.max_height);
    for (Gtes* g : {&pr.e, &pr.f}) {
        std::size_t m = neq(rng);
        for (std::size_t i = 0; i < m; ++i) {
            Term l = random_term(rng, pr.sig, hgt(rng));
            Term r = random_term(rng, pr.sig, hgt(rng));
            g->insert(std::move(l), std::move(r));
        }
    }
    return pr;
}

struct FuzzOutcome {
    bool capacity = false;  // the oracle could not finish; nothing was checked
    bool unary_both_total = false;
    bool verdict = false;
    std::vector<std::string> violations;
};

// Consistency of one instance against the oracle and against itself.
inline FuzzOutcome check_instance(const Problem& pr, const FuzzParams& p) {
    FuzzOutcome out;
    auto c = cad(pr.e, pr.f);
    auto v = decide_union(pr.sig, c, pr.e, pr.f);
    auto w = decide_union(pr.sig, pr.f, pr.e);
    out.verdict = v.union_is_congruence;
    std::optional<oracle::Counterexample> refute;
    std::optional<std::pair<Term, Term>> check;
    try {
        refute = oracle::shallowest_counterexample(pr.sig, pr.e, pr.f, p.refute_height);
        if (v.union_is_congruence && !refute)
            check = oracle::counterexample_search(pr.sig, pr.e, pr.f, p.check_height);
    } catch (const CapacityError&) {
        out.capacity = true;
        return out;
    }
    if (v.union_is_congruence != w.union_is_congruence) out.violations.push_back("asymmetric verdict");
    if (refute && v.union_is_congruence)
        out.violations.push_back("counterexample (" + to_string(pr.sig, refute->pair.first) + ", " +
                                 to_string(pr.sig, refute->pair.second) + ") but verdict yes");
    if (check)
        out.violations.push_back("verdict yes but counterexample (" + to_string(pr.sig, check->first) + ", " +
                                 to_string(pr.sig, check->second) + ") at height " +
                                 std::to_string(p.check_height));
    for (const Completion* comp : {&c.e, &c.f, &c.u})
        if (!is_reduced(comp->rules, comp->constants.size())) out.violations.push_back("unreduced completion");
    if (pr.sig.is_unary() && v.stats.total_e && v.stats.total_f) {
        out.unary_both_total = true;
        if (npdfs(c.aux).ok != case2_check(c.aux).ok) out.violations.push_back("npdfs and case2 disagree");
    }
    return out;
}

struct FuzzFailure {
    std::uint64_t seed = 0;
    std::string problem;
    std::vector<std::string> violations;
};

struct FuzzSummary {
    std::size_t checked = 0;
    std::size_t ok = 0;
    std::size_t resampled = 0;  // draws discarded because the oracle hit its cap
    std::size_t yes = 0;
    std::size_t unary_both_total = 0;
    std::vector<FuzzFailure> failures;
};

// Instance i is drawn from seed + i; a draw the oracle cannot finish is
// redrawn from the next seed of that slot's sequence.
inline FuzzSummary run_fuzz(std::uint64_t seed, std::size_t count, const FuzzParams& p = {}) {
    FuzzSummary s;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t attempt = 0; attempt < p.max_attempts; ++attempt) {
            std::uint64_t inst_seed = seed + i + attempt * 0x9e3779b97f4a7c15ULL;
            std::mt19937_64 rng(inst_seed);
            auto pr = random_problem(rng, p);
            auto o = check_instance(pr, p);
            if (o.capacity) {
                ++s.resampled;
                continue;
            }
            ++s.checked;
            s.yes += o.verdict;
            s.unary_both_total += o.unary_both_total;
            if (o.violations.empty())
                ++s.ok;
            else
                s.failures.push_back({inst_seed, format_problem(pr), o.violations});
            break;
        }
    }
    return s;
}

}  // namespace gcu
