#include <gtest/gtest.h>

#include <random>

#include "gcu/fuzz.hpp"
#include "support.hpp"

using namespace gcu;
using testing_support::corpus_problem;
using testing_support::LabeledRule;
using testing_support::same_up_to_renaming;

namespace {

ClassId class_of(const Problem& p, const SubtermDag& dag, const Completion& c, const char* t) {
    return c.partition.find(*dag.find(parse_term(p.sig, t)));
}

}  // namespace

TEST(Completion, Ex1Rules) {
    auto p = corpus_problem("ex1.gtes");
    auto re = fgc(p.e, p.f);
    EXPECT_TRUE(same_up_to_renaming(p.sig, re.rules, re.constants.size(),
                                    {{"#", {}, "#"},
                                     {"$", {}, "$"},
                                     {"f", {"#"}, "f#"},
                                     {"f", {"$"}, "f$"},
                                     {"g", {"#"}, "f#"},
                                     {"g", {"$"}, "g$"}}));
    auto rf = fgc(p.f, p.e);
    EXPECT_TRUE(same_up_to_renaming(p.sig, rf.rules, rf.constants.size(),
                                    {{"#", {}, "#"},
                                     {"$", {}, "$"},
                                     {"f", {"#"}, "f#"},
                                     {"f", {"$"}, "f$"},
                                     {"g", {"#"}, "g#"},
                                     {"g", {"$"}, "f$"}}));
    auto ru = fgc(unite(p.e, p.f), Gtes{});
    EXPECT_TRUE(same_up_to_renaming(p.sig, ru.rules, ru.constants.size(),
                                    {{"#", {}, "#"},
                                     {"$", {}, "$"},
                                     {"f", {"#"}, "f#"},
                                     {"f", {"$"}, "f$"},
                                     {"g", {"#"}, "f#"},
                                     {"g", {"$"}, "f$"}}));
    // A wrong labelling is rejected.
    EXPECT_FALSE(same_up_to_renaming(p.sig, re.rules, re.constants.size(),
                                     {{"#", {}, "#"},
                                      {"$", {}, "$"},
                                      {"f", {"#"}, "f#"},
                                      {"f", {"$"}, "f$"},
                                      {"g", {"#"}, "g#"},
                                      {"g", {"$"}, "f$"}}));
}

TEST(Completion, Ex2Rules) {
    auto p = corpus_problem("ex2.gtes");
    auto re = fgc(p.e, p.f);
    EXPECT_TRUE(same_up_to_renaming(p.sig, re.rules, re.constants.size(),
                                    {{"#", {}, "#"}, {"f", {"#"}, "f#"}, {"f", {"f#"}, "#"}}));
    auto rf = fgc(p.f, p.e);
    EXPECT_TRUE(same_up_to_renaming(
        p.sig, rf.rules, rf.constants.size(),
        {{"#", {}, "#"}, {"f", {"#"}, "f#"}, {"f", {"f#"}, "ff#"}, {"f", {"ff#"}, "#"}}));
    auto ru = fgc(unite(p.e, p.f), Gtes{});
    EXPECT_TRUE(same_up_to_renaming(p.sig, ru.rules, ru.constants.size(), {{"#", {}, "W"}, {"f", {"W"}, "W"}}));
}

TEST(Completion, EmptySystems) {
    auto c = fgc(Gtes{}, Gtes{});
    EXPECT_TRUE(c.constants.empty());
    EXPECT_TRUE(c.rules.empty());
    EXPECT_TRUE(c.backsteps.empty());
}

TEST(Completion, BackstepsEx1) {
    auto p = corpus_problem("ex1.gtes");
    auto b = build_dag(p.e, p.f);
    auto c = fgc(b.dag, b.tau_e);
    auto k = [&](const char* t) { return class_of(p, b.dag, c, t); };
    EXPECT_EQ(c.backsteps, (BackSteps{{k("f(#)"), k("#")}, {k("f($)"), k("$")}, {k("g($)"), k("$")}}));
}

TEST(Completion, TotalityEx2RestrictedSignature) {
    // With only the symbols that occur, all three systems are total.
    auto p = corpus_problem("ex2.gtes");
    Signature used;
    used.add("#", 0);
    used.add("f", 1);
    Gtes e, f;
    for (const auto& eq : p.e) e.insert(parse_term(used, to_string(p.sig, eq.lhs)), parse_term(used, to_string(p.sig, eq.rhs)));
    for (const auto& eq : p.f) f.insert(parse_term(used, to_string(p.sig, eq.lhs)), parse_term(used, to_string(p.sig, eq.rhs)));
    bool flag = signature_flag(used, e, f).flag;
    ASSERT_TRUE(flag);
    EXPECT_TRUE(is_total(used, flag, fgc(e, f)));
    EXPECT_TRUE(is_total(used, flag, fgc(f, e)));
    EXPECT_TRUE(is_total(used, flag, fgc(unite(e, f), Gtes{})));
    // With the declared but unused $, none is.
    bool decl_flag = signature_flag(p.sig, p.e, p.f).flag;
    EXPECT_FALSE(is_total(p.sig, decl_flag, fgc(p.e, p.f)));
}

TEST(Completion, TotalityEx7) {
    auto p = corpus_problem("ex7.gtes");
    bool flag = signature_flag(p.sig, p.e, p.f).flag;
    EXPECT_FALSE(is_total(p.sig, flag, fgc(p.e, p.f)));
    EXPECT_FALSE(is_total(p.sig, flag, fgc(p.f, p.e)));
    EXPECT_FALSE(is_total(p.sig, flag, fgc(unite(p.e, p.f), Gtes{})));
}

TEST(Completion, TotalityEmptyRules) {
    auto p = corpus_problem("ex1.gtes");
    EXPECT_FALSE(is_total(p.sig, true, 0, Gtrs{}));
}

TEST(Completion, TotalityCorpus) {
    struct Want {
        const char* file;
        bool e, f;
    };
    for (auto w : {Want{"ex3.gtes", true, true}, Want{"ex4.gtes", true, true}, Want{"ex5.gtes", true, false},
                   Want{"ex6.gtes", true, false}, Want{"ex8.gtes", false, false}}) {
        auto p = corpus_problem(w.file);
        bool flag = signature_flag(p.sig, p.e, p.f).flag;
        EXPECT_EQ(is_total(p.sig, flag, fgc(p.e, p.f)), w.e) << w.file;
        EXPECT_EQ(is_total(p.sig, flag, fgc(p.f, p.e)), w.f) << w.file;
    }
}

TEST(Completion, NormalForms) {
    auto p1 = corpus_problem("ex1.gtes");
    auto b1 = build_dag(p1.e, p1.f);
    auto c1 = fgc(b1.dag, b1.tau_e);
    EXPECT_EQ(normal_form(c1.rules, parse_term(p1.sig, "g(#)")), ExtTerm::constant(class_of(p1, b1.dag, c1, "f(#)")));

    auto p2 = corpus_problem("ex2.gtes");
    auto b2 = build_dag(p2.e, p2.f);
    auto c2 = fgc(b2.dag, b2.tau_e);
    EXPECT_EQ(normal_form(c2.rules, parse_term(p2.sig, "f(f(f(f(#))))")), ExtTerm::constant(class_of(p2, b2.dag, c2, "#")));

    for (ClassId k = 1; k <= c2.constants.size(); ++k)
        EXPECT_EQ(normal_form(c2.rules, ExtTerm::constant(k)), ExtTerm::constant(k));

    // Terms outside the completion's reach stay partly unreduced.
    auto nf = normal_form(c1.rules, parse_term(p1.sig, "f(f(#))"));
    EXPECT_FALSE(nf.is_class);
}

TEST(Completion, EveryWTermNormalizesToItsClass) {
    for (const auto& entry : {"ex1.gtes", "ex2.gtes", "ex3.gtes", "ex4.gtes", "ex5.gtes", "ex6.gtes", "ex7.gtes", "ex8.gtes"}) {
        auto p = corpus_problem(entry);
        auto b = build_dag(p.e, p.f);
        auto c = fgc(b.dag, b.tau_e);
        for (VertexId v = 0; v < b.dag.size(); ++v)
            EXPECT_EQ(normal_form(c.rules, b.dag.term(v)), ExtTerm::constant(c.partition.find(v))) << entry;
        EXPECT_LE(c.rules.count(), b.dag.size());
        EXPECT_LE(c.backsteps.size(), size(c.rules));
        EXPECT_LE(size(c.rules), 2 * (size(p.e) + size(p.f)));
    }
}

TEST(Completion, WordProblem) {
    auto p = corpus_problem("ex2.gtes");
    auto t = [&](const char* s) { return parse_term(p.sig, s); };
    EXPECT_TRUE(word_problem(p.e, p.f, t("#"), t("f(f(#))")));
    EXPECT_FALSE(word_problem(p.e, p.f, t("#"), t("f(#)")));
    EXPECT_TRUE(word_problem(p.e, p.f, t("f($)"), t("f($)")));
    EXPECT_TRUE(word_problem(p.e, Gtes{}, t("f(f(f(f(f(#)))))"), t("f(#)")));
    EXPECT_FALSE(word_problem(p.e, Gtes{}, t("$"), t("#")));
}

TEST(CompletionProperties, ReducedAndTotalityAtDeskScale) {
    std::mt19937_64 rng(13);
    FuzzParams fp;
    fp.max_symbols = 3;
    fp.max_height = 2;
    fp.max_equations = 4;
    std::size_t checked = 0, total_seen = 0;
    for (int i = 0; i < 400; ++i) {
        auto pr = random_problem(rng, fp);
        auto c = fgc(pr.e, pr.f);
        EXPECT_TRUE(is_reduced(c.rules, c.constants.size()));
        bool flag = signature_flag(pr.sig, pr.e, pr.f).flag;
        bool total = is_total(pr.sig, flag, c);
        oracle::TermUniverse u;
        try {
            u = oracle::enumerate_terms(pr.sig, c.constants.size() + 1, 5000);
        } catch (const CapacityError&) {
            continue;
        }
        ++checked;
        total_seen += total;
        bool all_normalize = true;
        for (const auto& level : u.by_height)
            for (const auto& t : level) all_normalize = all_normalize && normal_form(c.rules, t).is_class;
        EXPECT_EQ(total, all_normalize);
    }
    EXPECT_GT(checked, 100u);
    EXPECT_GT(total_seen, 5u);
}
