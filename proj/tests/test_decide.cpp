#include <gtest/gtest.h>

#include <random>

#include "gcu/corpus.hpp"
#include "gcu/fuzz.hpp"
#include "support.hpp"

using namespace gcu;
using testing_support::corpus_problem;
using testing_support::union_class;

namespace {

AuxGraph graph(std::vector<AuxVertex> vs) { return AuxGraph{std::move(vs)}; }

AuxVertex vert(bool eq_e, bool eq_f, bool ke, bool kf, std::vector<ClassId> adj = {}) {
    return AuxVertex{eq_e, eq_f, ke, kf, std::move(adj)};
}

}  // namespace

TEST(Classify, Dispatch) {
    Signature unary;
    unary.add("#", 0);
    unary.add("f", 1);
    Signature binary = unary;
    binary.add("g", 2);
    EXPECT_EQ(classify(binary, true, true), (MainCase{CaseKind::BothTotal, Which::Both}));
    EXPECT_EQ(classify(unary, true, true), (MainCase{CaseKind::BothTotal, Which::Both}));
    EXPECT_EQ(classify(unary, true, false), (MainCase{CaseKind::Unary, Which::E}));
    EXPECT_EQ(classify(unary, false, false), (MainCase{CaseKind::Unary, Which::Neither}));
    EXPECT_EQ(classify(binary, false, true), (MainCase{CaseKind::OneTotalHigherArity, Which::F}));
    EXPECT_EQ(classify(binary, false, false), (MainCase{CaseKind::NoneTotalHigherArity, Which::Neither}));
}

TEST(Classify, Corpus) {
    for (const auto& entry : kCorpus) {
        auto p = corpus_problem(std::string(entry.file));
        EXPECT_EQ(decide_union(p.sig, p.e, p.f).main_case.kind, entry.expected_case) << entry.file;
    }
}

TEST(Npdfs, Corpus) {
    auto p1 = corpus_problem("ex1.gtes");
    EXPECT_TRUE(npdfs(cad(p1.e, p1.f).aux).ok);
    auto p2 = corpus_problem("ex2.gtes");
    auto r = npdfs(cad(p2.e, p2.f).aux);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.at, 1u);
    EXPECT_TRUE(npdfs(AuxGraph{}).ok);
}

TEST(Npdfs, SideChosenPerVertex) {
    // 1 is equal only on E and reaches 2, which keeps only on F: fail.
    EXPECT_FALSE(npdfs(graph({vert(true, false, true, true, {2}), vert(true, true, false, true)})).ok);
    // Same, but 1 may use F.
    EXPECT_TRUE(npdfs(graph({vert(true, true, true, true, {2}), vert(true, true, false, true)})).ok);
    // a itself need not keep, only its proper successors.
    EXPECT_TRUE(npdfs(graph({vert(true, false, false, false)})).ok);
    // A self-loop makes a its own successor.
    EXPECT_FALSE(npdfs(graph({vert(true, false, false, false, {1})})).ok);
}

TEST(Npdfs, StatsBounded) {
    std::vector<AuxVertex> vs;
    const ClassId k = 50;
    for (ClassId a = 1; a <= k; ++a) {
        std::vector<ClassId> adj;
        if (a < k) adj.push_back(a + 1);
        adj.push_back(1);
        vs.push_back(vert(true, true, true, true, adj));
    }
    NpdfsStats st;
    EXPECT_TRUE(npdfs(graph(vs), &st).ok);
    EXPECT_EQ(st.outer_visits, k);
    EXPECT_LE(st.max_inner_visits, 2u);
}

TEST(Case2, Corpus) {
    auto p3 = corpus_problem("ex3.gtes");
    EXPECT_TRUE(case2_check(cad(p3.e, p3.f).aux).ok);
    auto p4 = corpus_problem("ex4.gtes");
    auto c4 = cad(p4.e, p4.f);
    auto r = case2_check(c4.aux);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.at, union_class(p4, c4, "#"));
    EXPECT_TRUE(case2_check(cad(p3.e, p3.e).aux).ok);
}

TEST(Pdfs, Corpus) {
    auto p5 = corpus_problem("ex5.gtes");
    EXPECT_FALSE(pdfs(cad(p5.e, p5.f).aux, Side::E).ok);
    auto p6 = corpus_problem("ex6.gtes");
    EXPECT_TRUE(pdfs(cad(p6.e, p6.f).aux, Side::E).ok);
    EXPECT_TRUE(pdfs(graph({vert(true, true, false, false, {1})}), Side::E).ok);
}

TEST(Pdfs, StartVertexIsNotPremarked) {
    // 1 is split on F (the total side) and reaches itself; it does not keep on E.
    EXPECT_FALSE(pdfs(graph({vert(true, false, false, true, {1})}), Side::F).ok);
    // Without the loop only successors matter.
    EXPECT_TRUE(pdfs(graph({vert(true, false, false, true)}), Side::F).ok);
}

TEST(Case4, Corpus) {
    auto p7 = corpus_problem("ex7.gtes");
    auto c7 = cad(p7.e, p7.f);
    EXPECT_TRUE(case4_check(c7.tau_e, c7.tau_f, c7.e.partition, c7.f.partition).ok);
    auto p8 = corpus_problem("ex8.gtes");
    auto c8 = cad(p8.e, p8.f);
    auto r = case4_check(c8.tau_e, c8.tau_f, c8.e.partition, c8.f.partition);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.at, 1u);
    EXPECT_EQ(r.witness, 1u);
    auto c0 = cad(Gtes{}, p8.f);
    EXPECT_TRUE(case4_check(c0.tau_e, c0.tau_f, c0.e.partition, c0.f.partition).ok);
}

TEST(Decide, CorpusVerdicts) {
    for (const auto& entry : kCorpus) {
        auto p = corpus_problem(std::string(entry.file));
        auto v = decide_union(p.sig, p.e, p.f);
        EXPECT_EQ(v.union_is_congruence, entry.expected_yes) << entry.file;
        EXPECT_EQ(v.diagnostic.empty(), entry.expected_yes) << entry.file;
    }
}

TEST(Decide, BothEmpty) {
    auto p = corpus_problem("ex1.gtes");
    auto v = decide_union(p.sig, Gtes{}, Gtes{});
    EXPECT_TRUE(v.union_is_congruence);
    EXPECT_EQ(v.stats.n, 0u);
}

TEST(Decide, Diagnostics) {
    auto p8 = corpus_problem("ex8.gtes");
    auto v8 = decide_union(p8.sig, p8.e, p8.f);
    EXPECT_EQ(v8.diagnostic, "E equation # = $ does not hold in F and F equation L = b does not hold in E");
    auto p4 = corpus_problem("ex4.gtes");
    auto v4 = decide_union(p4.sig, p4.e, p4.f);
    EXPECT_NE(v4.diagnostic.find("splits into several E-classes and several F-classes"), std::string::npos);
    auto p5 = corpus_problem("ex5.gtes");
    auto v5 = decide_union(p5.sig, p5.e, p5.f);
    EXPECT_FALSE(v5.diagnostic.empty());
}

TEST(DecideProperties, SymmetricAndAgreesWithCaseTwoWhenBothTotal) {
    std::mt19937_64 rng(23);
    FuzzParams fp;
    for (int i = 0; i < 300; ++i) {
        auto pr = random_problem(rng, fp);
        auto a = decide_union(pr.sig, pr.e, pr.f);
        auto b = decide_union(pr.sig, pr.f, pr.e);
        EXPECT_EQ(a.union_is_congruence, b.union_is_congruence);
        EXPECT_EQ(a.main_case.kind, b.main_case.kind);
        if (pr.e == pr.f || pr.e.empty() || pr.f.empty()) {
            EXPECT_TRUE(a.union_is_congruence);
        }
        auto c = cad(pr.e, pr.f);
        if (pr.sig.is_unary() && a.main_case.kind == CaseKind::BothTotal) {
            EXPECT_EQ(npdfs(c.aux).ok, case2_check(c.aux).ok);
        }
    }
}
