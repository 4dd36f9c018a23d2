#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcu/corpus.hpp"
#include "gcu/fuzz.hpp"
#include "gcu/gcu.hpp"
#include "gcu/report.hpp"

#ifndef GCU_CORPUS_DIR
#define GCU_CORPUS_DIR "corpus"
#endif

namespace {

enum Exit { kYes = 0, kNo = 1, kInputError = 2, kInternalError = 3 };

struct Flags {
    bool json = false;
    bool explain = false;
    bool oracle_check = false;
    std::size_t max_height = 3;
    bool dump_aux = false;
};

gcu::Problem load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gcu::ParseError("cannot open '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return gcu::parse_problem(ss.str());
}

struct Outcome {
    gcu::Report report;
    gcu::Cad cad;
    gcu::Verdict verdict;
};

Outcome evaluate(const gcu::Problem& p, const Flags& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto c = gcu::cad(p.e, p.f);
    auto v = gcu::decide_union(p.sig, c, p.e, p.f);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    auto r = gcu::make_report(v, ms);
    if (f.oracle_check) {
        gcu::OracleReport o;
        o.max_height = f.max_height;
        if (auto cx = gcu::oracle::shallowest_counterexample(p.sig, p.e, p.f, f.max_height)) {
            o.found_at = cx->height;
            o.counterexample = {gcu::to_string(p.sig, cx->pair.first), gcu::to_string(p.sig, cx->pair.second)};
        }
        o.agrees = !(o.counterexample && v.union_is_congruence);
        r.oracle = o;
    }
    return {std::move(r), std::move(c), std::move(v)};
}

void print_human(const gcu::Problem& p, const Outcome& o, const Flags& f) {
    const auto& r = o.report;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "verdict: " << yn(r.verdict) << "\n";
    std::cout << "main case: " << r.main_case << " (total: " << r.which_total << ")\n";
    if (r.verdict) std::cout << "witness: H = E ∪ F\n";
    std::cout << "n: " << r.n << "  |W|: " << r.w << "\n";
    std::cout << "classes: E=" << r.classes_e << " F=" << r.classes_f << " union=" << r.classes_u << "\n";
    std::cout << "total: E=" << yn(r.total_e) << " F=" << yn(r.total_f) << " union=" << yn(r.total_u) << "\n";
    if (!r.diagnostics.empty()) std::cout << "diagnostics: " << r.diagnostics << "\n";
    if (f.explain) {
        for (const auto& w : p.warnings) std::cout << "warning: " << w << "\n";
        const auto& pu = o.cad.u.partition;
        for (gcu::ClassId a = 1; a <= pu.class_count(); ++a)
            std::cout << "union class " << a << " = ["
                      << gcu::to_string(p.sig, o.cad.dag.term(pu.representative(a))) << "] size "
                      << pu.cardinality(a) << ", E-classes " << o.cad.num_e[a - 1] << ", F-classes "
                      << o.cad.num_f[a - 1] << "\n";
    }
    if (r.oracle) {
        std::cout << "oracle (height <= " << r.oracle->max_height << "): ";
        if (r.oracle->counterexample)
            std::cout << "counterexample (" << r.oracle->counterexample->first << ", "
                      << r.oracle->counterexample->second << ") at height " << r.oracle->found_at;
        else
            std::cout << "no counterexample";
        std::cout << (r.oracle->agrees ? "" : " DISAGREES") << "\n";
    }
    std::cout << "millis: " << r.millis << "\n";
}

int run_file(const std::string& path, const Flags& f) {
    gcu::Problem p;
    try {
        p = load(path);
    } catch (const gcu::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    Outcome o;
    try {
        o = evaluate(p, f);
    } catch (const gcu::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kInternalError;
    }
    if (f.json) {
        nlohmann::json j = o.report;
        if (f.dump_aux) j["aux"] = gcu::dump(o.cad.aux);
        std::cout << j.dump(2) << "\n";
    } else {
        print_human(p, o, f);
        if (f.dump_aux) std::cout << gcu::dump(o.cad.aux);
    }
    if (o.report.oracle && !o.report.oracle->agrees) return kInternalError;
    return o.report.verdict ? kYes : kNo;
}

int run_corpus(const std::string& dir, const Flags& f) {
    std::size_t match = 0, yes = 0, no = 0, disagree = 0;
    for (const auto& entry : gcu::kCorpus) {
        auto path = std::filesystem::path(dir) / entry.file;
        gcu::Problem p;
        try {
            p = load(path);
        } catch (const gcu::ParseError& e) {
            std::cerr << path.string() << ": input error: " << e.what() << "\n";
            return kInputError;
        }
        Outcome o;
        try {
            o = evaluate(p, f);
        } catch (const gcu::CapacityError& e) {
            std::cerr << path.string() << ": capacity error: " << e.what() << "\n";
            return kInternalError;
        }
        bool ok = o.verdict.union_is_congruence == entry.expected_yes &&
                  o.verdict.main_case.kind == entry.expected_case;
        match += ok;
        (o.verdict.union_is_congruence ? yes : no) += 1;
        if (o.report.oracle && !o.report.oracle->agrees) ++disagree;
        std::cout << entry.file << ": " << (o.verdict.union_is_congruence ? "yes" : "no") << " "
                  << gcu::to_string(o.verdict.main_case.kind) << (ok ? "" : "  MISMATCH") << "\n";
    }
    std::cout << yes << " yes / " << no << " no\n";
    std::cout << match << "/" << gcu::kCorpus.size() << " match\n";
    if (f.oracle_check) std::cout << disagree << " oracle disagreements\n";
    return match == gcu::kCorpus.size() && disagree == 0 ? 0 : 1;
}

int run_fuzz(std::uint64_t seed, std::size_t count) {
    auto s = gcu::run_fuzz(seed, count);
    for (const auto& fail : s.failures) {
        std::cout << "FAIL seed " << fail.seed << ":";
        for (const auto& v : fail.violations) std::cout << " " << v << ";";
        std::cout << "\n" << fail.problem;
    }
    if (s.resampled) std::cout << s.resampled << " draws resampled (oracle capacity)\n";
    if (s.checked < count) std::cout << count - s.checked << " slots without a checkable draw\n";
    std::cout << s.ok << " ok\n";
    return s.failures.empty() && s.checked == count ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide whether the union of two ground equation systems generates the union of their congruences"};
    app.require_subcommand(0, 1);
    Flags flags;
    std::string file;
    app.add_option("file", file, "problem file");
    auto add_common = [&](CLI::App* a) {
        a->add_flag("--json", flags.json, "machine-readable report");
        a->add_flag("--explain", flags.explain, "per-class detail");
        a->add_flag("--oracle-check", flags.oracle_check, "cross-check with the brute-force oracle");
        a->add_option("--max-height", flags.max_height, "oracle term height bound")->capture_default_str();
        a->add_flag("--dump-aux", flags.dump_aux, "print the auxiliary graph");
    };
    add_common(&app);

    auto* corpus = app.add_subcommand("corpus", "run the bundled examples");
    std::string dir = GCU_CORPUS_DIR;
    corpus->add_option("--dir", dir, "corpus directory")->capture_default_str();
    corpus->add_flag("--oracle-check", flags.oracle_check, "cross-check with the brute-force oracle");
    corpus->add_option("--max-height", flags.max_height, "oracle term height bound")->capture_default_str();

    auto* fuzz = app.add_subcommand("fuzz", "random consistency checks");
    std::uint64_t seed = 1;
    std::size_t count = 200;
    fuzz->add_option("--seed", seed, "base seed")->capture_default_str();
    fuzz->add_option("--count", count, "number of instances")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }
    try {
        if (*corpus) return run_corpus(dir, flags);
        if (*fuzz) return run_fuzz(seed, count);
        if (file.empty()) {
            std::cerr << app.help();
            return kInputError;
        }
        return run_file(file, flags);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}
