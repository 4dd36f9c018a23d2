#pragma once

#include <array>
#include <string_view>

#include "decide.hpp"

namespace gcu {

struct CorpusEntry {
    std::string_view file;
    bool expected_yes;
    CaseKind expected_case;
};

inline constexpr std::array<CorpusEntry, 8> kCorpus{{
    {"ex1.gtes", true, CaseKind::Unary},
    {"ex2.gtes", false, CaseKind::Unary},
    {"ex3.gtes", true, CaseKind::BothTotal},
    {"ex4.gtes", false, CaseKind::BothTotal},
    {"ex5.gtes", false, CaseKind::OneTotalHigherArity},
    {"ex6.gtes", true, CaseKind::OneTotalHigherArity},
    {"ex7.gtes", true, CaseKind::NoneTotalHigherArity},
    {"ex8.gtes", false, CaseKind::NoneTotalHigherArity},
}};

}  // namespace gcu
