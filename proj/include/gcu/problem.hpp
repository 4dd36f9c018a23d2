#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "gtes.hpp"

namespace gcu {

// A decision instance as read from a problem file:
//
//   signature
//     f 2
//     # 0
//   equations E
//     f(#,#) = #
//   equations F
//
// Lines starting with // are comments; blank lines are ignored.
struct Problem {
    Signature sig;
    Gtes e;
    Gtes f;
    std::vector<std::string> warnings;
};

namespace detail {
inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}
}  // namespace detail

inline Problem parse_problem(std::string_view text) {
    enum class Section { None, Sig, E, F } section = Section::None;
    bool seen_sig = false, seen_e = false, seen_f = false;
    Problem p;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto line = detail::trim(raw);
        if (line.empty() || line.starts_with("//")) continue;
        if (line == "signature") {
            if (seen_sig) throw ParseError("duplicate signature section", line_no);
            if (seen_e || seen_f) throw ParseError("signature must come first", line_no);
            seen_sig = true;
            section = Section::Sig;
            continue;
        }
        if (line == "equations E" || line == "equations F") {
            bool is_e = line.back() == 'E';
            if (!seen_sig) throw ParseError("equations before signature", line_no);
            if (is_e ? seen_e : seen_f) throw ParseError("duplicate section '" + std::string(line) + "'", line_no);
            (is_e ? seen_e : seen_f) = true;
            if (p.sig.size() == 0 || !p.sig.has_constant())
                throw ParseError("signature has no constant", line_no);
            section = is_e ? Section::E : Section::F;
            continue;
        }
        switch (section) {
            case Section::None: throw ParseError("content outside any section", line_no);
            case Section::Sig: {
                std::istringstream ls{std::string(line)};
                std::string name, arity_text, extra;
                ls >> name >> arity_text;
                if (arity_text.empty() || (ls >> extra))
                    throw ParseError("expected '<symbol> <arity>'", line_no);
                std::size_t used = 0;
                unsigned long arity = 0;
                try {
                    arity = std::stoul(arity_text, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != arity_text.size() || arity_text[0] == '-')
                    throw ParseError("invalid arity '" + arity_text + "'", line_no);
                try {
                    p.sig.add(name, arity);
                } catch (const std::invalid_argument& ex) {
                    throw ParseError(ex.what(), line_no);
                }
                break;
            }
            case Section::E:
            case Section::F: {
                auto eq = line.find('=');
                if (eq == std::string_view::npos || line.find('=', eq + 1) != std::string_view::npos)
                    throw ParseError("expected exactly one '=' in equation", line_no);
                Term l = parse_term(p.sig, line.substr(0, eq), line_no);
                Term r = parse_term(p.sig, line.substr(eq + 1), line_no);
                auto& target = section == Section::E ? p.e : p.f;
                if (!target.insert(std::move(l), std::move(r)))
                    p.warnings.push_back("line " + std::to_string(line_no) + ": duplicate equation ignored");
                break;
            }
        }
    }
    if (!seen_sig) throw ParseError("missing signature section");
    if (!p.sig.has_constant()) throw ParseError("signature has no constant");
    if (!seen_e) throw ParseError("missing 'equations E' section");
    if (!seen_f) throw ParseError("missing 'equations F' section");
    return p;
}

inline std::string format_problem(const Problem& p) {
    std::string out = "signature\n";
    for (SymbolId s = 0; s < p.sig.size(); ++s)
        out += "  " + p.sig.name(s) + " " + std::to_string(p.sig.arity(s)) + "\n";
    for (auto [title, g] : {std::pair{"equations E", &p.e}, std::pair{"equations F", &p.f}}) {
        out += std::string(title) + "\n";
        for (const auto& eq : *g) out += "  " + to_string(p.sig, eq.lhs) + " = " + to_string(p.sig, eq.rhs) + "\n";
    }
    return out;
}

}  // namespace gcu
