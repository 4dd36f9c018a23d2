#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "signature.hpp"

namespace gcu {

// Ground term. Ordering is structural (symbol id, then children).
struct Term {
    SymbolId symbol = 0;
    std::vector<Term> children;

    bool operator==(const Term&) const = default;
    std::strong_ordering operator<=>(const Term& o) const {
        if (auto c = symbol <=> o.symbol; c != 0) return c;
        return std::lexicographical_compare_three_way(children.begin(), children.end(), o.children.begin(),
                                                      o.children.end());
    }
};

inline Term make_term(SymbolId s, std::vector<Term> children = {}) {
    return Term{s, std::move(children)};
}

// 1-based child indices from the root; empty is the root.
using Position = std::vector<std::size_t>;

inline std::size_t size(const Term& t) {
    std::size_t n = 1;
    for (const auto& c : t.children) n += size(c);
    return n;
}

inline std::size_t height(const Term& t) {
    std::size_t h = 0;
    for (const auto& c : t.children) h = std::max(h, height(c) + 1);
    return h;
}

namespace detail {
inline void collect_subterms(const Term& t, std::set<Term>& out) {
    if (!out.insert(t).second) return;
    for (const auto& c : t.children) collect_subterms(c, out);
}
}  // namespace detail

inline std::set<Term> subterms(const Term& t) {
    std::set<Term> out;
    detail::collect_subterms(t, out);
    return out;
}

inline const Term& subterm_at(const Term& t, const Position& p) {
    const Term* cur = &t;
    for (std::size_t i : p) {
        if (i == 0 || i > cur->children.size()) throw std::out_of_range("invalid position");
        cur = &cur->children[i - 1];
    }
    return *cur;
}

inline bool valid_position(const Term& t, const Position& p) {
    const Term* cur = &t;
    for (std::size_t i : p) {
        if (i == 0 || i > cur->children.size()) return false;
        cur = &cur->children[i - 1];
    }
    return true;
}

inline bool well_formed(const Signature& sig, const Term& t) {
    if (t.symbol >= sig.size() || sig.arity(t.symbol) != t.children.size()) return false;
    return std::all_of(t.children.begin(), t.children.end(),
                       [&](const Term& c) { return well_formed(sig, c); });
}

inline constexpr SymbolId kHoleSymbol = std::numeric_limits<SymbolId>::max();

// Ground term with exactly one occurrence of the hole.
class Context1 {
public:
    static Context1 hole() { return Context1(Term{kHoleSymbol, {}}, {}); }

    // `skeleton` must contain kHoleSymbol exactly once, as a leaf.
    static Context1 from_skeleton(Term skeleton) {
        Position addr;
        std::size_t count = 0;
        locate(skeleton, addr, count, Position{});
        if (count != 1) throw std::invalid_argument("context must contain exactly one hole");
        return Context1(std::move(skeleton), std::move(addr));
    }

    // c[t] for a term t.
    static Context1 wrap(SymbolId s, std::vector<Term> args, std::size_t hole_index,
                         const Context1& inner) {
        if (hole_index == 0 || hole_index > args.size() + 1)
            throw std::out_of_range("hole index out of range");
        args.insert(args.begin() + static_cast<std::ptrdiff_t>(hole_index - 1), inner.skeleton_);
        Position addr{hole_index};
        addr.insert(addr.end(), inner.addr_.begin(), inner.addr_.end());
        return Context1(Term{s, std::move(args)}, std::move(addr));
    }

    const Term& skeleton() const { return skeleton_; }
    const Position& hole_position() const { return addr_; }
    bool is_hole() const { return addr_.empty(); }
    std::size_t depth() const { return addr_.size(); }

    Term plug(const Term& t) const {
        Term out = skeleton_;
        Term* cur = &out;
        for (std::size_t i : addr_) cur = &cur->children[i - 1];
        *cur = t;
        return out;
    }

    bool operator==(const Context1&) const = default;

private:
    Context1(Term s, Position a) : skeleton_(std::move(s)), addr_(std::move(a)) {}

    static void locate(const Term& t, Position& addr, std::size_t& count, Position here) {
        if (t.symbol == kHoleSymbol) {
            if (!t.children.empty()) throw std::invalid_argument("hole must be a leaf");
            ++count;
            addr = here;
            return;
        }
        for (std::size_t i = 0; i < t.children.size(); ++i) {
            here.push_back(i + 1);
            locate(t.children[i], addr, count, here);
            here.pop_back();
        }
    }

    Term skeleton_;
    Position addr_;
};

inline std::size_t size(const Context1& c) { return size(c.skeleton()); }
inline Term plug(const Context1& c, const Term& t) { return c.plug(t); }

// ---- text form: f(t1,...,tm), constants bare ----

namespace detail {

class TermParser {
public:
    TermParser(const Signature& sig, std::string_view text, bool allow_hole, std::size_t line)
        : sig_(sig), text_(text), allow_hole_(allow_hole), line_(line) {}

    Term parse_all() {
        Term t = parse();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return t;
    }

    std::size_t holes = 0;

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                             std::string(text_) + "'",
                         line_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    static bool is_delim(char c) {
        return c == '(' || c == ')' || c == ',' || c == '=' ||
               std::isspace(static_cast<unsigned char>(c));
    }

    Term parse() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && !is_delim(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected symbol");
        std::string_view name = text_.substr(start, pos_ - start);
        if (name == kHoleToken) {
            if (!allow_hole_) fail("hole not allowed here");
            ++holes;
            return Term{kHoleSymbol, {}};
        }
        auto id = sig_.lookup(name);
        if (!id) fail("undeclared symbol '" + std::string(name) + "'");
        std::vector<Term> kids;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            for (;;) {
                kids.push_back(parse());
                skip_ws();
                if (pos_ >= text_.size()) fail("unterminated argument list");
                if (text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (text_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                fail("expected ',' or ')'");
            }
        }
        if (kids.size() != sig_.arity(*id))
            fail("symbol '" + std::string(name) + "' has arity " +
                 std::to_string(sig_.arity(*id)) + " but got " + std::to_string(kids.size()) +
                 " arguments");
        return Term{*id, std::move(kids)};
    }

    const Signature& sig_;
    std::string_view text_;
    bool allow_hole_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

inline void print(const Signature& sig, const Term& t, std::string& out) {
    if (t.symbol == kHoleSymbol) {
        out += kHoleToken;
        return;
    }
    out += sig.name(t.symbol);
    if (t.children.empty()) return;
    out += '(';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ',';
        print(sig, t.children[i], out);
    }
    out += ')';
}

}  // namespace detail

inline Term parse_term(const Signature& sig, std::string_view text, std::size_t line = 0) {
    detail::TermParser p(sig, text, false, line);
    return p.parse_all();
}

inline Context1 parse_context(const Signature& sig, std::string_view text, std::size_t line = 0) {
    detail::TermParser p(sig, text, true, line);
    Term t = p.parse_all();
    if (p.holes != 1) throw ParseError("context must contain exactly one HOLE", line);
    return Context1::from_skeleton(std::move(t));
}

inline std::string to_string(const Signature& sig, const Term& t) {
    std::string out;
    detail::print(sig, t, out);
    return out;
}

inline std::string to_string(const Signature& sig, const Context1& c) {
    return to_string(sig, c.skeleton());
}

}  // namespace gcu
