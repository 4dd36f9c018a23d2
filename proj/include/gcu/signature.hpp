#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gcu {

using SymbolId = std::uint32_t;

inline constexpr std::string_view kHoleToken = "HOLE";

struct Symbol {
    std::string name;
    std::size_t arity = 0;
};

// Finite ranked alphabet. Symbol ids are assigned in declaration order and
// define the fixed symbol order used by every enumeration.
class Signature {
public:
    static bool valid_name(std::string_view name) {
        if (name.empty() || name == kHoleToken) return false;
        for (char c : name) {
            if (c == '(' || c == ')' || c == ',' || c == '=' || c == ' ' || c == '\t' ||
                c == '\n' || c == '\r')
                return false;
        }
        return true;
    }

    SymbolId add(std::string name, std::size_t arity) {
        if (!valid_name(name)) throw std::invalid_argument("invalid symbol name '" + name + "'");
        if (index_.count(name)) throw std::invalid_argument("duplicate symbol '" + name + "'");
        auto id = static_cast<SymbolId>(symbols_.size());
        index_.emplace(name, id);
        symbols_.push_back({std::move(name), arity});
        return id;
    }

    std::optional<SymbolId> lookup(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    SymbolId id(std::string_view name) const {
        auto s = lookup(name);
        if (!s) throw std::out_of_range("unknown symbol '" + std::string(name) + "'");
        return *s;
    }

    const Symbol& operator[](SymbolId s) const { return symbols_.at(s); }
    std::size_t arity(SymbolId s) const { return symbols_.at(s).arity; }
    const std::string& name(SymbolId s) const { return symbols_.at(s).name; }
    std::size_t size() const { return symbols_.size(); }

    std::size_t max_arity() const {
        std::size_t m = 0;
        for (const auto& s : symbols_) m = std::max(m, s.arity);
        return m;
    }
    bool has_constant() const {
        for (const auto& s : symbols_)
            if (s.arity == 0) return true;
        return false;
    }
    bool is_unary() const { return max_arity() <= 1; }

    void validate() const {
        if (!has_constant()) throw std::invalid_argument("signature has no constant");
    }

private:
    std::vector<Symbol> symbols_;
    std::unordered_map<std::string, SymbolId> index_;
};

}  // namespace gcu
