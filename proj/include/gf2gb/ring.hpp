#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace gf2gb {

enum class MonomialOrder { grevlex, lex };

inline const char* to_string(MonomialOrder o) {
    return o == MonomialOrder::grevlex ? "grevlex" : "lex";
}

/// The polynomial ring GF(2)[x1,...,xn] with variable precedence x1 > x2 > ... > xn.
/// Coefficients are implicit: a polynomial is a set of monomials.
struct Ring {
    std::size_t n = 0;
    std::vector<std::string> names;
    MonomialOrder order = MonomialOrder::grevlex;

    Ring() = default;

    explicit Ring(std::size_t n_vars, MonomialOrder ord = MonomialOrder::grevlex)
        : n(n_vars), order(ord) {
        if (n_vars == 0)
            throw std::invalid_argument("ring needs at least one variable");
        names.reserve(n_vars);
        for (std::size_t i = 0; i < n_vars; ++i)
            names.push_back("x" + std::to_string(i + 1));
    }

    Ring(std::vector<std::string> var_names, MonomialOrder ord)
        : n(var_names.size()), names(std::move(var_names)), order(ord) {
        if (n == 0)
            throw std::invalid_argument("ring needs at least one variable");
        std::unordered_set<std::string> seen;
        for (const auto& name : names)
            if (!seen.insert(name).second)
                throw std::invalid_argument("duplicate variable name: " + name);
    }
};

}  // namespace gf2gb
