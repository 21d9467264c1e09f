#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2gb/monomial.hpp"
#include "gf2gb/polynomial.hpp"
#include "gf2gb/ring.hpp"

namespace gf2gb {

/// Syntax or semantic error in a problem file, with 1-based location.
struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;
    ParseError(std::size_t l, std::size_t c, const std::string& what)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) +
                             ": " + what),
          line(l),
          column(c) {}
};

struct Problem {
    Ring ring;
    std::vector<Polynomial> system;
};

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// One polynomial: terms joined by '+', a term is '*'-joined factors, a factor
// is a variable with an optional '^k' or the constant 1. A bare 0 is the
// whole term and contributes nothing.
inline Polynomial parse_polynomial(const std::string& text, std::size_t line_no,
                                   const std::map<std::string, std::size_t>& var_index,
                                   const Ring& ring) {
    std::vector<Monomial> terms;
    std::size_t i = 0;
    const std::size_t len = text.size();
    auto skip_ws = [&]() {
        while (i < len && (text[i] == ' ' || text[i] == '\t'))
            ++i;
    };
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(line_no, i + 1, msg);
    };

    for (bool first = true;; first = false) {
        skip_ws();
        if (!first) {
            if (i >= len)
                break;
            if (text[i] != '+')
                throw fail("expected '+'");
            ++i;
            skip_ws();
        }
        if (i >= len)
            throw fail("expected a term");

        if (text[i] == '0' && (i + 1 >= len || !ident_char(text[i + 1]))) {
            ++i;
            skip_ws();
            if (i < len && text[i] == '*')
                throw fail("'0' cannot appear inside a product");
            continue;  // zero term
        }

        std::vector<exp_t> exps(ring.n, 0);
        for (;;) {
            skip_ws();
            if (i < len && text[i] == '1' && (i + 1 >= len || !ident_char(text[i + 1]))) {
                ++i;  // identity factor
            } else if (i < len && ident_start(text[i])) {
                std::size_t start = i;
                while (i < len && ident_char(text[i]))
                    ++i;
                std::string name = text.substr(start, i - start);
                auto it = var_index.find(name);
                if (it == var_index.end()) {
                    i = start;
                    throw fail("undeclared variable '" + name + "'");
                }
                exp_t e = 1;
                skip_ws();
                if (i < len && text[i] == '^') {
                    ++i;
                    skip_ws();
                    std::size_t dstart = i;
                    while (i < len && std::isdigit(static_cast<unsigned char>(text[i])))
                        ++i;
                    if (dstart == i)
                        throw fail("expected an exponent after '^'");
                    long v = std::stol(text.substr(dstart, i - dstart));
                    if (v < 1 || v > 0xffff)
                        throw fail("exponent out of range");
                    e = static_cast<exp_t>(v);
                }
                exps[it->second] = static_cast<exp_t>(exps[it->second] + e);
            } else {
                throw fail("expected a variable or constant");
            }
            skip_ws();
            if (i < len && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        terms.push_back(Monomial::from_exponents(std::move(exps)));
    }
    return Polynomial::from_terms(std::move(terms), ring);
}

}  // namespace detail

/// Grammar: `vars: x1 x2 ... xn` on the first non-comment line, an optional
/// `order: grevlex|lex` line, then one polynomial per line. '#' starts a
/// comment. Zero polynomials are rejected as generators.
inline Problem parse_problem(const std::string& text,
                             std::optional<MonomialOrder> order_override = std::nullopt) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;

    std::vector<std::string> names;
    std::map<std::string, std::size_t> var_index;
    std::optional<MonomialOrder> order;
    bool saw_vars = false;
    std::vector<std::pair<std::string, std::size_t>> body;  // line text, line number

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos)
            continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);

        if (!saw_vars) {
            if (line.rfind("vars:", 0) != 0)
                throw ParseError(line_no, begin + 1, "expected 'vars:' declaration first");
            std::istringstream vs(line.substr(5));
            std::string name;
            while (vs >> name) {
                if (!detail::ident_start(name[0]))
                    throw ParseError(line_no, 1, "bad variable name '" + name + "'");
                for (char c : name)
                    if (!detail::ident_char(c))
                        throw ParseError(line_no, 1, "bad variable name '" + name + "'");
                if (var_index.count(name))
                    throw ParseError(line_no, 1, "duplicate variable '" + name + "'");
                var_index.emplace(name, names.size());
                names.push_back(name);
            }
            if (names.empty())
                throw ParseError(line_no, 1, "no variables declared");
            saw_vars = true;
            continue;
        }
        if (line.rfind("order:", 0) == 0) {
            if (!body.empty())
                throw ParseError(line_no, 1, "'order:' must precede the polynomials");
            std::string v = line.substr(6);
            std::size_t b = v.find_first_not_of(" \t");
            v = b == std::string::npos ? "" : v.substr(b);
            if (v == "grevlex")
                order = MonomialOrder::grevlex;
            else if (v == "lex")
                order = MonomialOrder::lex;
            else
                throw ParseError(line_no, 1, "unknown order '" + v + "'");
            continue;
        }
        body.emplace_back(line, line_no);
    }

    if (!saw_vars)
        throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'vars:' declaration");
    if (body.empty())
        throw ParseError(line_no, 1, "empty system");

    Problem problem;
    problem.ring = Ring(names, order_override.value_or(order.value_or(MonomialOrder::grevlex)));
    for (const auto& [line, no] : body) {
        Polynomial p = detail::parse_polynomial(line, no, var_index, problem.ring);
        if (p.is_zero())
            throw ParseError(no, 1, "zero polynomial cannot be a generator");
        problem.system.push_back(std::move(p));
    }
    return problem;
}

/// Canonical problem text; parse_problem(render_problem(p)) reproduces p.
inline std::string render_problem(const Ring& ring, const std::vector<Polynomial>& system) {
    std::string out = "vars:";
    for (const std::string& name : ring.names)
        out += " " + name;
    out += "\norder: ";
    out += to_string(ring.order);
    out += "\n";
    for (const Polynomial& p : system) {
        out += render(p, ring);
        out += "\n";
    }
    return out;
}

}  // namespace gf2gb
