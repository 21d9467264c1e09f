#pragma once

// Shared test utilities: deterministic generators for random inputs, the
// independent elimination oracle, and the basis/variety checks the suites
// assert against.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gf2gb/gf2gb.hpp"

namespace testutil {

using namespace gf2gb;

/// Shorthand for fixtures: one polynomial from its canonical text.
inline Polynomial poly(const Ring& ring, const std::string& text) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ring.n; ++i)
        index.emplace(ring.names[i], i);
    return gf2gb::detail::parse_polynomial(text, 1, index, ring);
}

inline std::vector<Polynomial> polys(const Ring& ring, const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    for (const std::string& t : texts)
        out.push_back(poly(ring, t));
    return out;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t bits() { return eng_(); }
    int bit() { return static_cast<int>(eng_() >> 63); }
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t mask = 1;
        while (mask < bound)
            mask = (mask << 1) | 1;
        for (;;) {
            std::uint64_t v = eng_() & mask;
            if (v < bound)
                return v;
        }
    }

private:
    std::mt19937_64 eng_;
};

inline Monomial random_monomial(Rng& rng, std::size_t n, unsigned max_exp) {
    std::vector<exp_t> e(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        e[i] = static_cast<exp_t>(rng.below(max_exp + 1));
    return Monomial::from_exponents(std::move(e));
}

inline Polynomial random_polynomial(Rng& rng, const Ring& ring, unsigned max_exp,
                                    std::size_t max_terms) {
    std::vector<Monomial> terms;
    std::size_t count = 1 + rng.below(max_terms);
    for (std::size_t k = 0; k < count; ++k)
        terms.push_back(random_monomial(rng, ring.n, max_exp));
    return Polynomial::from_terms(std::move(terms), ring);
}

/// Random quadratic system: every monomial of degree <= 2 tossed in with
/// moderate density; zero and constant draws are rejected.
inline std::vector<Polynomial> random_quadratic_system(std::uint64_t seed, const Ring& ring,
                                                       std::size_t m) {
    Rng rng(seed);
    const std::size_t n = ring.n;
    std::vector<Polynomial> out;
    while (out.size() < m) {
        std::vector<Monomial> terms;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (rng.below(4) == 0) {
                    std::vector<exp_t> e(n, 0);
                    e[i] = static_cast<exp_t>(e[i] + 1);
                    e[j] = static_cast<exp_t>(e[j] + 1);
                    terms.push_back(Monomial::from_exponents(std::move(e)));
                }
        for (std::size_t i = 0; i < n; ++i)
            if (rng.below(2) == 0) {
                std::vector<exp_t> e(n, 0);
                e[i] = 1;
                terms.push_back(Monomial::from_exponents(std::move(e)));
            }
        if (rng.below(2) == 0)
            terms.emplace_back(n);
        Polynomial p = Polynomial::from_terms(std::move(terms), ring);
        if (p.is_zero() || p.is_one())
            continue;
        out.push_back(std::move(p));
    }
    return out;
}

/// Independent elimination oracle over explicit 0/1 bytes, same pivot policy
/// as the engine: columns left to right, first available row, clear above and
/// below, drop zero rows.
inline std::vector<std::vector<std::uint8_t>> naive_rref(
    std::vector<std::vector<std::uint8_t>> rows) {
    if (rows.empty())
        return rows;
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n_cols && rank < n_rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < n_rows && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == n_rows)
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            for (std::size_t k = 0; k < n_cols; ++k)
                rows[r][k] = static_cast<std::uint8_t>((rows[r][k] + rows[rank][k]) % 2);
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

/// Pairwise check that every S-polynomial of the basis top-reduces to zero.
/// Coprime-head pairs reduce to zero by the product criterion; on large bases
/// they are spot-checked on a fixed sample instead of exhaustively.
inline bool is_groebner_basis(const std::vector<Polynomial>& basis, const Ring& ring,
                              std::size_t coprime_sample = 64) {
    std::size_t coprime_seen = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (monomial_coprime(basis[i].leading_term(), basis[j].leading_term())) {
                if (basis.size() > 40 && ++coprime_seen > coprime_sample)
                    continue;
            }
            Polynomial s = s_polynomial(basis[i], basis[j], ring);
            if (!s.is_zero() && !top_reduce(s, basis, ring).is_zero())
                return false;
        }
    return true;
}

/// Every input polynomial (after substituting the assignment) must top-reduce
/// to zero over the basis.
inline bool inputs_reduce_to_zero(const std::vector<Polynomial>& inputs,
                                  const std::vector<Polynomial>& basis,
                                  const Assignment& assignment, const Ring& ring) {
    for (const Polynomial& f : inputs) {
        Polynomial g = f;
        for (const auto& [var, val] : assignment.solved)
            g = substitute(g, var, val, ring);
        if (g.is_zero())
            continue;
        if (basis.empty())
            return false;
        if (!top_reduce(g, basis, ring).is_zero())
            return false;
    }
    return true;
}

/// Solution set reconstructed from a (basis, assignment) pair as full points.
inline std::vector<std::uint32_t> reconstruct_solutions(const std::vector<Polynomial>& basis,
                                                        const Assignment& assignment,
                                                        const Ring& ring) {
    std::vector<std::uint32_t> out;
    const std::uint32_t total = 1u << ring.n;
    for (std::uint32_t point = 0; point < total; ++point) {
        bool ok = true;
        for (const auto& [var, val] : assignment.solved)
            if (static_cast<int>((point >> var) & 1u) != val) {
                ok = false;
                break;
            }
        for (std::size_t i = 0; ok && i < basis.size(); ++i)
            if (evaluate(basis[i], point) == 1)
                ok = false;
        if (ok)
            out.push_back(point);
    }
    return out;
}

inline std::string render_basis(const std::vector<Polynomial>& basis, const Ring& ring) {
    std::string out;
    for (const Polynomial& p : basis) {
        out += render(p, ring);
        out += "\n";
    }
    return out;
}

}  // namespace testutil
