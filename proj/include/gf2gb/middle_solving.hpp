#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gf2gb/critical_pairs.hpp"
#include "gf2gb/history.hpp"
#include "gf2gb/polynomial.hpp"
#include "gf2gb/ring.hpp"

namespace gf2gb {

enum class RenewMode { recompute, rebuild };

/// Variables pinned by middle solving, with the order they were found in.
struct Assignment {
    struct Solved {
        std::uint64_t round;
        std::size_t var;
        int value;
    };
    std::map<std::size_t, int> solved;
    std::vector<Solved> order_of_solution;

    bool empty() const { return solved.empty(); }
};

/// The univariate members of the round's new polynomials, with their variable,
/// in input order.
inline std::vector<std::pair<Polynomial, std::size_t>> extract_candidates(
    const std::vector<Polynomial>& new_polys) {
    std::vector<std::pair<Polynomial, std::size_t>> out;
    for (const Polynomial& p : new_polys) {
        if (p.is_zero())
            continue;
        if (auto var = is_univariate(p))
            out.emplace_back(p, *var);
    }
    return out;
}

struct SolveOutcome {
    std::map<std::size_t, int> assignments;
    bool inconsistent = false;
};

/// Keep the candidates with exactly one GF(2) root. A rootless candidate, or
/// two candidates pinning the same variable to different values, signals an
/// inconsistent system.
inline SolveOutcome solve_unique(const std::vector<std::pair<Polynomial, std::size_t>>& candidates) {
    SolveOutcome out;
    for (const auto& [p, var] : candidates) {
        std::vector<int> roots = roots_gf2(p, var);
        if (roots.empty()) {
            out.inconsistent = true;
            return out;
        }
        if (roots.size() == 2)
            continue;  // both values work, no information
        auto [it, inserted] = out.assignments.emplace(var, roots[0]);
        if (!inserted && it->second != roots[0]) {
            out.inconsistent = true;
            return out;
        }
    }
    return out;
}

namespace detail {

inline Polynomial substitute_many(Polynomial p, const std::map<std::size_t, int>& values,
                                  const Ring& ring) {
    for (const auto& [var, val] : values)
        p = substitute(p, var, val, ring);
    return p;
}

}  // namespace detail

struct RenewOutcome {
    bool inconsistent = false;
    std::size_t newly_solved = 0;
};

/// Back-substitute the fresh assignments through the basis, the pair queue and
/// the round history; delete what collapses to zero and purge pairs that lost
/// an endpoint. In recompute mode surviving pairs get their lcm and
/// multipliers refreshed from the new heads; rebuild mode re-derives the whole
/// queue (and the redundancy marks) from the surviving entries. With cascading
/// enabled, substituted basis entries that became univariate with a unique
/// root are solved in the same pass, to a fixed point.
inline RenewOutcome renew(Basis& basis, PairQueue& queue, RoundHistory& history,
                          Assignment& assignment, std::map<std::size_t, int> fresh,
                          const Ring& ring, RenewMode mode, bool cascade,
                          std::uint64_t round) {
    RenewOutcome out;
    if (fresh.empty())
        throw std::invalid_argument("renew with no assignments");

    while (!fresh.empty()) {
        // Merge the wave into the assignment; a contradiction with an earlier
        // value is an inconsistency.
        std::map<std::size_t, int> wave;
        for (const auto& [var, val] : fresh) {
            auto it = assignment.solved.find(var);
            if (it != assignment.solved.end()) {
                if (it->second != val) {
                    out.inconsistent = true;
                    return out;
                }
                continue;
            }
            assignment.solved.emplace(var, val);
            assignment.order_of_solution.push_back({round, var, val});
            ++out.newly_solved;
            wave.emplace(var, val);
        }
        fresh.clear();
        if (wave.empty())
            break;

        for (std::size_t i = 0; i < basis.size(); ++i) {
            Basis::Entry& e = basis.entry(i);
            if (!e.alive)
                continue;
            Polynomial p = detail::substitute_many(e.poly, wave, ring);
            if (p == e.poly)
                continue;
            if (p.is_zero()) {
                e.alive = false;
                continue;
            }
            if (p.is_one()) {
                out.inconsistent = true;
                return out;
            }
            e.poly = std::move(p);
        }

        history.substitute_all(wave, ring);

        if (mode == RenewMode::recompute) {
            std::vector<CriticalPair> survivors;
            survivors.reserve(queue.size());
            for (const CriticalPair& p : queue.pairs()) {
                if (!basis.entry(p.f1).alive || !basis.entry(p.f2).alive)
                    continue;
                if (basis.poly(p.f1) == basis.poly(p.f2))
                    continue;
                survivors.push_back(make_critical_pair(p.f1, p.f2, basis, ring));
            }
            queue.pairs() = std::move(survivors);
        } else {
            // Re-run the pair installation over the surviving entries in
            // insertion order, re-deriving the redundancy marks as well.
            queue.pairs().clear();
            std::vector<std::size_t> processed;
            for (std::size_t i = 0; i < basis.size(); ++i)
                basis.entry(i).redundant = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (!basis.entry(i).alive)
                    continue;
                std::vector<std::size_t> partners;
                for (std::size_t g : processed)
                    if (!basis.entry(g).redundant)
                        partners.push_back(g);
                gm_install(basis, queue, i, partners, ring);
                processed.push_back(i);
            }
        }

        if (cascade) {
            std::vector<std::pair<Polynomial, std::size_t>> candidates;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const Basis::Entry& e = basis.entry(i);
                if (!e.alive)
                    continue;
                if (auto var = is_univariate(e.poly))
                    candidates.emplace_back(e.poly, *var);
            }
            SolveOutcome next = solve_unique(candidates);
            if (next.inconsistent) {
                out.inconsistent = true;
                return out;
            }
            for (const auto& [var, val] : next.assignments)
                if (!assignment.solved.count(var))
                    fresh.emplace(var, val);
        }
    }

    // No live polynomial may still mention a solved variable.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Basis::Entry& e = basis.entry(i);
        if (!e.alive)
            continue;
        for (const Monomial& t : e.poly.terms())
            for (const auto& [var, val] : assignment.solved)
                if (t.exponent(var) > 0)
                    throw std::logic_error("live basis entry mentions a solved variable");
    }
    return out;
}

}  // namespace gf2gb
