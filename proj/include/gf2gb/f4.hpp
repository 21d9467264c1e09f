#pragma once

#include <chrono>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gf2gb/critical_pairs.hpp"
#include "gf2gb/gf2_matrix.hpp"
#include "gf2gb/history.hpp"
#include "gf2gb/middle_solving.hpp"
#include "gf2gb/monomial.hpp"
#include "gf2gb/polynomial.hpp"
#include "gf2gb/ring.hpp"
#include "gf2gb/stats.hpp"

namespace gf2gb {

enum class Algorithm { buchberger, f4, fe_f4, s_f4, ms_f4 };

inline const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::buchberger: return "buchberger";
        case Algorithm::f4: return "f4";
        case Algorithm::fe_f4: return "fe-f4";
        case Algorithm::s_f4: return "s-f4";
        case Algorithm::ms_f4: return "ms-f4";
    }
    return "?";
}

struct SolverConfig {
    Algorithm algorithm = Algorithm::fe_f4;
    RenewMode renew_mode = RenewMode::recompute;
    bool cascade = true;
    std::size_t history_cap = 0;  // reduction rounds kept for product reuse; 0 = unbounded
    bool adjoin_override_off = false;  // escape hatch for the f4-vs-fe-f4 ablation

    bool spoly_path() const {
        return algorithm == Algorithm::s_f4 || algorithm == Algorithm::ms_f4;
    }
    bool middle_solving() const { return algorithm == Algorithm::ms_f4; }
    bool adjoin_field_eqs() const {
        if (algorithm == Algorithm::fe_f4)
            return !adjoin_override_off;
        return spoly_path();
    }
};

struct SolveResult {
    std::vector<Polynomial> basis;  // reduced, over the unsolved variables
    Assignment assignment;
    RunStats stats;
    bool inconsistent = false;  // basis == {1}: no GF(2) solutions
};

/// F together with the field equations x_i^2 + x_i, duplicates removed.
inline std::vector<Polynomial> adjoin_field_equations(const std::vector<Polynomial>& system,
                                                      const Ring& ring) {
    std::vector<Polynomial> out;
    out.reserve(system.size() + ring.n);
    auto push_unique = [&](const Polynomial& p) {
        for (const Polynomial& q : out)
            if (q == p)
                return;
        out.push_back(p);
    };
    for (const Polynomial& p : system)
        push_unique(p);
    for (std::size_t i = 0; i < ring.n; ++i) {
        std::vector<exp_t> sq(ring.n, 0), lin(ring.n, 0);
        sq[i] = 2;
        lin[i] = 1;
        push_unique(Polynomial::from_terms(
            {Monomial::from_exponents(std::move(sq)), Monomial::from_exponents(std::move(lin))},
            ring));
    }
    return out;
}

namespace detail {

struct MonoLess {
    const Ring* ring;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(a, b, *ring) == std::strong_ordering::less;
    }
};

// Monomials of a round, processed largest first.
class MonomialWorkset {
public:
    explicit MonomialWorkset(const Ring& ring) : todo_(MonoLess{&ring}) {}

    void add(const Polynomial& p) {
        for (const Monomial& t : p.terms())
            if (!done_.count(t))
                todo_.insert(t);
    }
    void mark_done(const Monomial& m) {
        done_.insert(m);
        todo_.erase(m);
    }
    bool empty() const { return todo_.empty(); }
    Monomial pop_largest() {
        Monomial m = *todo_.rbegin();
        todo_.erase(std::prev(todo_.end()));
        done_.insert(m);
        return m;
    }

private:
    std::set<Monomial, MonoLess> todo_;
    std::unordered_set<Monomial, MonomialHash> done_;
};

}  // namespace detail

struct PreprocessResult {
    std::vector<Polynomial> rows;   // matrix input F, in submission order
    std::vector<RowTag> tags;       // parallel to rows
    std::vector<Polynomial> reducers;  // the appended reducer rows only
};

/// Classic symbolic preprocessing: seed both simplified pair products, then
/// append one reducer row for every remaining top-reducible monomial until
/// the monomial set is closed. Seed heads (the pair lcms) are not reduced;
/// the two seed rows of a pair cancel them against each other.
inline PreprocessResult symbolic_preprocessing_classic(const std::vector<CriticalPair>& pairs,
                                                       const Basis& basis,
                                                       const RoundHistory& history,
                                                       const Ring& ring) {
    PreprocessResult out;
    const std::vector<Polynomial> pool = basis.reducer_view();
    detail::MonomialWorkset work(ring);

    auto submit = [&](const Monomial& mult, const Polynomial& f, RowTag tag) {
        auto [m, g] = history.simplify(mult, f, ring);
        Polynomial row = poly_mul_monomial(m, g, ring);
        work.add(row);
        out.rows.push_back(std::move(row));
        out.tags.push_back(tag);
    };

    for (const CriticalPair& p : pairs) {
        submit(p.u1, basis.poly(p.f1), RowTag::pair_product);
        submit(p.u2, basis.poly(p.f2), RowTag::pair_product);
    }
    for (const Polynomial& row : out.rows)
        work.mark_done(row.leading_term());

    while (!work.empty()) {
        Monomial m = work.pop_largest();
        const Polynomial* g = find_reducer(m, pool, ring);
        if (!g)
            continue;
        Monomial cofactor = *monomial_divide(m, g->leading_term());
        auto [t, f] = history.simplify(cofactor, *g, ring);
        Polynomial row = poly_mul_monomial(t, f, ring);
        work.add(row);
        out.reducers.push_back(row);
        out.rows.push_back(std::move(row));
        out.tags.push_back(RowTag::reducer);
    }
    return out;
}

/// S-polynomial-row preprocessing: one field-normal-formed S-polynomial row
/// per pair (zero rows dropped), every appended reducer normal-formed and
/// collected separately. Seed heads are reduced like any other monomial; the
/// lcm cancellation already happened inside the S-polynomial row.
inline PreprocessResult symbolic_preprocessing_spoly(const std::vector<CriticalPair>& pairs,
                                                     const Basis& basis,
                                                     const RoundHistory& history,
                                                     const Ring& ring) {
    PreprocessResult out;
    const std::vector<Polynomial> pool = basis.reducer_view();
    detail::MonomialWorkset work(ring);

    auto normal_formed_product = [&](const Monomial& mult, const Polynomial& f) {
        auto [m, g] = history.simplify(mult, f, ring);
        return normal_form_field(poly_mul_monomial(m, g, ring), ring);
    };

    for (const CriticalPair& p : pairs) {
        Polynomial row = poly_add(normal_formed_product(p.u1, basis.poly(p.f1)),
                                  normal_formed_product(p.u2, basis.poly(p.f2)), ring);
        if (row.is_zero())
            continue;
        work.add(row);
        out.rows.push_back(std::move(row));
        out.tags.push_back(RowTag::s_polynomial);
    }

    while (!work.empty()) {
        Monomial m = work.pop_largest();
        const Polynomial* g = find_reducer(m, pool, ring);
        if (!g)
            continue;
        Monomial cofactor = *monomial_divide(m, g->leading_term());
        Polynomial row = normal_formed_product(cofactor, *g);
        work.add(row);
        out.reducers.push_back(row);
        out.rows.push_back(std::move(row));
        out.tags.push_back(RowTag::reducer);
    }
    return out;
}

struct ReductionResult {
    std::vector<Polynomial> new_polys;    // echelon rows carrying new information
    std::vector<Polynomial> matrix_rows;  // the round's matrix input F
    std::size_t reducer_rows = 0;
};

namespace detail {

inline ReductionResult run_reduction(PreprocessResult pre, RoundHistory& history, const Ring& ring,
                                     bool spoly_selection) {
    ReductionResult out;
    out.reducer_rows = pre.reducers.size();
    if (pre.rows.empty()) {
        history.push_round({}, {});
        return out;
    }
    MacaulayMatrix matrix = MacaulayMatrix::build(pre.rows, pre.tags, ring);
    std::vector<Polynomial> echelon = row_echelon_gf2(matrix).to_polynomials();

    std::unordered_set<Monomial, MonomialHash> old_heads;
    if (spoly_selection) {
        for (const Polynomial& r : pre.reducers)
            old_heads.insert(r.leading_term());
    } else {
        for (const Polynomial& r : pre.rows)
            old_heads.insert(r.leading_term());
    }
    for (const Polynomial& f : echelon)
        if (!old_heads.count(f.leading_term()))
            out.new_polys.push_back(f);

    out.matrix_rows = std::move(pre.rows);
    history.push_round(out.matrix_rows, std::move(echelon));
    return out;
}

}  // namespace detail

/// One round of the classic path: matrix from the pair products, RREF, keep
/// the echelon rows whose head is new relative to the input rows.
inline ReductionResult reduction_classic(const std::vector<CriticalPair>& pairs, const Basis& basis,
                                         RoundHistory& history, const Ring& ring) {
    return detail::run_reduction(symbolic_preprocessing_classic(pairs, basis, history, ring),
                                 history, ring, /*spoly_selection=*/false);
}

/// One round of the S-polynomial path: the new-information test compares
/// against the reducer heads only.
inline ReductionResult reduction_spoly(const std::vector<CriticalPair>& pairs, const Basis& basis,
                                       RoundHistory& history, const Ring& ring) {
    return detail::run_reduction(symbolic_preprocessing_spoly(pairs, basis, history, ring),
                                 history, ring, /*spoly_selection=*/true);
}

namespace detail {

/// Small pair-completion used when back-substitution may have cost the basis
/// its Groebner property: process every pair until all S-polynomials
/// top-reduce to zero, then interreduce.
inline std::vector<Polynomial> complete_basis(std::vector<Polynomial> polys, const Ring& ring) {
    std::vector<Polynomial> g;
    for (Polynomial& p : polys)
        if (!p.is_zero())
            g.push_back(std::move(p));
    std::vector<std::pair<std::size_t, std::size_t>> todo;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            todo.emplace_back(i, j);
    for (std::size_t k = 0; k < todo.size(); ++k) {
        auto [i, j] = todo[k];
        if (monomial_coprime(g[i].leading_term(), g[j].leading_term()))
            continue;
        Polynomial r = top_reduce(s_polynomial(g[i], g[j], ring), g, ring);
        if (r.is_zero())
            continue;
        for (std::size_t t = 0; t < g.size(); ++t)
            todo.emplace_back(t, g.size());
        g.push_back(std::move(r));
    }
    return interreduce(std::move(g), ring);
}

inline std::vector<Polynomial> substitute_system(const std::vector<Polynomial>& polys,
                                                 const std::map<std::size_t, int>& values,
                                                 const Ring& ring) {
    std::vector<Polynomial> out;
    out.reserve(polys.size());
    for (const Polynomial& p : polys) {
        Polynomial q = substitute_many(p, values, ring);
        if (!q.is_zero())
            out.push_back(std::move(q));
    }
    return out;
}

}  // namespace detail

/// The F4 main loop with the variant hooks. Returns the reduced basis, the
/// middle-solving assignment (ms mode only) and the run counters. An
/// inconsistent system is a normal outcome with basis {1}.
inline SolveResult f4_solve(const std::vector<Polynomial>& input, const Ring& ring,
                            const SolverConfig& cfg) {
    if (input.empty())
        throw std::invalid_argument("empty input system");
    for (const Polynomial& p : input)
        if (p.is_zero())
            throw std::invalid_argument("zero polynomial in input system");
    if (cfg.algorithm == Algorithm::buchberger)
        throw std::invalid_argument("f4_solve does not run the Buchberger reference");

    SolveResult res;
    res.stats.algorithm = to_string(cfg.algorithm);
    res.stats.order = to_string(ring.order);
    res.stats.n_vars = ring.n;
    res.stats.n_eqs = input.size();

    const bool adjoin = cfg.adjoin_field_eqs();
    std::vector<Polynomial> system = adjoin ? adjoin_field_equations(input, ring) : input;

    Basis basis;
    PairQueue queue;
    RoundHistory history(cfg.history_cap);
    bool one_entered = false;

    for (const Polynomial& f : system) {
        if (f.is_one()) {
            one_entered = true;
            break;
        }
        update(basis, queue, f, ring);
    }

    while (!one_entered && !res.inconsistent && !queue.empty()) {
        std::vector<CriticalPair> selected = select(queue);
        res.stats.c_pair += selected.size();

        auto t0 = std::chrono::steady_clock::now();
        ReductionResult red = cfg.spoly_path()
                                  ? reduction_spoly(selected, basis, history, ring)
                                  : reduction_classic(selected, basis, history, ring);
        res.stats.r_time_ms +=
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        // a reduction round is one that reduces something: selections whose
        // s-rows all vanished build no matrix and do not count
        if (!red.matrix_rows.empty())
            res.stats.round += 1;
        res.stats.l_matrix = std::max<std::uint64_t>(res.stats.l_matrix, red.matrix_rows.size());
        res.stats.reductor += red.reducer_rows;

        std::vector<Polynomial> pending = std::move(red.new_polys);

        if (cfg.middle_solving()) {
            SolveOutcome found = solve_unique(extract_candidates(pending));
            if (found.inconsistent) {
                res.inconsistent = true;
                break;
            }
            if (!found.assignments.empty()) {
                RenewOutcome rn = renew(basis, queue, history, res.assignment,
                                        found.assignments, ring, cfg.renew_mode, cfg.cascade,
                                        res.stats.round);
                res.stats.solved += rn.newly_solved;
                if (rn.inconsistent) {
                    res.inconsistent = true;
                    break;
                }
                pending = detail::substitute_system(pending, res.assignment.solved, ring);
            }
        }

        for (Polynomial& h : pending) {
            if (h.is_one()) {
                one_entered = true;
                break;
            }
            // With field equations adjoined no computed basis element may
            // exceed total degree n.
            if (adjoin && h.degree() > ring.n)
                throw std::logic_error("degree bound violated with field equations adjoined");
            update(basis, queue, std::move(h), ring);
        }
    }

    res.stats.gb_size_raw = basis.live_count();

    if (one_entered || res.inconsistent) {
        res.inconsistent = true;
        res.basis = {Polynomial::one(ring.n)};
    } else {
        res.basis = interreduce(basis.reducer_view(), ring);
        if (res.basis.size() == 1 && res.basis[0].is_one())
            res.inconsistent = true;
    }

    // Middle solving keeps harvesting from the finished basis: univariate
    // members with a unique root are pinned, substituted through, and the
    // basis is recompleted and reduced again, to a fixed point.
    if (cfg.middle_solving() && !res.inconsistent) {
        for (;;) {
            std::vector<std::pair<Polynomial, std::size_t>> candidates;
            for (const Polynomial& p : res.basis)
                if (auto var = is_univariate(p))
                    candidates.emplace_back(p, *var);
            SolveOutcome found = solve_unique(candidates);
            if (found.inconsistent) {
                res.inconsistent = true;
                res.basis = {Polynomial::one(ring.n)};
                break;
            }
            std::map<std::size_t, int> fresh;
            for (const auto& [var, val] : found.assignments)
                if (!res.assignment.solved.count(var))
                    fresh.emplace(var, val);
            if (fresh.empty())
                break;
            for (const auto& [var, val] : fresh) {
                res.assignment.solved.emplace(var, val);
                res.assignment.order_of_solution.push_back({res.stats.round, var, val});
                res.stats.solved += 1;
            }
            std::vector<Polynomial> substituted =
                detail::substitute_system(res.basis, fresh, ring);
            bool hit_one = false;
            for (const Polynomial& p : substituted)
                if (p.is_one())
                    hit_one = true;
            if (hit_one) {
                res.inconsistent = true;
                res.basis = {Polynomial::one(ring.n)};
                break;
            }
            if (substituted.empty()) {
                res.basis.clear();
                break;
            }
            // Substitution can lose the basis property; recomplete before
            // reducing so the output stays a reduced basis.
            res.basis = detail::complete_basis(std::move(substituted), ring);
        }
    }

    for (const Polynomial& p : res.basis)
        res.stats.h_deg_gb = std::max<std::uint64_t>(res.stats.h_deg_gb, p.degree());
    res.stats.gb_size = res.basis.size();
    return res;
}

}  // namespace gf2gb
