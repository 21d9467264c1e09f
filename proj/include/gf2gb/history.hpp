#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gf2gb/monomial.hpp"
#include "gf2gb/polynomial.hpp"
#include "gf2gb/ring.hpp"

namespace gf2gb {

/// Per-round record of the reduction matrices: the input rows in submission
/// order and the echelon-form rows, both as polynomials, with head indexes
/// for the product-reuse lookup.
class RoundHistory {
public:
    struct Round {
        std::vector<Polynomial> inputs;
        std::vector<Polynomial> echelon;
        std::unordered_map<Monomial, std::vector<std::size_t>, MonomialHash> input_heads;
        std::unordered_map<Monomial, std::size_t, MonomialHash> echelon_heads;
    };

    explicit RoundHistory(std::size_t cap = 0) : cap_(cap) {}

    std::size_t round_count() const { return rounds_.size(); }
    const Round& round(std::size_t i) const { return rounds_[i]; }

    void push_round(std::vector<Polynomial> inputs, std::vector<Polynomial> echelon) {
        Round r;
        r.inputs = std::move(inputs);
        r.echelon = std::move(echelon);
        reindex(r);
        rounds_.push_back(std::move(r));
        if (cap_ > 0 && rounds_.size() > cap_)
            rounds_.pop_front();
    }

    /// Product-reuse rule: replace (t, f) by (t', f') with the same evaluated
    /// head, preferring an echelon row of an earlier round that already holds
    /// the reduction of u*f for the largest divisor u of t. Head preservation
    /// is asserted on every call.
    std::pair<Monomial, Polynomial> simplify(const Monomial& t, const Polynomial& f,
                                             const Ring& ring) const {
        std::vector<const Polynomial*> chain;
        auto [t2, f2] = simplify_impl(t, f, ring, chain);
        if (!f2.is_zero() && !f.is_zero()) {
            Monomial expect = monomial_mul(t, f.leading_term());
            Monomial got = monomial_mul(t2, f2.leading_term());
            if (!(expect == got))
                throw std::logic_error("simplify changed the product head");
        }
        return {std::move(t2), std::move(f2)};
    }

    /// Back-substitution support: rewrite every stored row, drop rows that
    /// collapse to zero, rebuild the head indexes.
    void substitute_all(const std::map<std::size_t, int>& values, const Ring& ring) {
        for (Round& r : rounds_) {
            apply_substitution(r.inputs, values, ring);
            apply_substitution(r.echelon, values, ring);
            reindex(r);
        }
    }

private:
    static void apply_substitution(std::vector<Polynomial>& rows,
                                   const std::map<std::size_t, int>& values, const Ring& ring) {
        std::vector<Polynomial> kept;
        kept.reserve(rows.size());
        for (Polynomial& p : rows) {
            for (const auto& [var, val] : values)
                p = substitute(p, var, val, ring);
            if (!p.is_zero())
                kept.push_back(std::move(p));
        }
        rows = std::move(kept);
    }

    static void reindex(Round& r) {
        r.input_heads.clear();
        r.echelon_heads.clear();
        for (std::size_t i = 0; i < r.inputs.size(); ++i)
            r.input_heads[r.inputs[i].leading_term()].push_back(i);
        for (std::size_t i = 0; i < r.echelon.size(); ++i)
            r.echelon_heads.emplace(r.echelon[i].leading_term(), i);
    }

    // All divisors of t, largest first under the ring order. The count is
    // capped; multipliers beyond the cap only arise in the unbounded-degree
    // mode where the reuse rule is a heuristic anyway.
    std::vector<Monomial> divisors_descending(const Monomial& t, const Ring& ring) const {
        static constexpr std::size_t kDivisorCap = 4096;
        std::vector<Monomial> out;
        out.emplace_back(t.n_vars());
        for (std::size_t i = 0; i < t.n_vars() && out.size() <= kDivisorCap; ++i) {
            if (t.exponent(i) == 0)
                continue;
            const std::size_t base = out.size();
            for (exp_t e = 1; e <= t.exponent(i); ++e)
                for (std::size_t k = 0; k < base && out.size() <= kDivisorCap; ++k) {
                    Monomial m = out[k];
                    m.set_exponent(i, e);
                    out.push_back(std::move(m));
                }
        }
        std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
            return compare(a, b, ring) == std::strong_ordering::greater;
        });
        return out;
    }

    std::pair<Monomial, Polynomial> simplify_impl(const Monomial& t, const Polynomial& f,
                                                  const Ring& ring,
                                                  std::vector<const Polynomial*>& chain) const {
        if (rounds_.empty() || f.is_zero())
            return {t, f};
        for (const Monomial& u : divisors_descending(t, ring)) {
            Monomial head = monomial_mul(u, f.leading_term());
            // newest round first
            for (std::size_t ri = rounds_.size(); ri-- > 0;) {
                const Round& r = rounds_[ri];
                auto heads = r.input_heads.find(head);
                if (heads == r.input_heads.end())
                    continue;
                Polynomial product = poly_mul_monomial(u, f, ring);
                bool member = false;
                for (std::size_t row : heads->second)
                    if (r.inputs[row] == product) {
                        member = true;
                        break;
                    }
                if (!member)
                    continue;
                auto ech = r.echelon_heads.find(head);
                if (ech == r.echelon_heads.end())
                    continue;
                const Polynomial& p = r.echelon[ech->second];
                if (p == f)
                    continue;  // no progress; also guards against self-loops
                bool seen = false;
                for (const Polynomial* q : chain)
                    if (*q == p) {
                        seen = true;
                        break;
                    }
                if (seen)
                    continue;
                if (u == t)
                    return {Monomial(t.n_vars()), p};
                chain.push_back(&f);
                return simplify_impl(*monomial_divide(t, u), p, ring, chain);
            }
        }
        return {t, f};
    }

    std::deque<Round> rounds_;
    std::size_t cap_ = 0;
};

}  // namespace gf2gb
