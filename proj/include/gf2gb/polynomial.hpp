#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2gb/monomial.hpp"
#include "gf2gb/ring.hpp"

namespace gf2gb {

/// A GF(2) polynomial: a set of monomials, kept strictly descending under
/// the ring order. Every present monomial has coefficient 1; addition is
/// symmetric difference. The zero polynomial has no terms.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }

    static Polynomial one(std::size_t n_vars) {
        Polynomial p;
        p.terms_.emplace_back(n_vars);
        return p;
    }

    static Polynomial from_monomial(Monomial m) {
        Polynomial p;
        p.terms_.push_back(std::move(m));
        return p;
    }

    /// Build from a term list already strictly descending under the ring order.
    static Polynomial from_sorted_terms(std::vector<Monomial> terms) {
        Polynomial p;
        p.terms_ = std::move(terms);
        return p;
    }

    /// Build from an arbitrary term list: sorts descending and cancels
    /// duplicate monomials in pairs.
    static Polynomial from_terms(std::vector<Monomial> terms, const Ring& ring) {
        std::sort(terms.begin(), terms.end(), [&](const Monomial& a, const Monomial& b) {
            return compare(a, b, ring) == std::strong_ordering::greater;
        });
        Polynomial p;
        std::size_t i = 0;
        while (i < terms.size()) {
            std::size_t j = i;
            while (j < terms.size() && terms[j] == terms[i])
                ++j;
            if ((j - i) % 2 == 1)
                p.terms_.push_back(std::move(terms[i]));
            i = j;
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    const Monomial& leading_term() const {
        if (terms_.empty())
            throw std::logic_error("leading term of the zero polynomial");
        return terms_[0];
    }

    /// Maximum total degree over the terms; 0 for the zero polynomial.
    deg_t degree() const {
        deg_t d = 0;
        for (const Monomial& m : terms_)
            d = std::max(d, m.degree());
        return d;
    }

    bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

private:
    friend Polynomial poly_add(const Polynomial&, const Polynomial&, const Ring&);
    friend Polynomial poly_mul_monomial(const Monomial&, const Polynomial&, const Ring&);
    std::vector<Monomial> terms_;
};

/// GF(2) sum: merge of the two descending term lists with pairwise cancellation.
inline Polynomial poly_add(const Polynomial& p, const Polynomial& q, const Ring& ring) {
    Polynomial out;
    out.terms_.reserve(p.term_count() + q.term_count());
    std::size_t i = 0, j = 0;
    while (i < p.term_count() && j < q.term_count()) {
        auto c = compare(p.terms_[i], q.terms_[j], ring);
        if (c == std::strong_ordering::greater) {
            out.terms_.push_back(p.terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            out.terms_.push_back(q.terms_[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    out.terms_.insert(out.terms_.end(), p.terms_.begin() + i, p.terms_.end());
    out.terms_.insert(out.terms_.end(), q.terms_.begin() + j, q.terms_.end());
    return out;
}

/// Multiply every term by m. Admissibility of the order keeps the term list
/// descending, so no re-sort is needed.
inline Polynomial poly_mul_monomial(const Monomial& m, const Polynomial& p, const Ring&) {
    Polynomial out;
    out.terms_.reserve(p.term_count());
    for (const Monomial& t : p.terms())
        out.terms_.push_back(monomial_mul(m, t));
    return out;
}

/// General product, used by the generators and in tests.
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q, const Ring& ring) {
    std::vector<Monomial> terms;
    terms.reserve(p.term_count() * q.term_count());
    for (const Monomial& a : p.terms())
        for (const Monomial& b : q.terms())
            terms.push_back(monomial_mul(a, b));
    return Polynomial::from_terms(std::move(terms), ring);
}

/// Normal form with respect to the field equations x_i^2 + x_i: clamp every
/// exponent to at most 1 and cancel the collisions. Idempotent.
inline Polynomial normal_form_field(const Polynomial& p, const Ring& ring) {
    bool touched = false;
    for (const Monomial& t : p.terms())
        if (!is_squarefree(t)) {
            touched = true;
            break;
        }
    if (!touched)
        return p;
    std::vector<Monomial> terms;
    terms.reserve(p.term_count());
    for (const Monomial& t : p.terms())
        terms.push_back(squarefree_part(t));
    return Polynomial::from_terms(std::move(terms), ring);
}

/// (lcm/HT(f))*f + (lcm/HT(g))*g. With apply_nf the two products are taken
/// to field normal form before the sum. The head always lands strictly
/// below the lcm.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Ring& ring,
                               bool apply_nf = false) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_polynomial of a zero polynomial");
    const Monomial lcm = monomial_lcm(f.leading_term(), g.leading_term());
    Polynomial pf = poly_mul_monomial(*monomial_divide(lcm, f.leading_term()), f, ring);
    Polynomial pg = poly_mul_monomial(*monomial_divide(lcm, g.leading_term()), g, ring);
    if (apply_nf) {
        pf = normal_form_field(pf, ring);
        pg = normal_form_field(pg, ring);
    }
    Polynomial s = poly_add(pf, pg, ring);
    if (!s.is_zero() && compare(s.leading_term(), lcm, ring) != std::strong_ordering::less)
        throw std::logic_error("s_polynomial head did not cancel below the lcm");
    return s;
}

/// Pick the reducer for monomial t among the basis range: divisibility of t
/// by the head term, preferring the largest head, ties to the lowest index.
template <class Range>
const Polynomial* find_reducer(const Monomial& t, const Range& basis, const Ring& ring) {
    const Polynomial* best = nullptr;
    for (const Polynomial& g : basis) {
        if (g.is_zero() || !monomial_divides(g.leading_term(), t))
            continue;
        if (!best || compare(g.leading_term(), best->leading_term(), ring) ==
                         std::strong_ordering::greater)
            best = &g;
    }
    return best;
}

/// Top-reduction: while the head of r is divisible by some basis head,
/// cancel it with the chosen reducer multiple. Only the head is touched.
template <class Range>
Polynomial top_reduce(const Polynomial& p, const Range& basis, const Ring& ring) {
    Polynomial r = p;
    while (!r.is_zero()) {
        const Polynomial* g = find_reducer(r.leading_term(), basis, ring);
        if (!g)
            break;
        Monomial q = *monomial_divide(r.leading_term(), g->leading_term());
        r = poly_add(r, poly_mul_monomial(q, *g, ring), ring);
    }
    return r;
}

/// Full multivariate division: every monomial of the remainder is
/// irreducible with respect to the basis heads. Heads move to the remainder
/// in strictly descending order, so the collected tail needs no re-sort.
template <class Range>
Polynomial full_reduce(const Polynomial& p, const Range& basis, const Ring& ring) {
    Polynomial r = p;
    std::vector<Monomial> tail;
    while (!r.is_zero()) {
        const Polynomial* g = find_reducer(r.leading_term(), basis, ring);
        if (!g) {
            tail.push_back(r.leading_term());
            r = poly_add(r, Polynomial::from_monomial(r.leading_term()), ring);
            continue;
        }
        Monomial q = *monomial_divide(r.leading_term(), g->leading_term());
        r = poly_add(r, poly_mul_monomial(q, *g, ring), ring);
    }
    return Polynomial::from_terms(std::move(tail), ring);
}

/// Mutual full reduction to the canonical reduced basis: no monomial of any
/// element is divisible by another element's head, every element monic (free
/// over GF(2)). Unique per ideal and order once the input generates as a
/// Groebner basis, so cross-route equality checks are exact text comparisons.
inline std::vector<Polynomial> interreduce(std::vector<Polynomial> polys, const Ring& ring) {
    std::vector<Polynomial> work;
    for (Polynomial& p : polys) {
        if (p.is_zero())
            continue;
        bool dup = false;
        for (const Polynomial& q : work)
            if (q == p) {
                dup = true;
                break;
            }
        if (!dup)
            work.push_back(std::move(p));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(work.size() - 1);
            for (std::size_t j = 0; j < work.size(); ++j)
                if (j != i)
                    others.push_back(work[j]);
            Polynomial r = full_reduce(work[i], others, ring);
            if (r == work[i])
                continue;
            changed = true;
            if (r.is_zero()) {
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                --i;
            } else {
                work[i] = std::move(r);
            }
        }
    }
    std::sort(work.begin(), work.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(a.leading_term(), b.leading_term(), ring) == std::strong_ordering::greater;
    });
    return work;
}

/// The single variable carried by every non-constant monomial of p, if any.
inline std::optional<std::size_t> is_univariate(const Polynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("is_univariate of the zero polynomial");
    std::optional<std::size_t> var;
    for (const Monomial& t : p.terms()) {
        if (t.is_one())
            continue;
        std::optional<std::size_t> v;
        for (std::size_t i = 0; i < t.n_vars(); ++i) {
            if (t.exponent(i) == 0)
                continue;
            if (v)
                return std::nullopt;  // two variables in one monomial
            v = i;
        }
        if (var && *var != *v)
            return std::nullopt;
        var = v;
    }
    return var;  // nullopt for a constant polynomial
}

/// Roots of a univariate polynomial over GF(2), by evaluation at 0 and 1.
inline std::vector<int> roots_gf2(const Polynomial& p, std::size_t var) {
    (void)var;
    // p(0): only the constant term survives. p(1): parity of the term count.
    bool at0 = false;
    for (const Monomial& t : p.terms())
        if (t.is_one())
            at0 = !at0;
    bool at1 = p.term_count() % 2 == 1;
    std::vector<int> roots;
    if (!at0)
        roots.push_back(0);
    if (!at1)
        roots.push_back(1);
    return roots;
}

/// Plug value into variable var: terms containing var are dropped (value 0)
/// or have var removed (value 1). The result never mentions var.
inline Polynomial substitute(const Polynomial& p, std::size_t var, int value, const Ring& ring) {
    std::vector<Monomial> terms;
    terms.reserve(p.term_count());
    for (const Monomial& t : p.terms()) {
        if (t.exponent(var) == 0) {
            terms.push_back(t);
        } else if (value == 1) {
            Monomial u = t;
            u.set_exponent(var, 0);
            terms.push_back(std::move(u));
        }
    }
    return Polynomial::from_terms(std::move(terms), ring);
}

/// Evaluate at a GF(2) point given as a bit mask (bit i = value of x_{i+1}).
inline int evaluate(const Polynomial& p, std::uint32_t point) {
    int acc = 0;
    for (const Monomial& t : p.terms()) {
        bool on = true;
        for (std::size_t i = 0; i < t.n_vars() && on; ++i)
            if (t.exponent(i) > 0 && ((point >> i) & 1u) == 0)
                on = false;
        acc ^= on ? 1 : 0;
    }
    return acc;
}

/// Canonical text form: descending terms joined by " + ", zero renders "0".
inline std::string render(const Polynomial& p, const Ring& ring) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (const Monomial& t : p.terms()) {
        if (!out.empty())
            out += " + ";
        out += render(t, ring);
    }
    return out;
}

}  // namespace gf2gb
