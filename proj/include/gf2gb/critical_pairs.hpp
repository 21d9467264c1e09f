#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gf2gb/monomial.hpp"
#include "gf2gb/polynomial.hpp"
#include "gf2gb/ring.hpp"

namespace gf2gb {

/// (lcm, u1, f1, u2, f2): u_k * HT(G[f_k]) = lcm, f1 != f2.
struct CriticalPair {
    Monomial lcm;
    deg_t degree = 0;
    Monomial u1;
    std::size_t f1 = 0;
    Monomial u2;
    std::size_t f2 = 0;
};

/// The middle basis. Entries marked redundant stay available as reducers but
/// take part in no further pairing; entries killed by back-substitution are
/// not alive.
class Basis {
public:
    struct Entry {
        Polynomial poly;
        bool redundant = false;
        bool alive = true;
    };

    std::size_t size() const { return entries_.size(); }
    const Entry& entry(std::size_t i) const { return entries_[i]; }
    Entry& entry(std::size_t i) { return entries_[i]; }
    const Polynomial& poly(std::size_t i) const { return entries_[i].poly; }

    std::size_t append(Polynomial p) {
        entries_.push_back(Entry{std::move(p), false, true});
        return entries_.size() - 1;
    }

    /// Alive entries, redundant included: the reducer pool.
    std::vector<Polynomial> reducer_view() const {
        std::vector<Polynomial> out;
        out.reserve(entries_.size());
        for (const Entry& e : entries_)
            if (e.alive)
                out.push_back(e.poly);
        return out;
    }

    /// Alive non-redundant entries: the basis as the update pass maintains it.
    std::vector<Polynomial> live_view() const {
        std::vector<Polynomial> out;
        for (const Entry& e : entries_)
            if (e.alive && !e.redundant)
                out.push_back(e.poly);
        return out;
    }

    std::size_t live_count() const {
        std::size_t c = 0;
        for (const Entry& e : entries_)
            if (e.alive && !e.redundant)
                ++c;
        return c;
    }

private:
    std::vector<Entry> entries_;
};

/// Pending critical pairs in insertion order, retrievable by minimal degree.
class PairQueue {
public:
    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }
    const std::vector<CriticalPair>& pairs() const { return pairs_; }
    std::vector<CriticalPair>& pairs() { return pairs_; }

    void push(CriticalPair p) { pairs_.push_back(std::move(p)); }

    deg_t min_degree() const {
        deg_t d = pairs_.front().degree;
        for (const CriticalPair& p : pairs_)
            d = std::min(d, p.degree);
        return d;
    }

private:
    std::vector<CriticalPair> pairs_;
};

inline CriticalPair make_critical_pair(std::size_t i, std::size_t j, const Basis& basis,
                                       const Ring& ring) {
    const Polynomial& fi = basis.poly(i);
    const Polynomial& fj = basis.poly(j);
    if (fi.is_zero() || fj.is_zero())
        throw std::invalid_argument("critical pair of a zero polynomial");
    (void)ring;
    CriticalPair p;
    p.lcm = monomial_lcm(fi.leading_term(), fj.leading_term());
    p.degree = p.lcm.degree();
    p.u1 = *monomial_divide(p.lcm, fi.leading_term());
    p.f1 = i;
    p.u2 = *monomial_divide(p.lcm, fj.leading_term());
    p.f2 = j;
    return p;
}

/// Gebauer-Moller pair installation for the entry at index h_idx (already in
/// the basis). New pairs against the given partner indices are pruned by the
/// coprimality and lcm-divisibility criteria; old pairs are dropped under the
/// chain condition. Existing entries whose head the new head divides are
/// marked redundant.
inline void gm_install(Basis& basis, PairQueue& queue, std::size_t h_idx,
                       const std::vector<std::size_t>& partners, const Ring& ring,
                       bool mark_redundant = true) {
    const Monomial& ht_h = basis.poly(h_idx).leading_term();

    std::vector<CriticalPair> cand;
    cand.reserve(partners.size());
    for (std::size_t g : partners)
        cand.push_back(make_critical_pair(h_idx, g, basis, ring));

    // First pass: a candidate survives if its heads are coprime (kept for the
    // moment so its lcm can still knock out others) or no other candidate's
    // lcm divides its lcm.
    std::vector<CriticalPair> kept;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool coprime = monomial_coprime(basis.poly(cand[i].f1).leading_term(),
                                        basis.poly(cand[i].f2).leading_term());
        bool dominated = false;
        if (!coprime) {
            for (std::size_t j = i + 1; j < cand.size() && !dominated; ++j)
                if (monomial_divides(cand[j].lcm, cand[i].lcm))
                    dominated = true;
            for (const CriticalPair& k : kept)
                if (dominated)
                    break;
                else if (monomial_divides(k.lcm, cand[i].lcm))
                    dominated = true;
        }
        if (coprime || !dominated)
            kept.push_back(cand[i]);
    }
    // Second pass: coprime heads reduce to zero, drop those pairs for good.
    std::vector<CriticalPair> fresh;
    for (CriticalPair& p : kept)
        if (!monomial_coprime(basis.poly(p.f1).leading_term(),
                              basis.poly(p.f2).leading_term()))
            fresh.push_back(std::move(p));

    // Chain condition on the old pairs: drop (g1, g2) when HT(h) strictly
    // refines its lcm, i.e. divides it while neither pair with h shares it.
    auto& old_pairs = queue.pairs();
    std::vector<CriticalPair> survivors;
    survivors.reserve(old_pairs.size() + fresh.size());
    for (CriticalPair& p : old_pairs) {
        if (!monomial_divides(ht_h, p.lcm)) {
            survivors.push_back(std::move(p));
            continue;
        }
        Monomial lcm1 = monomial_lcm(basis.poly(p.f1).leading_term(), ht_h);
        Monomial lcm2 = monomial_lcm(ht_h, basis.poly(p.f2).leading_term());
        if (lcm1 == p.lcm || lcm2 == p.lcm)
            survivors.push_back(std::move(p));
    }
    for (CriticalPair& p : fresh)
        survivors.push_back(std::move(p));
    old_pairs = std::move(survivors);

    if (mark_redundant) {
        for (std::size_t g : partners) {
            Basis::Entry& e = basis.entry(g);
            if (monomial_divides(ht_h, e.poly.leading_term()))
                e.redundant = true;
        }
    }
}

/// Append h to the basis and install its pairs against every alive
/// non-redundant entry.
inline std::size_t update(Basis& basis, PairQueue& queue, Polynomial h, const Ring& ring) {
    if (h.is_zero())
        throw std::invalid_argument("update with a zero polynomial");
    std::vector<std::size_t> partners;
    for (std::size_t g = 0; g < basis.size(); ++g)
        if (basis.entry(g).alive && !basis.entry(g).redundant)
            partners.push_back(g);
    std::size_t idx = basis.append(std::move(h));
    gm_install(basis, queue, idx, partners, ring);
    return idx;
}

/// Remove and return every pair whose lcm degree equals the queue minimum,
/// in insertion order.
inline std::vector<CriticalPair> select(PairQueue& queue) {
    if (queue.empty())
        throw std::invalid_argument("select on an empty pair queue");
    deg_t d = queue.min_degree();
    std::vector<CriticalPair> chosen;
    std::vector<CriticalPair> rest;
    for (CriticalPair& p : queue.pairs()) {
        if (p.degree == d)
            chosen.push_back(std::move(p));
        else
            rest.push_back(std::move(p));
    }
    queue.pairs() = std::move(rest);
    return chosen;
}

}  // namespace gf2gb
