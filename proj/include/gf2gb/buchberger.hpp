#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "gf2gb/monomial.hpp"
#include "gf2gb/polynomial.hpp"
#include "gf2gb/ring.hpp"
#include "gf2gb/stats.hpp"

namespace gf2gb {

/// Textbook Buchberger, used as a desk-scale correctness oracle: normal
/// selection (lowest lcm degree first, creation order among equals),
/// S-polynomial, top-reduction against the whole basis, nonzero remainders
/// appended. The only shortcut is the coprime-head skip, whose S-polynomials
/// reduce to zero by theorem. Output interreduced.
inline std::vector<Polynomial> buchberger_reference(const std::vector<Polynomial>& input,
                                                    const Ring& ring,
                                                    RunStats* stats = nullptr) {
    if (input.empty())
        throw std::invalid_argument("empty input system");
    std::vector<Polynomial> g;
    for (const Polynomial& p : input) {
        if (p.is_zero())
            throw std::invalid_argument("zero polynomial in input system");
        bool dup = false;
        for (const Polynomial& q : g)
            if (q == p)
                dup = true;
        if (!dup)
            g.push_back(p);
    }

    struct Pending {
        std::size_t i, j;
        deg_t degree;
    };
    std::vector<Pending> pairs;
    auto add_pair = [&](std::size_t i, std::size_t j) {
        pairs.push_back(
            {i, j, monomial_lcm(g[i].leading_term(), g[j].leading_term()).degree()});
    };
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            add_pair(i, j);

    while (!pairs.empty()) {
        std::size_t pick = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (pairs[k].degree < pairs[pick].degree)
                pick = k;
        auto [i, j, deg] = pairs[pick];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(pick));
        if (stats)
            stats->c_pair += 1;
        if (monomial_coprime(g[i].leading_term(), g[j].leading_term()))
            continue;
        if (g[i] == g[j])
            continue;
        Polynomial r = top_reduce(s_polynomial(g[i], g[j], ring), g, ring);
        if (r.is_zero())
            continue;
        g.push_back(std::move(r));
        for (std::size_t t = 0; t + 1 < g.size(); ++t)
            add_pair(t, g.size() - 1);
    }

    std::vector<Polynomial> reduced = interreduce(std::move(g), ring);
    if (stats) {
        stats->gb_size = reduced.size();
        for (const Polynomial& p : reduced)
            stats->h_deg_gb = std::max<std::uint64_t>(stats->h_deg_gb, p.degree());
    }
    return reduced;
}

}  // namespace gf2gb
