#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "gf2gb/gf2n.hpp"
#include "gf2gb/monomial.hpp"
#include "gf2gb/polynomial.hpp"
#include "gf2gb/ring.hpp"

namespace gf2gb {

/// The standard cyclic-n system with coefficients reduced mod 2: for
/// k = 1..n-1 the sum of all cyclically consecutive products of k variables,
/// plus x1*...*xn + 1.
inline std::vector<Polynomial> gen_cyclic(const Ring& ring) {
    const std::size_t n = ring.n;
    if (n < 2)
        throw std::invalid_argument("cyclic-n needs n >= 2");
    std::vector<Polynomial> out;
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<Monomial> terms;
        for (std::size_t start = 0; start < n; ++start) {
            std::vector<exp_t> exps(n, 0);
            for (std::size_t j = 0; j < k; ++j)
                exps[(start + j) % n] = 1;
            terms.push_back(Monomial::from_exponents(std::move(exps)));
        }
        out.push_back(Polynomial::from_terms(std::move(terms), ring));
    }
    std::vector<exp_t> all(n, 1);
    out.push_back(Polynomial::from_terms(
        {Monomial::from_exponents(std::move(all)), Monomial(n)}, ring));
    return out;
}

namespace detail {

// Raw engine draws only: distributions are implementation-defined and would
// break bit-for-bit reproducibility across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }
    int bit() { return static_cast<int>(eng_() >> 63); }

    // uniform in [0, bound) by rejection on the low bits
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

// GF(2^n) element whose coordinates are polynomials over the ring; the
// vehicle for composing the hidden map with the affine layers symbolically.
using SymbolicElement = std::vector<Polynomial>;

struct SymbolicField {
    const Gf2nField& field;
    const Ring& ring;
    std::vector<std::uint64_t> basis_square;                 // e_i^2
    std::vector<std::vector<std::uint64_t>> basis_product;   // e_i * e_j

    SymbolicField(const Gf2nField& f, const Ring& r) : field(f), ring(r) {
        const unsigned n = f.degree();
        basis_square.resize(n);
        basis_product.assign(n, std::vector<std::uint64_t>(n));
        for (unsigned i = 0; i < n; ++i) {
            basis_square[i] = f.mul(1ull << i, 1ull << i);
            for (unsigned j = 0; j < n; ++j)
                basis_product[i][j] = f.mul(1ull << i, 1ull << j);
        }
    }

    SymbolicElement zero() const { return SymbolicElement(field.degree()); }

    SymbolicElement constant(std::uint64_t c) const {
        SymbolicElement e = zero();
        for (unsigned k = 0; k < field.degree(); ++k)
            if ((c >> k) & 1)
                e[k] = Polynomial::one(ring.n);
        return e;
    }

    void add_into(SymbolicElement& acc, const SymbolicElement& v) const {
        for (unsigned k = 0; k < field.degree(); ++k)
            acc[k] = poly_add(acc[k], v[k], ring);
    }

    // Frobenius is coordinate-linear: squaring a GF(2)-coordinate leaves it
    // fixed modulo the field equations.
    SymbolicElement frobenius(const SymbolicElement& u) const {
        SymbolicElement out = zero();
        for (unsigned i = 0; i < field.degree(); ++i) {
            if (u[i].is_zero())
                continue;
            std::uint64_t sq = basis_square[i];
            for (unsigned k = 0; k < field.degree(); ++k)
                if ((sq >> k) & 1)
                    out[k] = poly_add(out[k], u[i], ring);
        }
        return out;
    }

    SymbolicElement mul(const SymbolicElement& u, const SymbolicElement& v) const {
        SymbolicElement out = zero();
        for (unsigned i = 0; i < field.degree(); ++i) {
            if (u[i].is_zero())
                continue;
            for (unsigned j = 0; j < field.degree(); ++j) {
                if (v[j].is_zero())
                    continue;
                Polynomial prod = normal_form_field(poly_mul(u[i], v[j], ring), ring);
                if (prod.is_zero())
                    continue;
                std::uint64_t w = basis_product[i][j];
                for (unsigned k = 0; k < field.degree(); ++k)
                    if ((w >> k) & 1)
                        out[k] = poly_add(out[k], prod, ring);
            }
        }
        return out;
    }

    SymbolicElement scale(const SymbolicElement& u, std::uint64_t c) const {
        SymbolicElement out = zero();
        for (unsigned i = 0; i < field.degree(); ++i) {
            if (u[i].is_zero())
                continue;
            std::uint64_t w = field.mul(1ull << i, c);
            for (unsigned k = 0; k < field.degree(); ++k)
                if ((w >> k) & 1)
                    out[k] = poly_add(out[k], u[i], ring);
        }
        return out;
    }
};

struct AffineMap {
    std::vector<std::uint32_t> matrix;  // row masks
    std::uint32_t offset = 0;
};

inline bool invertible_gf2(const std::vector<std::uint32_t>& rows, std::size_t n) {
    std::vector<std::uint32_t> m = rows;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < n; ++c) {
        std::size_t pivot = rank;
        while (pivot < n && !((m[pivot] >> c) & 1))
            ++pivot;
        if (pivot == n)
            return false;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < n; ++r)
            if (r != rank && ((m[r] >> c) & 1))
                m[r] ^= m[rank];
        ++rank;
    }
    return rank == n;
}

inline AffineMap sample_affine(Rng& rng, std::size_t n) {
    AffineMap map;
    const std::uint32_t mask = n == 32 ? 0xffffffffu : ((1u << n) - 1);
    do {
        map.matrix.clear();
        for (std::size_t i = 0; i < n; ++i)
            map.matrix.push_back(static_cast<std::uint32_t>(rng.bits()) & mask);
    } while (!invertible_gf2(map.matrix, n));
    map.offset = static_cast<std::uint32_t>(rng.bits()) & mask;
    return map;
}

}  // namespace detail

struct HfeInstance {
    std::vector<Polynomial> system;  // public_k + ciphertext_k, k = 1..n
    std::uint32_t witness = 0;       // the plaintext, bit i = x_{i+1}
};

/// An HFE public system over GF(2): a hidden univariate polynomial over
/// GF(2^n) with Frobenius-shaped exponents 2^i and 2^i + 2^j bounded by d,
/// wrapped in two invertible affine layers, equated to the ciphertext of a
/// random plaintext. The plaintext comes back as the witness. Deterministic
/// per (d, n, seed).
inline HfeInstance gen_hfe(unsigned degree_bound, const Ring& ring, std::uint64_t seed) {
    if (degree_bound < 2)
        throw std::invalid_argument("hfe degree bound must be at least 2");
    const std::size_t n = ring.n;
    if (n < 2 || n > 31)
        throw std::invalid_argument("hfe variable count out of range");

    const Gf2nField field(static_cast<unsigned>(n));
    const detail::SymbolicField sym(field, ring);
    detail::Rng rng(seed);

    const std::uint64_t card = 1ull << n;
    auto nonzero = [&]() { return 1 + rng.below(card - 1); };

    for (;;) {
        // hidden polynomial: cross terms X^(2^i + 2^j), linear terms X^(2^i),
        // plus a free constant
        std::vector<std::pair<unsigned, unsigned>> cross;
        std::vector<unsigned> frob;
        for (unsigned i = 0; (1ull << i) <= degree_bound; ++i) {
            frob.push_back(i);
            for (unsigned j = i; (1ull << i) + (1ull << j) <= degree_bound; ++j)
                cross.emplace_back(i, j);
        }
        std::vector<std::uint64_t> cross_coef, frob_coef;
        for (std::size_t k = 0; k < cross.size(); ++k)
            cross_coef.push_back(nonzero());
        for (std::size_t k = 0; k < frob.size(); ++k)
            frob_coef.push_back(nonzero());
        std::uint64_t hidden_const = rng.below(card);

        detail::AffineMap inner = detail::sample_affine(rng, n);
        detail::AffineMap outer = detail::sample_affine(rng, n);

        // X = inner(x) as n linear coordinate polynomials
        detail::SymbolicElement x = sym.zero();
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Monomial> terms;
            for (std::size_t j = 0; j < n; ++j)
                if ((inner.matrix[k] >> j) & 1) {
                    std::vector<exp_t> e(n, 0);
                    e[j] = 1;
                    terms.push_back(Monomial::from_exponents(std::move(e)));
                }
            if ((inner.offset >> k) & 1)
                terms.push_back(Monomial(n));
            x[k] = Polynomial::from_terms(std::move(terms), ring);
        }

        unsigned max_frob = 0;
        for (auto [i, j] : cross)
            max_frob = std::max(max_frob, j);
        for (unsigned i : frob)
            max_frob = std::max(max_frob, i);
        std::vector<detail::SymbolicElement> powers{x};
        for (unsigned i = 1; i <= max_frob; ++i)
            powers.push_back(sym.frobenius(powers.back()));

        detail::SymbolicElement value = sym.constant(hidden_const);
        for (std::size_t k = 0; k < cross.size(); ++k)
            sym.add_into(value,
                         sym.scale(sym.mul(powers[cross[k].first], powers[cross[k].second]),
                                   cross_coef[k]));
        for (std::size_t k = 0; k < frob.size(); ++k)
            sym.add_into(value, sym.scale(powers[frob[k]], frob_coef[k]));

        // outer affine layer
        std::vector<Polynomial> pub(n);
        for (std::size_t k = 0; k < n; ++k) {
            Polynomial acc;
            for (std::size_t j = 0; j < n; ++j)
                if ((outer.matrix[k] >> j) & 1)
                    acc = poly_add(acc, value[j], ring);
            if ((outer.offset >> k) & 1)
                acc = poly_add(acc, Polynomial::one(n), ring);
            pub[k] = std::move(acc);
        }

        std::uint32_t plaintext =
            static_cast<std::uint32_t>(rng.bits()) & (n == 32 ? 0xffffffffu : ((1u << n) - 1));

        HfeInstance inst;
        inst.witness = plaintext;
        bool degenerate = false;
        for (std::size_t k = 0; k < n; ++k) {
            Polynomial eq = pub[k];
            if (evaluate(pub[k], plaintext) == 1)
                eq = poly_add(eq, Polynomial::one(n), ring);
            if (eq.is_zero() || eq.is_one()) {
                degenerate = true;
                break;
            }
            inst.system.push_back(std::move(eq));
        }
        if (!degenerate)
            return inst;
        // degenerate draw; the rng stream continues, keeping determinism
    }
}

/// Exhaustive GF(2) variety: exactly the points of {0,1}^n where every
/// polynomial vanishes. Enumeration budget capped at n <= 24.
inline std::vector<std::uint32_t> brute_force_variety(const std::vector<Polynomial>& system,
                                                      const Ring& ring) {
    if (ring.n > 24)
        throw std::invalid_argument("brute force variety capped at 24 variables");
    std::vector<std::uint32_t> out;
    const std::uint32_t total = 1u << ring.n;
    for (std::uint32_t point = 0; point < total; ++point) {
        bool ok = true;
        for (const Polynomial& p : system)
            if (evaluate(p, point) == 1) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(point);
    }
    return out;
}

}  // namespace gf2gb
