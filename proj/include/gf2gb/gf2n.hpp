#pragma once

#include <cstdint>
#include <stdexcept>

namespace gf2gb {

namespace detail {

// Carry-less multiplication of GF(2) polynomials held in bit masks.
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1)
            acc ^= a;
        a <<= 1;
        b >>= 1;
    }
    return acc;
}

inline int bit_degree(std::uint64_t v) {
    int d = -1;
    while (v) {
        ++d;
        v >>= 1;
    }
    return d;
}

inline std::uint64_t poly_mod(std::uint64_t v, std::uint64_t modulus) {
    const int md = bit_degree(modulus);
    int vd = bit_degree(v);
    while (vd >= md) {
        v ^= modulus << (vd - md);
        vd = bit_degree(v);
    }
    return v;
}

inline std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a = poly_mod(a, b);
        std::uint64_t t = a;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

/// GF(2^n) in polynomial basis modulo a fixed irreducible: the
/// lexicographically smallest monic irreducible of degree n, found by
/// exhaustive search at construction. Elements are bit masks, bit i holding
/// the coefficient of x^i.
class Gf2nField {
public:
    explicit Gf2nField(unsigned n) : n_(n) {
        if (n < 2 || n > 31)
            throw std::invalid_argument("field degree out of range");
        const std::uint64_t top = 1ull << n;
        for (std::uint64_t low = 1; low < top; low += 2) {
            if (is_irreducible(top | low, n)) {
                modulus_ = top | low;
                return;
            }
        }
        throw std::logic_error("no irreducible polynomial found");  // unreachable
    }

    unsigned degree() const { return n_; }
    std::uint64_t modulus() const { return modulus_; }

    static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return a ^ b; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return detail::poly_mod(detail::clmul(a, b), modulus_);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1)
                acc = mul(acc, a);
            a = mul(a, a);
            e >>= 1;
        }
        return acc;
    }

    /// f of degree n is irreducible iff it shares no factor with x^(2^k) + x
    /// for any k up to n/2, since that product collects all irreducibles of
    /// degree dividing k.
    static bool is_irreducible(std::uint64_t f, unsigned n) {
        if ((f & 1) == 0)
            return false;  // divisible by x
        std::uint64_t x_pow = 2;  // x
        for (unsigned k = 1; k <= n / 2; ++k) {
            x_pow = detail::poly_mod(detail::clmul(x_pow, x_pow), f);
            if (detail::poly_gcd(f, x_pow ^ 2u) != 1)
                return false;
        }
        return true;
    }

private:
    unsigned n_;
    std::uint64_t modulus_ = 0;
};

}  // namespace gf2gb
