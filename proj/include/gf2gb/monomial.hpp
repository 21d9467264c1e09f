#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gf2gb/ring.hpp"

namespace gf2gb {

using exp_t = std::uint16_t;
using deg_t = std::uint32_t;

/// A power product of the ring variables. The total degree is cached and
/// kept in sync with the exponent vector.
class Monomial {
public:
    Monomial() = default;

    /// The monomial 1 in n variables.
    explicit Monomial(std::size_t n_vars) : exps_(n_vars, 0) {}

    static Monomial from_exponents(std::vector<exp_t> exps) {
        Monomial m;
        m.exps_ = std::move(exps);
        for (exp_t e : m.exps_)
            m.deg_ += e;
        return m;
    }

    std::size_t n_vars() const { return exps_.size(); }
    deg_t degree() const { return deg_; }
    exp_t exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<exp_t>& exponents() const { return exps_; }
    bool is_one() const { return deg_ == 0; }

    void set_exponent(std::size_t i, exp_t e) {
        deg_ = deg_ - exps_[i] + e;
        exps_[i] = e;
    }

    bool operator==(const Monomial& rhs) const { return deg_ == rhs.deg_ && exps_ == rhs.exps_; }

private:
    std::vector<exp_t> exps_;
    deg_t deg_ = 0;
};

/// Total order on monomials. grevlex compares total degree first and breaks
/// ties at the last differing variable, where the smaller exponent wins;
/// lex compares exponents from x1 down.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b, const Ring& ring) {
    const std::size_t n = ring.n;
    if (ring.order == MonomialOrder::grevlex) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree() ? std::strong_ordering::less : std::strong_ordering::greater;
        for (std::size_t i = n; i-- > 0;) {
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) > b.exponent(i) ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    std::vector<exp_t> exps(a.n_vars());
    for (std::size_t i = 0; i < a.n_vars(); ++i)
        exps[i] = static_cast<exp_t>(a.exponent(i) + b.exponent(i));
    return Monomial::from_exponents(std::move(exps));
}

/// Componentwise max of exponents.
inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    std::vector<exp_t> exps(a.n_vars());
    for (std::size_t i = 0; i < a.n_vars(); ++i)
        exps[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial::from_exponents(std::move(exps));
}

inline bool monomial_divides(const Monomial& b, const Monomial& a) {
    if (b.degree() > a.degree())
        return false;
    for (std::size_t i = 0; i < a.n_vars(); ++i)
        if (b.exponent(i) > a.exponent(i))
            return false;
    return true;
}

/// a/b when b divides a, none otherwise.
inline std::optional<Monomial> monomial_divide(const Monomial& a, const Monomial& b) {
    if (!monomial_divides(b, a))
        return std::nullopt;
    std::vector<exp_t> exps(a.n_vars());
    for (std::size_t i = 0; i < a.n_vars(); ++i)
        exps[i] = static_cast<exp_t>(a.exponent(i) - b.exponent(i));
    return Monomial::from_exponents(std::move(exps));
}

inline bool monomial_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.n_vars(); ++i)
        if (a.exponent(i) > 0 && b.exponent(i) > 0)
            return false;
    return true;
}

/// Clamp every exponent to at most 1.
inline Monomial squarefree_part(const Monomial& m) {
    std::vector<exp_t> exps(m.n_vars());
    for (std::size_t i = 0; i < m.n_vars(); ++i)
        exps[i] = m.exponent(i) > 0 ? 1 : 0;
    return Monomial::from_exponents(std::move(exps));
}

inline bool is_squarefree(const Monomial& m) {
    for (std::size_t i = 0; i < m.n_vars(); ++i)
        if (m.exponent(i) > 1)
            return false;
    return true;
}

/// Canonical text form: "*"-joined variables in index order, "^k" only for k > 1.
inline std::string render(const Monomial& m, const Ring& ring) {
    if (m.is_one())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < ring.n; ++i) {
        if (m.exponent(i) == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += ring.names[i];
        if (m.exponent(i) > 1)
            out += "^" + std::to_string(m.exponent(i));
    }
    return out;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (exp_t e : m.exponents())
            h = (h ^ e) * 0x100000001b3ull;
        return h;
    }
};

}  // namespace gf2gb
