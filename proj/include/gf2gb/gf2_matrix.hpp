#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gf2gb/monomial.hpp"
#include "gf2gb/polynomial.hpp"
#include "gf2gb/ring.hpp"

namespace gf2gb {

enum class RowTag { pair_product, s_polynomial, reducer };

/// Dense GF(2) matrix whose columns are the round's monomials in strictly
/// descending order and whose rows are bit-packed coefficient vectors.
class MacaulayMatrix {
public:
    MacaulayMatrix() = default;

    /// Deduplicated, order-sorted column index over the input rows.
    static MacaulayMatrix build(const std::vector<Polynomial>& polys,
                                const std::vector<RowTag>& tags, const Ring& ring) {
        MacaulayMatrix m;
        m.tags_ = tags;
        std::vector<Monomial> cols;
        std::size_t total = 0;
        for (const Polynomial& p : polys)
            total += p.term_count();
        cols.reserve(total);
        for (const Polynomial& p : polys) {
            if (p.is_zero())
                throw std::invalid_argument("zero row in matrix build");
            for (const Monomial& t : p.terms())
                cols.push_back(t);
        }
        std::sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) {
            return compare(a, b, ring) == std::strong_ordering::greater;
        });
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        m.columns_ = std::move(cols);

        std::unordered_map<Monomial, std::size_t, MonomialHash> index;
        index.reserve(m.columns_.size() * 2);
        for (std::size_t c = 0; c < m.columns_.size(); ++c)
            index.emplace(m.columns_[c], c);

        const std::size_t words = (m.columns_.size() + 63) / 64;
        m.rows_.assign(polys.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t r = 0; r < polys.size(); ++r)
            for (const Monomial& t : polys[r].terms()) {
                std::size_t c = index.at(t);
                m.rows_[r][c / 64] |= 1ull << (c % 64);
            }
        return m;
    }

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return columns_.size(); }
    const std::vector<Monomial>& columns() const { return columns_; }
    const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }
    const std::vector<RowTag>& tags() const { return tags_; }

    bool bit(std::size_t r, std::size_t c) const {
        return (rows_[r][c / 64] >> (c % 64)) & 1u;
    }

    Polynomial row_polynomial(std::size_t r) const {
        // columns are strictly descending, so the term list comes out sorted
        std::vector<Monomial> terms;
        for (std::size_t c = 0; c < columns_.size(); ++c)
            if (bit(r, c))
                terms.push_back(columns_[c]);
        return Polynomial::from_sorted_terms(std::move(terms));
    }

    std::vector<Polynomial> to_polynomials() const {
        std::vector<Polynomial> out;
        out.reserve(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r)
            out.push_back(row_polynomial(r));
        return out;
    }

    /// Reduced row echelon form: columns left to right, pivot is the first
    /// available row, the pivot column is cleared above and below, zero rows
    /// are dropped. Deterministic.
    MacaulayMatrix reduced_row_echelon() const {
        MacaulayMatrix out = *this;
        auto& rows = out.rows_;
        const std::size_t n_rows = rows.size();
        const std::size_t n_cols = columns_.size();
        std::size_t rank = 0;
        for (std::size_t c = 0; c < n_cols && rank < n_rows; ++c) {
            const std::size_t w = c / 64;
            const std::uint64_t mask = 1ull << (c % 64);
            std::size_t pivot = rank;
            while (pivot < n_rows && !(rows[pivot][w] & mask))
                ++pivot;
            if (pivot == n_rows)
                continue;
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t r = 0; r < n_rows; ++r) {
                if (r == rank || !(rows[r][w] & mask))
                    continue;
                const std::uint64_t* src = rows[rank].data();
                std::uint64_t* dst = rows[r].data();
                for (std::size_t k = w; k < rows[r].size(); ++k)
                    dst[k] ^= src[k];
            }
            ++rank;
        }
        rows.resize(rank);
        out.tags_.clear();
        return out;
    }

private:
    std::vector<Monomial> columns_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<RowTag> tags_;
};

/// Matrix-level entry point: RREF of the whole matrix.
inline MacaulayMatrix row_echelon_gf2(const MacaulayMatrix& m) {
    return m.reduced_row_echelon();
}

}  // namespace gf2gb
