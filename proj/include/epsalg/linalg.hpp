#pragma once

#include <optional>
#include <vector>

#include "epsalg/cyclotomic.hpp"

namespace epsalg {

using Vec = std::vector<CycNum>;

inline bool vec_is_zero(const Vec& v) {
    for (const CycNum& c : v)
        if (!c.is_zero()) return false;
    return true;
}

inline Vec vec_zero(size_t n) { return Vec(n, CycNum(0)); }

inline Vec& vec_add_scaled(Vec& dst, const CycNum& s, const Vec& src) {
    if (!s.is_zero())
        for (size_t k = 0; k < dst.size(); ++k)
            if (!src[k].is_zero()) dst[k] = dst[k] + s * src[k];
    return dst;
}

/// Incremental exact row reduction over Q(zeta_N). Rows are kept fully
/// reduced (RREF), so rank, membership and nullspace come out directly.
/// There are no pivot tolerances anywhere; a pivot is any exactly nonzero
/// entry.
class RowEchelon {
public:
    explicit RowEchelon(size_t cols) : m_cols(cols) {}

    size_t cols() const { return m_cols; }
    size_t rank() const { return m_rows.size(); }

    /// Reduce a row against the current pivots and absorb the remainder.
    /// Returns true when the row increased the rank.
    bool add_row(Vec row) {
        reduce(row);
        size_t lead = leading(row);
        if (lead == m_cols) return false;
        CycNum inv = row[lead].inverse();
        for (size_t k = lead; k < m_cols; ++k)
            if (!row[k].is_zero()) row[k] = row[k] * inv;
        // keep existing rows reduced against the new pivot
        for (size_t r = 0; r < m_rows.size(); ++r) {
            const CycNum& c = m_rows[r][lead];
            if (!c.is_zero()) vec_add_scaled(m_rows[r], -c, row);
        }
        size_t at = 0;
        while (at < m_pivots.size() && m_pivots[at] < lead) ++at;
        m_rows.insert(m_rows.begin() + static_cast<long>(at), std::move(row));
        m_pivots.insert(m_pivots.begin() + static_cast<long>(at), lead);
        return true;
    }

    /// Whether the row lies in the accumulated row space.
    bool contains(Vec row) const {
        reduce(row);
        return leading(row) == m_cols;
    }

    /// Coordinates of the row in terms of the current pivot rows, if the row
    /// lies in their span.
    std::optional<Vec> coordinates(Vec row) const {
        Vec coeff(m_rows.size(), CycNum(0));
        for (size_t r = 0; r < m_rows.size(); ++r) {
            const CycNum& c = row[m_pivots[r]];
            if (c.is_zero()) continue;
            coeff[r] = c;
            vec_add_scaled(row, -c, m_rows[r]);
        }
        if (leading(row) != m_cols) return std::nullopt;
        return coeff;
    }

    const std::vector<Vec>& rows() const { return m_rows; }
    const std::vector<size_t>& pivots() const { return m_pivots; }

    /// Basis of {x : R x = 0}, one vector per free column, in column order.
    std::vector<Vec> nullspace() const {
        std::vector<bool> is_pivot(m_cols, false);
        for (size_t p : m_pivots) is_pivot[p] = true;
        std::vector<Vec> basis;
        for (size_t f = 0; f < m_cols; ++f) {
            if (is_pivot[f]) continue;
            Vec x = vec_zero(m_cols);
            x[f] = CycNum(1);
            for (size_t r = 0; r < m_rows.size(); ++r) x[m_pivots[r]] = -m_rows[r][f];
            basis.push_back(std::move(x));
        }
        return basis;
    }

private:
    size_t m_cols;
    std::vector<Vec> m_rows;       // RREF rows, pivot columns strictly increasing
    std::vector<size_t> m_pivots;  // pivot column per row

    size_t leading(const Vec& v) const {
        for (size_t k = 0; k < m_cols; ++k)
            if (!v[k].is_zero()) return k;
        return m_cols;
    }

    void reduce(Vec& row) const {
        for (size_t r = 0; r < m_rows.size(); ++r) {
            const CycNum& c = row[m_pivots[r]];
            if (!c.is_zero()) vec_add_scaled(row, -c, m_rows[r]);
        }
    }
};

/// Nullspace of a stack of equation rows.
inline std::vector<Vec> nullspace(const std::vector<Vec>& rows, size_t cols) {
    RowEchelon re(cols);
    for (const Vec& r : rows) re.add_row(r);
    return re.nullspace();
}

inline size_t rank(const std::vector<Vec>& rows, size_t cols) {
    RowEchelon re(cols);
    for (const Vec& r : rows) re.add_row(r);
    return re.rank();
}

/// One solution of the (possibly underdetermined) system rows * x = rhs,
/// with free variables pinned to zero; nullopt when inconsistent.
inline std::optional<Vec> solve(const std::vector<Vec>& rows, const Vec& rhs, size_t cols) {
    RowEchelon re(cols + 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        Vec aug = rows[i];
        aug.push_back(rhs[i]);
        re.add_row(std::move(aug));
    }
    Vec x = vec_zero(cols);
    for (size_t r = 0; r < re.rank(); ++r) {
        size_t p = re.pivots()[r];
        if (p == cols) return std::nullopt;  // pivot in the constant column
        x[p] = re.rows()[r][cols];
    }
    return x;
}

}  // namespace epsalg
