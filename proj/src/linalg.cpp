#include "umc/linalg.hpp"

namespace umc {

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t nrows = m.row_count(), ncols = m.col_count();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t sel = r;
        while (sel < nrows && m.rows[sel][c] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(m.rows[sel], m.rows[r]);
        Rat inv = Rat(1) / m.rows[r][c];
        for (auto& x : m.rows[r]) x *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || m.rows[i][c] == 0) continue;
            Rat f = m.rows[i][c];
            for (std::size_t j = 0; j < ncols; ++j) m.rows[i][j] -= f * m.rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

RatMatrix kernel(const RatMatrix& m) {
    RatMatrix w = m;
    std::size_t ncols = m.col_count();
    auto pivots = rref(w);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    RatMatrix out;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(ncols, Rat(0));
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.rows[r][c];
        out.rows.push_back(std::move(v));
    }
    return out;
}

bool in_row_span(const RatMatrix& m, const std::vector<Rat>& v) {
    RatMatrix w = m;
    auto pivots = rref(w);
    std::vector<Rat> res = v;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Rat f = res[pivots[r]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < res.size(); ++j) res[j] -= f * w.rows[r][j];
    }
    for (const auto& x : res)
        if (x != 0) return false;
    return true;
}

bool row_span_contains(const RatMatrix& m, const RatMatrix& sub) {
    for (const auto& row : sub.rows)
        if (!in_row_span(m, row)) return false;
    return true;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out = a;
    for (const auto& row : b.rows) out.rows.push_back(row);
    return out;
}

}  // namespace umc
