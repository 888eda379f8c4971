#include <algorithm>
#include <stdexcept>

#include "umc/cohomology.hpp"

namespace umc {

std::vector<PositionIndex> triples_desc(int n) {
    std::vector<PositionIndex> out;
    for (int i = n; i >= 3; --i)
        for (int j = i - 1; j >= 2; --j)
            for (int k = j - 1; k >= 1; --k) out.emplace_back(i, j, k);
    return out;
}

std::size_t UpperMcCoolRing::e2_index(const ExtMonomial& m) const {
    auto it = std::lower_bound(e2.begin(), e2.end(), m, ExtMonoGreater{});
    assert(it != e2.end() && *it == m);
    return static_cast<std::size_t>(it - e2.begin());
}

UpperMcCoolRing UpperMcCoolRing::build(int n) {
    UpperMcCoolRing R;
    R.n = n;
    for (int i = n; i >= 2; --i)
        for (int j = i - 1; j >= 1; --j) R.e1.emplace_back(i, j);

    auto push_mono = [](std::vector<ExtMonomial>& dst, std::vector<ExtGen> gens) {
        auto norm = ExtMonomial::normalize(std::move(gens));
        dst.push_back(norm->first);
    };
    for (std::size_t a = 0; a < R.e1.size(); ++a)
        for (std::size_t b = a + 1; b < R.e1.size(); ++b)
            push_mono(R.e2, {R.e1[a], R.e1[b]});
    for (std::size_t a = 0; a < R.e1.size(); ++a)
        for (std::size_t b = a + 1; b < R.e1.size(); ++b)
            for (std::size_t c = b + 1; c < R.e1.size(); ++c)
                push_mono(R.e3, {R.e1[a], R.e1[b], R.e1[c]});
    // The nested loops over the descending e1 list already emit descending
    // monomial sequences.

    R.triples = triples_desc(n);
    RatMatrix rel;
    for (const auto& t : R.triples) {
        ExtElement r = wedge(ext_u(t.j, t.k) - ext_u(t.i, t.k), ext_u(t.i, t.j));
        R.relations.push_back(r);
        rel.rows.push_back(e2_coords(r, R));
    }
    if (!rel.rows.empty()) {
        R.pivot_cols = rref(rel);
        R.relation_rref = std::move(rel);
    }
    if (R.pivot_cols.size() != R.relations.size())
        throw std::logic_error("relation elements are not linearly independent");
    std::vector<bool> is_pivot(R.e2.size(), false);
    for (auto c : R.pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < R.e2.size(); ++c)
        if (!is_pivot[c]) R.complement_cols.push_back(c);
    return R;
}

std::vector<Rat> e1_coords(const ExtElement& a, const UpperMcCoolRing& R) {
    assert(a.is_zero() || a.degree() == 1);
    std::vector<Rat> v(R.e1.size(), Rat(0));
    for (const auto& [m, c] : a.terms()) {
        auto it = std::lower_bound(R.e1.begin(), R.e1.end(), m.generators()[0],
                                   [](const ExtGen& x, const ExtGen& y) {
                                       return ext_gen_greater(x, y);
                                   });
        assert(it != R.e1.end() && *it == m.generators()[0]);
        v[static_cast<std::size_t>(it - R.e1.begin())] = c;
    }
    return v;
}

std::vector<Rat> e2_coords(const ExtElement& a, const UpperMcCoolRing& R) {
    assert(a.is_zero() || a.degree() == 2);
    std::vector<Rat> v(R.e2.size(), Rat(0));
    for (const auto& [m, c] : a.terms()) v[R.e2_index(m)] = c;
    return v;
}

ExtElement from_e1_coords(const std::vector<Rat>& v, const UpperMcCoolRing& R) {
    assert(v.size() == R.e1.size());
    ExtElement a(1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        auto [m, sign] = *ExtMonomial::normalize({R.e1[i]});
        a.add_term(m, sign * v[i]);
    }
    return a;
}

std::vector<Rat> cup(const ExtElement& a, const ExtElement& b, const UpperMcCoolRing& R) {
    std::vector<Rat> v = e2_coords(wedge(a, b), R);
    // Reduce modulo I^2 using the row-reduced relation matrix.
    for (std::size_t r = 0; r < R.pivot_cols.size(); ++r) {
        Rat f = v[R.pivot_cols[r]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * R.relation_rref.rows[r][c];
    }
    std::vector<Rat> out;
    out.reserve(R.complement_cols.size());
    for (auto c : R.complement_cols) out.push_back(v[c]);
    return out;
}

std::size_t cup_rank(const RatMatrix& W, const UpperMcCoolRing& R) {
    std::vector<ExtElement> basis;
    for (const auto& row : W.rows) basis.push_back(from_e1_coords(row, R));
    RatMatrix image;
    for (std::size_t p = 0; p < basis.size(); ++p)
        for (std::size_t q = p + 1; q < basis.size(); ++q)
            image.rows.push_back(cup(basis[p], basis[q], R));
    return image.rows.empty() ? 0 : rank(image);
}

RatMatrix cup_kernel(const ExtElement& a, const UpperMcCoolRing& R) {
    if (a.is_zero()) throw std::invalid_argument("cup_kernel: zero input");
    // Columns of the constraint matrix are the cup products with each basis
    // generator of E^1; rows are A^2 coordinates.
    std::vector<std::vector<Rat>> cols;
    for (const auto& g : R.e1) cols.push_back(cup(a, ExtElement::generator(g), R));
    RatMatrix M;
    M.rows.assign(R.complement_cols.size(), std::vector<Rat>(R.e1.size(), Rat(0)));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c].size(); ++r) M.rows[r][c] = cols[c][r];
    return kernel(M);
}

}  // namespace umc
