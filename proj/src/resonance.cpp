#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "umc/resonance.hpp"
#include "umc/series.hpp"

namespace umc {

bool LinearSubspace::valid() const {
    if (static_cast<int>(rank(basis) + rank(equations)) != ambient) return false;
    for (const auto& eq : equations.rows)
        for (const auto& vec : basis.rows) {
            Rat dot = 0;
            for (std::size_t c = 0; c < eq.size(); ++c) dot += eq[c] * vec[c];
            if (dot != 0) return false;
        }
    return true;
}

std::string Component::name() const {
    std::ostringstream os;
    switch (kind) {
        case ComponentKind::Isolated: os << "L"; break;
        case ComponentKind::Embedded: os << "L'"; break;
        case ComponentKind::McCoolPlane:
        case ComponentKind::McCoolThreeSpace: os << "C"; break;
    }
    os << "(";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) os << ",";
        os << indices[i];
    }
    os << ")";
    return os.str();
}

void CheckReport::fail(std::string what) {
    pass = false;
    failures.push_back(std::move(what));
}

namespace {

std::vector<Rat> unit_vec(std::size_t len, std::size_t at) {
    std::vector<Rat> v(len, Rat(0));
    v[at] = 1;
    return v;
}

std::size_t coord(const Variable& v, int n) {
    return static_cast<std::size_t>(var_index_desc(v, n));
}

}  // namespace

LinearSubspace make_L(int n, int i, int j) {
    const std::size_t dim = static_cast<std::size_t>(n) * (n - 1) / 2;
    LinearSubspace L;
    L.ambient = static_cast<int>(dim);
    for (int l = 1; l < j; ++l) {
        std::vector<Rat> row(dim, Rat(0));
        row[coord(Variable(i, l), n)] = 1;
        row[coord(Variable(j, l), n)] = 1;
        L.equations.rows.push_back(std::move(row));
    }
    for (int l = j + 1; l < i; ++l)
        L.equations.rows.push_back(unit_vec(dim, coord(Variable(i, l), n)));
    for (int s = 2; s <= n; ++s) {
        if (s == i || s == j) continue;
        for (int t = 1; t < s; ++t)
            L.equations.rows.push_back(unit_vec(dim, coord(Variable(s, t), n)));
    }
    for (int l = 1; l < j; ++l) {
        std::vector<Rat> row(dim, Rat(0));
        row[coord(Variable(j, l), n)] = 1;
        row[coord(Variable(i, l), n)] = -1;
        L.basis.rows.push_back(std::move(row));
    }
    L.basis.rows.push_back(unit_vec(dim, coord(Variable(i, j), n)));
    assert(L.valid());
    return L;
}

LinearSubspace make_Lprime(int n, int i, int j) {
    const std::size_t dim = static_cast<std::size_t>(n) * (n - 1) / 2;
    LinearSubspace L;
    L.ambient = static_cast<int>(dim);
    for (const auto& v : variables_desc(n)) {
        if (v.upper == i && v.lower == j) continue;
        L.equations.rows.push_back(unit_vec(dim, coord(v, n)));
    }
    L.basis.rows.push_back(unit_vec(dim, coord(Variable(i, j), n)));
    assert(L.valid());
    return L;
}

std::vector<Component> components(int n) {
    std::vector<Component> out;
    for (int i = 3; i <= n; ++i)
        for (int j = 2; j < i; ++j) {
            Component c;
            c.kind = ComponentKind::Isolated;
            c.indices = {i, j};
            c.space = make_L(n, i, j);
            c.isotropy = binomial(j - 1, 2).get_si();
            out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
        return a.indices < b.indices;
    });
    return out;
}

namespace {

bool satisfies(const RatMatrix& equations, const std::vector<Rat>& v) {
    for (const auto& eq : equations.rows) {
        Rat dot = 0;
        for (std::size_t c = 0; c < eq.size(); ++c) dot += eq[c] * v[c];
        if (dot != 0) return false;
    }
    return true;
}

}  // namespace

CheckReport verify_components(int n, unsigned seed) {
    CheckReport rep;
    rep.seed = seed;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    const auto comps = components(n);
    const auto R = UpperMcCoolRing::build(n);
    const std::size_t dim = R.e1.size();

    for (const auto& comp : comps) {
        const int i = comp.indices[0], j = comp.indices[1];
        std::vector<std::vector<Rat>> points = comp.space.basis.rows;
        for (int s = 0; s < 5; ++s) {
            std::vector<Rat> pt(dim, Rat(0));
            bool nonzero = false;
            while (!nonzero) {
                std::fill(pt.begin(), pt.end(), Rat(0));
                for (const auto& b : comp.space.basis.rows) {
                    int c = coeff(rng);
                    if (c == 0) continue;
                    for (std::size_t x = 0; x < dim; ++x) pt[x] += c * b[x];
                }
                for (const auto& x : pt) nonzero = nonzero || x != 0;
            }
            points.push_back(std::move(pt));
        }
        std::vector<Rat> uij = unit_vec(dim, coord(Variable(i, j), n));
        for (const auto& pt : points) {
            ++rep.checks_run;
            RatMatrix K = cup_kernel(from_e1_coords(pt, R), R);
            if (K.row_count() < 2) rep.fail(comp.name() + ": kernel dim < 2");
            if (!in_row_span(K, uij)) rep.fail(comp.name() + ": kernel misses u_ij");
            if (!in_row_span(K, pt)) rep.fail(comp.name() + ": kernel misses the point");
            if (j == 2 && !row_span_contains(K, comp.space.basis))
                rep.fail(comp.name() + ": 0-isotropic kernel misses the component");
        }
    }

    for (std::size_t a = 0; a < comps.size(); ++a)
        for (std::size_t b = a + 1; b < comps.size(); ++b) {
            ++rep.checks_run;
            if (static_cast<int>(rank(vstack(comps[a].space.equations,
                                             comps[b].space.equations))) !=
                comps[a].space.ambient)
                rep.fail(comps[a].name() + " meets " + comps[b].name());
        }

    for (const auto& comp : comps) {
        ++rep.checks_run;
        long expected = binomial(comp.indices[1] - 1, 2).get_si();
        if (static_cast<long>(cup_rank(comp.space.basis, R)) != expected)
            rep.fail(comp.name() + ": isotropy rank mismatch");
    }

    // Restriction from n to n+1. The descending coordinate listing for n+1
    // starts with the n new variables x_{n+1,*}, so old vectors embed with a
    // zero prefix.
    const std::size_t bigdim = static_cast<std::size_t>(n + 1) * n / 2;
    const std::size_t offset = bigdim - dim;
    for (const auto& comp : comps) {
        const int i = comp.indices[0], j = comp.indices[1];
        LinearSubspace V = make_L(n + 1, i, j);
        for (const auto& b : comp.space.basis.rows) {
            ++rep.checks_run;
            std::vector<Rat> big(bigdim, Rat(0));
            for (std::size_t c = 0; c < dim; ++c) big[offset + c] = b[c];
            if (!satisfies(V.equations, big))
                rep.fail(comp.name() + ": does not embed at n+1");
        }
    }
    for (int j = 2; j <= n; ++j) {
        ++rep.checks_run;
        LinearSubspace V = make_L(n + 1, n + 1, j);
        RatMatrix cut = V.equations;
        for (std::size_t c = 0; c < offset; ++c) cut.rows.push_back(unit_vec(bigdim, c));
        if (rank(cut) != bigdim)
            rep.fail("V(" + std::to_string(n + 1) + "," + std::to_string(j) +
                     ") meets the smaller coordinate subspace");
    }
    return rep;
}

CheckReport upper_bound_check(int n) {
    CheckReport rep;
    const std::size_t dim = static_cast<std::size_t>(n) * (n - 1) / 2;
    const auto G = gens_G(n);
    std::map<std::tuple<int, int, int>, std::vector<Polynomial>> diag;
    for (const auto& item : G.items)
        diag[{item.label.pos.i, item.label.pos.j, item.label.pos.k}].push_back(
            item.elem.coefficient_at(item.label.pos));

    for (const auto& [key, entries] : diag) {
        auto [i, j, k] = key;
        ++rep.checks_run;
        std::ostringstream name;
        name << "w(" << i << "," << j << "," << k << ")";

        std::vector<Polynomial> linear, quadratic;
        for (const auto& p : entries)
            (p.degree() == 1 ? linear : quadratic).push_back(p);

        // Squares among the quadratic entries force their variable to zero.
        std::vector<Variable> forced;
        for (const auto& p : quadratic)
            for (const auto& [m, c] : p.terms())
                if (m.exponents().size() == 1 && m.degree() == 2)
                    forced.push_back(m.exponents()[0].first);
        // Every quadratic must vanish identically on the forced locus.
        for (const auto& p : quadratic)
            for (const auto& [m, c] : p.terms()) {
                bool killed = false;
                for (const auto& v : forced)
                    if (m.exponent(v) > 0) killed = true;
                if (!killed) rep.fail(name.str() + ": quadratic survives the forced locus");
            }

        RatMatrix eqs;
        for (const auto& p : linear) {
            std::vector<Rat> row(dim, Rat(0));
            for (const auto& [m, c] : p.terms()) row[coord(m.exponents()[0].first, n)] = c;
            eqs.rows.push_back(std::move(row));
        }
        for (const auto& v : forced) eqs.rows.push_back(unit_vec(dim, coord(v, n)));

        RatMatrix sol = kernel(eqs);
        if (static_cast<int>(sol.row_count()) != k + 1)
            rep.fail(name.str() + ": solution dimension != k+1");
        LinearSubspace L = make_L(n, i, j);
        for (const auto& v : sol.rows)
            if (!satisfies(L.equations, v))
                rep.fail(name.str() + ": solution escapes L(i,j)");
        if (k == j - 1 && static_cast<int>(sol.row_count()) != L.dim())
            rep.fail(name.str() + ": expected equality with L(i,j)");
    }
    return rep;
}

SchemeReport scheme(int n, const BuchbergerOptions& opts) {
    (void)opts;
    SchemeReport rep;
    rep.isolated = components(n);
    for (int i = 4; i <= n; ++i)
        for (int j = 3; j < i; ++j) {
            Component c;
            c.kind = ComponentKind::Embedded;
            c.indices = {i, j};
            c.space = make_Lprime(n, i, j);
            c.isotropy = 0;
            rep.embedded.push_back(std::move(c));
        }
    std::sort(rep.embedded.begin(), rep.embedded.end(),
              [](const Component& a, const Component& b) { return a.indices < b.indices; });

    rep.kn = kn_checks(n, gens_G(n).plain().generators);

    // Perpendicularity: {a in L_ij : a cup b = 0 for all b in L_ij} is the
    // line spanned by u_ij.
    const auto R = UpperMcCoolRing::build(n);
    const std::size_t dim = R.e1.size();
    for (const auto& emb : rep.embedded) {
        const int i = emb.indices[0], j = emb.indices[1];
        LinearSubspace L = make_L(n, i, j);
        std::vector<ExtElement> basis;
        for (const auto& row : L.basis.rows) basis.push_back(from_e1_coords(row, R));
        // Unknown: coefficients c of a = sum c_l basis_l.
        RatMatrix M;
        for (const auto& b : basis) {
            std::vector<std::vector<Rat>> cols;
            for (const auto& a : basis) cols.push_back(cup(a, b, R));
            for (std::size_t r = 0; r < cols[0].size(); ++r) {
                std::vector<Rat> row(basis.size(), Rat(0));
                for (std::size_t c = 0; c < cols.size(); ++c) row[c] = cols[c][r];
                M.rows.push_back(std::move(row));
            }
        }
        RatMatrix ker = kernel(M);
        bool ok = ker.row_count() == 1;
        if (ok) {
            std::vector<Rat> ambient(dim, Rat(0));
            for (std::size_t l = 0; l < basis.size(); ++l)
                for (std::size_t c = 0; c < dim; ++c)
                    ambient[c] += ker.rows[0][l] * L.basis.rows[l][c];
            RatMatrix line;
            line.rows.push_back(unit_vec(dim, coord(Variable(i, j), n)));
            ok = in_row_span(line, ambient);
        }
        if (!ok) rep.perpendicular_ok = false;
    }
    return rep;
}

CheckReport ann_membership_example87(const BuchbergerOptions& opts) {
    CheckReport rep;
    const int n = 4;
    auto xv = [](int i, int j) { return Polynomial::variable(Variable(i, j)); };
    std::vector<Polynomial> J = {
        xv(4, 1) + xv(3, 1) + xv(2, 1),
        xv(3, 1) * xv(2, 1),
        xv(3, 2) * xv(2, 1),
        xv(4, 2) * xv(2, 1),
        xv(4, 2) * xv(3, 1) + xv(3, 2) * xv(3, 1),
        xv(4, 2) * xv(3, 2),
        xv(2, 1) * xv(2, 1),
        xv(3, 1) * xv(3, 1),
        xv(3, 2) * xv(3, 2),
        xv(4, 2) * xv(4, 2),
    };
    const auto G4 = gens_G(n).plain().generators;
    // The embedded component lives on the submodule generated by the image of
    // x[2,1] r[4,3,2]; its annihilator contains every listed generator.
    const ModuleElement kgen(Polynomial::variable(Variable(2, 1)), PositionIndex(4, 3, 2));
    for (const auto& g : J) {
        ++rep.checks_run;
        if (!normal_form(g * kgen, G4).remainder.is_zero())
            rep.fail("annihilator: " + to_string(g) + " misses the kernel generator");
    }

    // Radical certificate. Work with J as a rank-1 module on a fixed carrier.
    const PositionIndex carrier(3, 2, 1);
    GeneratorSet Jset;
    Jset.n = n;
    for (const auto& g : J) Jset.generators.emplace_back(g, carrier);
    GroebnerBasis Jgb = buchberger(Jset, opts);
    for (const Variable v : {Variable(2, 1), Variable(3, 1), Variable(3, 2), Variable(4, 1),
                             Variable(4, 2)}) {
        ++rep.checks_run;
        Polynomial sq = Polynomial::variable(v) * Polynomial::variable(v);
        if (!contains(ModuleElement(sq, carrier), Jgb))
            rep.fail("radical: " + to_string(v) + "^2 not in the ideal");
    }
    for (const auto& g : J)
        for (const auto& [m, c] : g.terms()) {
            ++rep.checks_run;
            bool inside = false;
            for (const auto& [v, e] : m.exponents())
                if (!(v == Variable(4, 3))) inside = true;
            if (!inside)
                rep.fail("radical: generator term " + to_string(m) +
                         " outside the linear ideal");
        }
    ++rep.checks_run;
    if (normal_form(ModuleElement(Polynomial::variable(Variable(4, 3)), PositionIndex(4, 3, 2)),
                    G4)
            .remainder.is_zero())
        rep.fail("free direction x[4,3] collapsed");
    return rep;
}

CheckReport depth_lower_bound(int n, int d) {
    CheckReport rep;
    const auto R = UpperMcCoolRing::build(n);
    for (int i = 4; i <= n; ++i)
        for (int j = d + 1; j < i; ++j) {
            ++rep.checks_run;
            RatMatrix K = cup_kernel(ext_u(i, j), R);
            if (static_cast<int>(K.row_count()) < d + 1)
                rep.fail("L'(" + std::to_string(i) + "," + std::to_string(j) +
                         "): kernel dim < d+1");
        }
    return rep;
}

namespace {

std::size_t mccool_coord(int s, int t, int n) {
    // Ordered pairs (s,t), s != t, ascending: (1,2),(1,3),...,(n,n-1).
    std::size_t idx = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            if (a == s && b == t) return idx;
            ++idx;
        }
    assert(false);
    return idx;
}

}  // namespace

std::vector<Component> mccool_inventory(int n) {
    const std::size_t dim = static_cast<std::size_t>(n) * (n - 1);
    std::vector<Component> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Component c;
            c.kind = ComponentKind::McCoolPlane;
            c.indices = {i, j};
            c.space.ambient = static_cast<int>(dim);
            c.space.basis.rows.push_back(unit_vec(dim, mccool_coord(i, j, n)));
            c.space.basis.rows.push_back(unit_vec(dim, mccool_coord(j, i, n)));
            for (int s = 1; s <= n; ++s)
                for (int t = 1; t <= n; ++t) {
                    if (s == t) continue;
                    if ((s == i && t == j) || (s == j && t == i)) continue;
                    c.space.equations.rows.push_back(unit_vec(dim, mccool_coord(s, t, n)));
                }
            c.isotropy = 0;
            assert(c.space.valid());
            out.push_back(std::move(c));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                Component c;
                c.kind = ComponentKind::McCoolThreeSpace;
                c.indices = {i, j, k};
                c.space.ambient = static_cast<int>(dim);
                auto pair_eq = [&](int a1, int b1, int a2, int b2) {
                    std::vector<Rat> row(dim, Rat(0));
                    row[mccool_coord(a1, b1, n)] = 1;
                    row[mccool_coord(a2, b2, n)] = 1;
                    c.space.equations.rows.push_back(std::move(row));
                };
                pair_eq(i, j, k, j);
                pair_eq(j, i, k, i);
                pair_eq(i, k, j, k);
                for (int s = 1; s <= n; ++s)
                    for (int t = 1; t <= n; ++t) {
                        if (s == t) continue;
                        bool s_in = (s == i || s == j || s == k);
                        bool t_in = (t == i || t == j || t == k);
                        if (s_in && t_in) continue;
                        c.space.equations.rows.push_back(
                            unit_vec(dim, mccool_coord(s, t, n)));
                    }
                auto diff = [&](int a1, int b1, int a2, int b2) {
                    std::vector<Rat> row(dim, Rat(0));
                    row[mccool_coord(a1, b1, n)] = 1;
                    row[mccool_coord(a2, b2, n)] = -1;
                    c.space.basis.rows.push_back(std::move(row));
                };
                diff(i, j, k, j);
                diff(j, i, k, i);
                diff(i, k, j, k);
                c.isotropy = 0;
                assert(c.space.valid());
                out.push_back(std::move(c));
            }
    return out;
}

ComparisonReport compare_groups(int n) {
    ComparisonReport rep;
    rep.n = n;
    rep.max_dim_upper = n >= 3 ? n - 1 : 0;
    rep.max_dim_full = n >= 3 ? 3 : 2;
    rep.planes = binomial(n, 2).get_si();
    rep.threespaces = binomial(n, 3).get_si();
    rep.upper_has_nonisotropic = n >= 4;
    rep.epi_obstruction = n >= 4;
    return rep;
}

}  // namespace umc
