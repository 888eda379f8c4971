#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "umc/presentations.hpp"

namespace umc {

namespace {

Polynomial xv(int i, int j) { return Polynomial::variable(Variable(i, j)); }

ModuleElement r_elem(const Polynomial& p, int i, int j, int k) {
    return ModuleElement(p, PositionIndex(i, j, k));
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::g1: return "g1";
        case Family::g2: return "g2";
        case Family::g3: return "g3";
        case Family::g4: return "g4";
        case Family::h1: return "h1";
        case Family::h2: return "h2";
        case Family::h3: return "h3";
        case Family::h4: return "h4";
        case Family::h5: return "h5";
        case Family::h6: return "h6";
        case Family::h7: return "h7";
        case Family::h8: return "h8";
        case Family::h9: return "h9";
        case Family::h0: return "h0";
        case Family::f: return "f";
    }
    return "?";
}

std::string GeneratorLabel::render() const {
    std::ostringstream os;
    os << family_name(family) << "(" << pos.i << "," << pos.j << "," << pos.k;
    if (a != 0) {
        os << ";" << a;
        if (b != 0) os << "," << b;
    }
    os << ")";
    return os.str();
}

GeneratorSet LabeledSet::plain() const {
    GeneratorSet out;
    out.n = n;
    for (const auto& it : items) out.generators.push_back(it.elem);
    return out;
}

namespace {

void sort_block(std::vector<LabeledGenerator>& block, const PositionIndex& pos) {
    std::sort(block.begin(), block.end(),
              [&pos](const LabeledGenerator& x, const LabeledGenerator& y) {
                  Monomial mx = x.elem.coefficient_at(pos).leading_monomial();
                  Monomial my = y.elem.coefficient_at(pos).leading_monomial();
                  return cmp_monomial(mx, my) < 0;
              });
}

std::vector<LabeledGenerator> block_D(int n, const PositionIndex& pos) {
    (void)n;
    const int i = pos.i, j = pos.j, k = pos.k;
    std::vector<LabeledGenerator> out;
    for (int l = 1; l < k; ++l)
        for (int p = 1; p <= l; ++p)
            out.push_back({{Family::h9, pos, l, p}, r_elem(xv(k, l) * xv(k, p), i, j, k)});
    for (int q = 1; q <= k; ++q)
        for (int p = 1; p < k; ++p)
            out.push_back({{Family::h0, pos, q, p}, r_elem(xv(j, q) * xv(k, p), i, j, k)});
    return out;
}

std::vector<LabeledGenerator> block_E(int n, const PositionIndex& pos) {
    (void)n;
    const int i = pos.i, j = pos.j, k = pos.k;
    std::vector<LabeledGenerator> out;
    for (int p = 1; p < k; ++p)
        out.push_back({{Family::f, pos, p, 0}, r_elem(xv(k, p), i, j, k)});
    return out;
}

}  // namespace

std::vector<LabeledGenerator> block_relations(int n, const PositionIndex& pos) {
    const int i = pos.i, j = pos.j, k = pos.k;
    std::vector<LabeledGenerator> out;
    for (int l1 = 1; l1 < k; ++l1)
        out.push_back({{Family::h1, pos, l1, 0},
                       r_elem(xv(i, l1) + xv(j, l1) + xv(k, l1), i, j, k)});
    out.push_back({{Family::h2, pos, 0, 0}, r_elem(xv(i, k) + xv(j, k), i, j, k)});
    for (int l2 = k + 1; l2 < j; ++l2) {
        out.push_back({{Family::g1, pos, l2, 0},
                       r_elem(-xv(j, k) - xv(l2, k), i, j, l2) + r_elem(xv(j, l2), i, j, k)});
        out.push_back({{Family::g2, pos, l2, 0},
                       r_elem(xv(j, k), i, j, l2) + r_elem(xv(i, l2), i, j, k)});
        out.push_back({{Family::h3, pos, l2, 0}, r_elem(xv(l2, k), i, j, k)});
    }
    for (int l3 = j + 1; l3 < i; ++l3) {
        out.push_back({{Family::g3, pos, l3, 0},
                       r_elem(-xv(j, k), i, l3, j) + r_elem(xv(i, l3), i, j, k)});
        out.push_back({{Family::h4, pos, l3, 0}, r_elem(xv(l3, k), i, j, k)});
        out.push_back({{Family::h5, pos, l3, 0}, r_elem(xv(l3, j), i, j, k)});
    }
    for (int l4 = i + 1; l4 <= n; ++l4) {
        out.push_back({{Family::g4, pos, l4, 0},
                       r_elem(xv(j, k), l4, i, j) + r_elem(xv(l4, i), i, j, k)});
        out.push_back({{Family::h6, pos, l4, 0}, r_elem(xv(l4, k), i, j, k)});
        out.push_back({{Family::h7, pos, l4, 0}, r_elem(xv(l4, j), i, j, k)});
    }
    for (int s = 2; s <= n; ++s) {
        if (s == i || s == j || s == k) continue;
        for (int t = 1; t < s; ++t) {
            if (t == i || t == j || t == k) continue;
            out.push_back({{Family::h8, pos, s, t}, r_elem(xv(s, t), i, j, k)});
        }
    }
    sort_block(out, pos);
    return out;
}

LabeledSet gens_B(int n) {
    LabeledSet out;
    out.n = n;
    for (const auto& pos : triples_desc(n)) {
        auto block = block_relations(n, pos);
        out.items.insert(out.items.end(), block.begin(), block.end());
    }
    return out;
}

LabeledSet gens_G(int n) {
    LabeledSet out;
    out.n = n;
    for (const auto& pos : triples_desc(n)) {
        auto block = block_relations(n, pos);
        auto extra = block_D(n, pos);
        block.insert(block.end(), extra.begin(), extra.end());
        sort_block(block, pos);
        out.items.insert(out.items.end(), block.begin(), block.end());
    }
    return out;
}

LabeledSet gens_Bprime(int n) {
    LabeledSet out;
    out.n = n;
    for (const auto& pos : triples_desc(n)) {
        auto block = block_relations(n, pos);
        auto extra = block_E(n, pos);
        block.insert(block.end(), extra.begin(), extra.end());
        sort_block(block, pos);
        out.items.insert(out.items.end(), block.begin(), block.end());
    }
    return out;
}

long m_block(int n, int k) { return static_cast<long>(n) * (n - 1) / 2 - 2L * k; }

long m_total(int n) {
    long nn = n;
    return nn * (nn * nn * nn * nn - 5 * nn * nn * nn + 7 * nn * nn - nn - 2) / 12;
}

namespace {

void accumulate(E3Column& col, const ExtElement& e, const Polynomial& p) {
    for (const auto& [m, c] : e.terms()) {
        auto it = col.find(m);
        if (it == col.end()) it = col.emplace(m, Polynomial{}).first;
        it->second += c * p;
        if (it->second.is_zero()) col.erase(it);
    }
}

}  // namespace

E3Column aomoto_d2(const ExtElement& e, int n) {
    assert(e.is_zero() || e.degree() == 2);
    E3Column col;
    for (const auto& v : variables_desc(n))
        accumulate(col, wedge(ext_u(v.upper, v.lower), e), Polynomial::variable(v));
    return col;
}

std::vector<E3Column> phi(int n) {
    std::vector<E3Column> cols;
    for (const auto& t : triples_desc(n)) {
        const int i = t.i, j = t.j, k = t.k;
        E3Column col;
        accumulate(col, wedge(ext_u(j, k), ext_u(i, k), ext_u(i, j)),
                   -(xv(i, k) + xv(j, k)));
        for (const auto& v : variables_desc(n)) {
            const int s = v.upper, tt = v.lower;
            bool s_in = (s == i || s == j || s == k);
            bool t_in = (tt == i || tt == j || tt == k);
            if (s_in && t_in) continue;
            accumulate(col, wedge(ext_u(s, tt), ext_u(j, k) - ext_u(i, k), ext_u(i, j)),
                       Polynomial::variable(v));
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

GeneratorSet phi_star(int n) {
    auto cols = phi(n);
    auto triples = triples_desc(n);
    std::map<ExtMonomial, ModuleElement, ExtMonoGreater> rows;
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [m, p] : cols[c])
            rows[m] += ModuleElement(p, triples[c]);
    GeneratorSet out;
    out.n = n;
    for (auto& [m, e] : rows)
        if (!e.is_zero()) out.generators.push_back(std::move(e));
    return out;
}

bool phi_star_equivalence(int n, const BuchbergerOptions& opts) {
    return submodule_equal(phi_star(n), gens_B(n).plain(), opts);
}

void certify_D_in_B(int n) {
    for (const auto& pos : triples_desc(n)) {
        const int i = pos.i, j = pos.j, k = pos.k;
        for (const auto& item : block_D(n, pos)) {
            const auto& lab = item.label;
            ModuleElement combo;
            if (lab.family == Family::h9) {
                const int l = lab.a, p = lab.b;
                ModuleElement f1 =
                    r_elem(-xv(j, l) - xv(k, l), i, j, k) + r_elem(xv(j, k), i, j, l);
                ModuleElement f2 = r_elem(xv(j, l), i, j, k) + r_elem(xv(i, k), i, j, l);
                ModuleElement f4 = r_elem(xv(k, p), i, j, l);
                combo = (xv(i, k) + xv(j, k)) * f4 - xv(k, p) * (f1 + f2);
            } else {
                const int q = lab.a, p = lab.b;
                ModuleElement f3 = r_elem(-xv(k, p), i, j, k) + r_elem(xv(i, j), i, k, p);
                ModuleElement f5 = r_elem(xv(j, q), i, k, p);
                combo = xv(i, j) * f5 - xv(j, q) * f3;
            }
            if (!(combo == item.elem))
                throw std::logic_error("membership identity failed for " + lab.render());
        }
    }
}

std::vector<std::vector<Polynomial>> presentation_rows(const std::vector<LabeledGenerator>& rows,
                                                       int n) {
    auto triples = triples_desc(n);
    std::vector<std::vector<Polynomial>> out;
    for (const auto& item : rows) {
        std::vector<Polynomial> row;
        for (const auto& t : triples) row.push_back(item.elem.coefficient_at(t));
        out.push_back(std::move(row));
    }
    return out;
}

bool block_triangular(const std::vector<LabeledGenerator>& rows) {
    for (const auto& item : rows)
        for (const auto& [t, c] : item.elem.terms())
            if (cmp_position(item.label.pos, t.pos) < 0) return false;
    return true;
}

std::vector<Polynomial> diagonal_vector(const std::vector<LabeledGenerator>& rows,
                                        const PositionIndex& pos) {
    std::vector<Polynomial> out;
    for (const auto& item : rows)
        if (item.label.pos == pos) out.push_back(item.elem.coefficient_at(pos));
    return out;
}

KnReport kn_checks(int n, const std::vector<ModuleElement>& G, int maxPower) {
    KnReport rep;
    auto reduces_to_zero = [&G](const ModuleElement& e) {
        return normal_form(e, G).remainder.is_zero();
    };
    for (int i = 4; i <= n; ++i) {
        for (int j = 3; j < i; ++j) {
            for (int k = 2; k < j; ++k) {
                for (int l = 1; l < k; ++l) {
                    ModuleElement base = r_elem(xv(k, l), i, j, k);
                    for (int s = 2; s <= n; ++s) {
                        for (int t = 1; t < s; ++t) {
                            if (s == i && t == j) continue;
                            ++rep.checks_run;
                            if (!reduces_to_zero(xv(s, t) * base)) {
                                rep.pass = false;
                                rep.failures.push_back(
                                    {"membership", to_string(xv(s, t) * base)});
                            }
                        }
                    }
                    ++rep.checks_run;
                    if (reduces_to_zero(base)) {
                        rep.pass = false;
                        rep.failures.push_back({"nonzero", to_string(base)});
                    }
                    ModuleElement power = base;
                    for (int p = 1; p <= maxPower; ++p) {
                        power = xv(i, j) * power;
                        ++rep.checks_run;
                        if (reduces_to_zero(power)) {
                            rep.pass = false;
                            rep.failures.push_back({"free-action", to_string(power)});
                        }
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace umc
