#include <algorithm>
#include <sstream>

#include "umc/groebner.hpp"

namespace umc {

GeneratorSet GeneratorSet::normalized() const {
    GeneratorSet out;
    out.n = n;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (std::find(out.generators.begin(), out.generators.end(), g) == out.generators.end())
            out.generators.push_back(g);
    }
    return out;
}

DivisionResult normal_form(const ModuleElement& f, const std::vector<ModuleElement>& divisors) {
    DivisionResult res;
    res.quotients.assign(divisors.size(), Polynomial{});
    ModuleElement work = f;
    while (!work.is_zero()) {
        const ModTerm& lt = work.leading_term();
        const Rat& lc = work.leading_coefficient();
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const ModuleElement& g = divisors[i];
            if (g.is_zero()) continue;
            const ModTerm& gt = g.leading_term();
            if (gt.pos != lt.pos || !gt.mono.divides(lt.mono)) continue;
            Monomial q = *gt.mono.divide_into(lt.mono);
            Rat c = lc / g.leading_coefficient();
            res.quotients[i].add_term(q, c);
            work -= g.scaled(c, q);
            divided = true;
            break;
        }
        if (!divided) {
            res.remainder.add_term(lt.pos, lt.mono, lc);
            // Drop the leading term and keep dividing the tail.
            ModuleElement head(lc, lt.mono, lt.pos);
            work -= head;
        }
    }
#ifndef NDEBUG
    {
        ModuleElement check = res.remainder;
        for (std::size_t i = 0; i < divisors.size(); ++i) check += res.quotients[i] * divisors[i];
        assert(check == f);
    }
#endif
    return res;
}

std::optional<ModuleElement> s_pair(const ModuleElement& g, const ModuleElement& h) {
    assert(!g.is_zero() && !h.is_zero());
    const ModTerm& tg = g.leading_term();
    const ModTerm& th = h.leading_term();
    if (tg.pos != th.pos) return std::nullopt;
    Monomial l = lcm(tg.mono, th.mono);
    ModuleElement s = g.scaled(Rat(1) / g.leading_coefficient(), *tg.mono.divide_into(l)) -
                      h.scaled(Rat(1) / h.leading_coefficient(), *th.mono.divide_into(l));
    return s;
}

namespace {

bool single_position(const ModuleElement& e) {
    const PositionIndex p = e.leading_term().pos;
    for (const auto& [t, c] : e.terms())
        if (!(t.pos == p)) return false;
    return true;
}

struct Pair {
    ModTerm lcm_term;
    std::size_t a, b;
};

ModuleElement monic(const ModuleElement& e) {
    return (Rat(1) / e.leading_coefficient()) * e;
}

/// Minimalize leading terms and fully tail-reduce; yields the unique reduced
/// basis of the submodule the input (already a Groebner basis) generates.
std::vector<ModuleElement> interreduce(std::vector<ModuleElement> basis) {
    // Remove elements whose leading term is divisible by another's.
    std::vector<ModuleElement> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const ModTerm& ti = basis[i].leading_term();
            const ModTerm& tj = basis[j].leading_term();
            if (tj.pos == ti.pos && tj.mono.divides(ti.mono)) {
                // On equal leading monomials keep the earlier element.
                if (!(tj.mono == ti.mono) || j < i) {
                    redundant = true;
                    break;
                }
            }
        }
        if (!redundant) minimal.push_back(monic(basis[i]));
    }
    // Tail-reduce each element against all the others until stable.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ModuleElement> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = monic(normal_form(minimal[i], others).remainder);
    }
    std::sort(minimal.begin(), minimal.end(), [](const ModuleElement& x, const ModuleElement& y) {
        return cmp_module_term(x.leading_term(), y.leading_term()) > 0;
    });
    return minimal;
}

}  // namespace

GroebnerBasis buchberger(const GeneratorSet& G, const BuchbergerOptions& opts) {
    GroebnerBasis out;
    out.n = G.n;
    std::vector<ModuleElement> basis;
    for (const auto& g : G.normalized().generators) basis.push_back(monic(g));

    auto pair_less = [](const Pair& x, const Pair& y) {
        // Normal strategy: process the smallest lcm first.
        if (auto c = cmp_module_term(x.lcm_term, y.lcm_term); c != 0) return c < 0;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    };
    std::vector<Pair> queue;
    auto push_pairs_for = [&](std::size_t idx) {
        for (std::size_t i = 0; i < idx; ++i) {
            const ModTerm& ti = basis[i].leading_term();
            const ModTerm& tj = basis[idx].leading_term();
            if (ti.pos != tj.pos) continue;
            queue.push_back(Pair{ModTerm{ti.pos, lcm(ti.mono, tj.mono)}, i, idx});
        }
    };
    for (std::size_t i = 0; i < basis.size(); ++i) push_pairs_for(i);

    std::uint64_t processed = 0;
    std::set<std::pair<std::size_t, std::size_t>> done;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);
        if (++processed > opts.pair_budget) throw BudgetExceeded{opts.pair_budget};
        done.insert({p.a, p.b});

        const ModTerm& ta = basis[p.a].leading_term();
        const ModTerm& tb = basis[p.b].leading_term();
        if (opts.use_product_criterion && gcd(ta.mono, tb.mono).is_one() &&
            single_position(basis[p.a]) && single_position(basis[p.b]))
            continue;
        if (opts.use_chain_criterion) {
            bool skip = false;
            for (std::size_t c = 0; c < basis.size() && !skip; ++c) {
                if (c == p.a || c == p.b) continue;
                const ModTerm& tc = basis[c].leading_term();
                if (tc.pos == p.lcm_term.pos && tc.mono.divides(p.lcm_term.mono) &&
                    done.count({std::min(p.a, c), std::max(p.a, c)}) &&
                    done.count({std::min(p.b, c), std::max(p.b, c)}))
                    skip = true;
            }
            if (skip) continue;
        }

        auto s = s_pair(basis[p.a], basis[p.b]);
        if (!s) continue;
        ModuleElement rem = normal_form(*s, basis).remainder;
        if (rem.is_zero()) continue;
        basis.push_back(monic(rem));
        push_pairs_for(basis.size() - 1);
    }

    out.elements = interreduce(std::move(basis));
    out.reduced = true;
    return out;
}

GroebnerCertificate is_groebner(const GeneratorSet& G) {
    GroebnerCertificate cert;
    const auto gens = G.normalized().generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            auto s = s_pair(gens[i], gens[j]);
            if (!s) continue;
            ++cert.pairs_checked;
            ModuleElement rem = normal_form(*s, gens).remainder;
            ++cert.reductions;
            if (!rem.is_zero()) {
                cert.pass = false;
                cert.counterexample = SPairRecord{static_cast<int>(i), static_cast<int>(j), false};
                cert.witness = rem;
                return cert;
            }
        }
    }
    cert.pass = true;
    return cert;
}

std::string GroebnerCertificate::render() const {
    std::ostringstream os;
    if (pass) {
        os << "PASS: " << pairs_checked << " S-pairs checked, " << reductions << " reductions";
    } else {
        os << "FAIL at pair (" << counterexample->a << "," << counterexample->b
           << "): nonzero normal form " << to_string(witness);
    }
    return os.str();
}

MonomialModule initial_module_of(const std::vector<ModuleElement>& basis) {
    MonomialModule M;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        const ModTerm& t = g.leading_term();
        M.gens[t.pos].push_back(t.mono);
    }
    for (auto& [pos, monos] : M.gens) {
        std::vector<Monomial> minimal;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < monos.size() && !redundant; ++j) {
                if (i == j) continue;
                if (monos[j].divides(monos[i]) && !(monos[j] == monos[i] && j > i))
                    redundant = true;
            }
            if (!redundant &&
                std::find(minimal.begin(), minimal.end(), monos[i]) == minimal.end())
                minimal.push_back(monos[i]);
        }
        std::sort(minimal.begin(), minimal.end(), mono_greater);
        monos = std::move(minimal);
    }
    return M;
}

MonomialModule initial_module(const GroebnerBasis& G) {
    if (!G.reduced) {
        GeneratorSet S{G.elements, G.n};
        auto cert = is_groebner(S);
        if (!cert.pass) throw std::invalid_argument("initial_module: input is not a Groebner basis");
    }
    return initial_module_of(G.elements);
}

bool contains(const ModuleElement& f, const GroebnerBasis& G) {
    return normal_form(f, G.elements).remainder.is_zero();
}

bool submodule_equal(const GeneratorSet& A, const GeneratorSet& B, const BuchbergerOptions& opts) {
    // Reduced bases are canonical, so structural equality decides.
    GroebnerBasis ga = buchberger(A, opts);
    GroebnerBasis gb = buchberger(B, opts);
    return ga.elements == gb.elements;
}

}  // namespace umc
