#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "umc/groebner.hpp"
#include "umc/presentations.hpp"

using namespace umc;

namespace {

ModuleElement random_element(std::mt19937& rng, int n, int terms) {
    const auto vars = variables_desc(n);
    const auto triples = triples_desc(n);
    std::uniform_int_distribution<int> pickVar(0, static_cast<int>(vars.size()) - 1);
    std::uniform_int_distribution<int> pickPos(0, static_cast<int>(triples.size()) - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    ModuleElement e;
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<Variable, int>> pairs;
        int d = deg(rng);
        for (int s = 0; s < d; ++s)
            pairs.emplace_back(vars[static_cast<std::size_t>(pickVar(rng))], 1);
        int c = coeff(rng);
        if (c == 0) c = 1;
        e += ModuleElement(Rat(c), Monomial::from_pairs(std::move(pairs)),
                           triples[static_cast<std::size_t>(pickPos(rng))]);
    }
    return e;
}

std::string render_basis(const GroebnerBasis& b) {
    std::ostringstream os;
    for (const auto& e : b.elements) os << to_string(e) << "\n";
    return os.str();
}

}  // namespace

TEST_CASE("division reconstructs the input and leaves an irreducible remainder") {
    std::mt19937 rng(8101);
    const auto divisors = gens_G(4).plain().generators;
    for (int trial = 0; trial < 200; ++trial) {
        ModuleElement f = random_element(rng, 4, 4);
        DivisionResult d = normal_form(f, divisors);
        ModuleElement recombined = d.remainder;
        REQUIRE(d.quotients.size() == divisors.size());
        for (std::size_t i = 0; i < divisors.size(); ++i)
            recombined += d.quotients[i] * divisors[i];
        CHECK(recombined == f);
        for (const auto& [term, c] : d.remainder.terms())
            for (const auto& g : divisors) {
                const ModTerm& lt = g.leading_term();
                if (lt.pos == term.pos) CHECK_FALSE(lt.mono.divides(term.mono));
            }
    }
}

TEST_CASE("s_pair cancels leading terms and respects positions") {
    std::mt19937 rng(8102);
    for (int trial = 0; trial < 300; ++trial) {
        ModuleElement g = random_element(rng, 4, 3);
        ModuleElement h = random_element(rng, 4, 3);
        if (g.is_zero() || h.is_zero()) continue;
        auto s = s_pair(g, h);
        if (g.leading_term().pos != h.leading_term().pos) {
            CHECK_FALSE(s.has_value());
            continue;
        }
        REQUIRE(s.has_value());
        if (!s->is_zero()) {
            const ModTerm expected{g.leading_term().pos,
                                   lcm(g.leading_term().mono, h.leading_term().mono)};
            CHECK(cmp_module_term(s->leading_term(), expected) < 0);
        }
    }
}

TEST_CASE("buchberger output is reduced, monic, and closed under S-pairs") {
    GroebnerBasis b = buchberger(gens_B(4).plain());
    CHECK(b.reduced);
    for (const auto& e : b.elements) CHECK(e.leading_coefficient() == 1);
    // No leading term divides another, and no tail term is reducible.
    for (std::size_t i = 0; i < b.elements.size(); ++i)
        for (const auto& [term, c] : b.elements[i].terms())
            for (std::size_t j = 0; j < b.elements.size(); ++j) {
                if (i == j) continue;
                const ModTerm& lt = b.elements[j].leading_term();
                if (lt.pos == term.pos) CHECK_FALSE(lt.mono.divides(term.mono));
            }
    GeneratorSet asSet{b.elements, 4};
    CHECK(is_groebner(asSet).pass);
}

TEST_CASE("reduced basis is canonical under input shuffling") {
    GeneratorSet base = gens_B(4).plain();
    const std::string reference = render_basis(buchberger(base));
    std::mt19937 rng(8103);
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
        GeneratorSet shuffled = base;
        std::shuffle(shuffled.generators.begin(), shuffled.generators.end(), rng);
        CHECK(render_basis(buchberger(shuffled)) == reference);
    }
}

TEST_CASE("product criterion restriction does not change the result") {
    BuchbergerOptions plain;
    plain.use_product_criterion = false;
    BuchbergerOptions fast;
    fast.use_product_criterion = true;
    GeneratorSet base = gens_B(4).plain();
    CHECK(render_basis(buchberger(base, plain)) == render_basis(buchberger(base, fast)));
}

TEST_CASE("is_groebner flags an incomplete basis with a witness") {
    // {x43*x42 - x21^2, x43*x21} has the S-vector -x21^3, irreducible by
    // either leading term.
    PositionIndex p(4, 3, 2);
    Polynomial a = Polynomial::variable(Variable(4, 3));
    Polynomial b = Polynomial::variable(Variable(4, 2));
    Polynomial c = Polynomial::variable(Variable(2, 1));
    GeneratorSet g;
    g.n = 4;
    g.generators.push_back(ModuleElement(a * b - c * c, p));
    g.generators.push_back(ModuleElement(a * c, p));
    auto cert = is_groebner(g);
    CHECK_FALSE(cert.pass);
    CHECK(cert.counterexample.has_value());
    CHECK_FALSE(cert.witness.is_zero());
    // Completion fixes it.
    GroebnerBasis fixed = buchberger(g);
    CHECK(is_groebner(GeneratorSet{fixed.elements, 4}).pass);
}

TEST_CASE("contains and submodule_equal") {
    GeneratorSet B = gens_B(4).plain();
    GroebnerBasis gb = buchberger(B);
    for (const auto& g : gens_G(4).plain().generators) CHECK(contains(g, gb));
    CHECK(submodule_equal(gens_B(4).plain(), gens_G(4).plain()));
    CHECK_FALSE(submodule_equal(gens_B(4).plain(), gens_Bprime(4).plain()));
}

TEST_CASE("budget exhaustion raises") {
    BuchbergerOptions opts;
    opts.pair_budget = 1;
    CHECK_THROWS_AS((void)buchberger(gens_B(4).plain(), opts), BudgetExceeded);
}

TEST_CASE("initial module minimalizes per position") {
    GroebnerBasis gb = buchberger(gens_G(4).plain());
    MonomialModule ini = initial_module(gb);
    for (const auto& [pos, gens] : ini.gens)
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = 0; b < gens.size(); ++b)
                if (a != b) CHECK_FALSE(gens[a].divides(gens[b]));
}
