#include <doctest.h>

#include <random>
#include <vector>

#include "umc/presentations.hpp"
#include "umc/series.hpp"

using namespace umc;

namespace {

/// Per-degree count of monomials outside the ideal, by dense enumeration.
std::vector<long> standard_monomial_counts(const std::vector<Monomial>& gens,
                                           const std::vector<Variable>& vars, int maxDeg) {
    std::vector<long> counts(static_cast<std::size_t>(maxDeg) + 1, 0);
    std::vector<int> exps(vars.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
        if (idx == vars.size()) {
            std::vector<std::pair<Variable, int>> pairs;
            for (std::size_t c = 0; c < vars.size(); ++c)
                if (exps[c] > 0) pairs.emplace_back(vars[c], exps[c]);
            Monomial m = Monomial::from_pairs(std::move(pairs));
            for (const auto& g : gens)
                if (g.divides(m)) return;
            ++counts[static_cast<std::size_t>(m.degree())];
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[idx] = e;
            self(self, idx + 1, left - e);
        }
        exps[idx] = 0;
    };
    rec(rec, 0, maxDeg);
    return counts;
}

}  // namespace

TEST_CASE("series arithmetic and canonical form") {
    auto one = RationalSeries::one_over(0);
    auto geo = RationalSeries::one_over(1);
    auto t = RationalSeries::monomial(1, 1);
    // (1-t) * 1/(1-t) = 1.
    RationalSeries one_minus_t({Int(1), Int(-1)}, 0);
    CHECK(one_minus_t * geo == one);
    CHECK(geo - t * geo == one);
    CHECK(geo * geo == RationalSeries::one_over(2));
    auto exp = RationalSeries::one_over(3).expansion(5);
    std::vector<Int> want = {1, 3, 6, 10, 15};
    CHECK(exp == want);
    CHECK(to_string(geo) == "(1)/(1-t)");
    CHECK((geo - geo).is_zero());
}

TEST_CASE("monomial Hilbert recursion vs brute-force counting, 100 random ideals") {
    std::mt19937 rng(9201);
    const int maxDeg = 8;
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> nv(1, 6);
        int nvars = nv(rng);
        auto all = variables_desc(4);
        std::vector<Variable> vars(all.begin(), all.begin() + nvars);
        std::uniform_int_distribution<int> ng(1, 8), gd(1, 3),
            pv(0, nvars - 1);
        std::vector<Monomial> gens;
        int count = ng(rng);
        for (int g = 0; g < count; ++g) {
            std::vector<std::pair<Variable, int>> pairs;
            int d = gd(rng);
            for (int s = 0; s < d; ++s)
                pairs.emplace_back(vars[static_cast<std::size_t>(pv(rng))], 1);
            gens.push_back(Monomial::from_pairs(std::move(pairs)));
        }
        auto series = hilb_monomial(gens, nvars);
        auto expansion = series.expansion(maxDeg + 1);
        auto brute = standard_monomial_counts(gens, vars, maxDeg);
        for (int d = 0; d <= maxDeg; ++d) {
            INFO("trial ", trial, " degree ", d);
            CHECK(expansion[static_cast<std::size_t>(d)] == brute[static_cast<std::size_t>(d)]);
        }
    }
}

TEST_CASE("free module and principal ideal base cases") {
    CHECK(hilb_monomial({}, 3) == RationalSeries::one_over(3));
    CHECK(hilb_monomial({Monomial()}, 3).is_zero());
    // One pure square in 2 variables: (1-t^2)/(1-t)^2 = (1+t)/(1-t).
    auto s = hilb_monomial({Monomial(Variable(2, 1), 2)}, 2);
    CHECK(s == RationalSeries({Int(1), Int(1)}, 1));
}

TEST_CASE("presentation Hilbert series matches the closed form, n = 3..5") {
    for (int n = 3; n <= 5; ++n) {
        CHECK(hilb_fp(gens_B(n).plain()) == closed_hilb_Bn(n));
        CHECK(hilb_fp(gens_Bprime(n).plain()) == closed_hilb_Bnprime(n));
    }
    auto exp = hilb_fp(gens_B(4).plain()).expansion(5);
    std::vector<Int> want = {4, 10, 16, 23, 31};
    CHECK(exp == want);
}

TEST_CASE("quotient sequence identity on Hilbert series") {
    for (int n = 4; n <= 5; ++n) CHECK(ses_identity(n));
    // At n=3 the quadratic correction vanishes: C(3,4) = 0.
    CHECK(closed_hilb_Bn(3) == closed_hilb_Bnprime(3));
}

TEST_CASE("Chen ranks: closed form equals series coefficients, k <= 12, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        ChenTable closed = chen_closed(n, 12);
        ChenTable series = chen_from_series(n, 12);
        REQUIRE(closed.theta.size() == 12);
        CHECK(closed.theta == series.theta);
        CHECK(closed.theta[0] == binomial(n, 2));
        CHECK(closed.theta[1] == binomial(n, 3));
        CHECK(closed.theta[2] == 2 * binomial(n + 1, 4));
    }
    ChenTable t4 = chen_closed(4, 5);
    CHECK(t4.theta[3] == 16);
    CHECK(t4.theta[4] == 23);
}

TEST_CASE("rank comparison distinguishes the three groups at n=4") {
    ComparisonRanks r = comparison_ranks(4, 4);
    CHECK(r.theta4_upper == 16);
    CHECK(r.theta4_pure_braid == 15);
    CHECK(r.theta4_pure_sym == 18);
    CHECK(r.theta4_pairwise_distinct);
    CHECK(r.thetak_mccool == 78);
}

TEST_CASE("binomial edge cases") {
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(10, 4) == 210);
}
