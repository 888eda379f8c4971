#include <doctest.h>

#include <random>
#include <vector>

#include "umc/resonance.hpp"
#include "umc/series.hpp"

using namespace umc;

namespace {

std::vector<Rat> add_scaled(std::vector<Rat> v, const Rat& c, const std::vector<Rat>& w) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
    return v;
}

bool on_some_component(const std::vector<Component>& comps, const std::vector<Rat>& pt) {
    for (const auto& c : comps) {
        bool inside = true;
        for (const auto& eq : c.space.equations.rows) {
            Rat dot = 0;
            for (std::size_t i = 0; i < pt.size(); ++i) dot += eq[i] * pt[i];
            if (dot != 0) { inside = false; break; }
        }
        if (inside) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("component inventory: count, dimension, isotropy, validity") {
    for (int n = 3; n <= 5; ++n) {
        auto comps = components(n);
        CHECK(comps.size() == static_cast<std::size_t>(n * (n - 1) / 2 - (n - 1)));
        for (const auto& c : comps) {
            const int j = c.indices[1];
            CHECK(c.space.valid());
            CHECK(c.space.dim() == j);
            CHECK(c.isotropy == binomial(j - 1, 2).get_si());
        }
    }
    auto four = components(4);
    REQUIRE(four.size() == 3);
    CHECK(four[0].name() == "L(3,2)");
    CHECK(four[2].name() == "L(4,3)");
    CHECK(four[0].isotropy == 0);
    CHECK(four[1].isotropy == 0);
    CHECK(four[2].isotropy == 1);
}

TEST_CASE("membership, disjointness, isotropy, and restriction certificates") {
    for (int n = 3; n <= 5; ++n) {
        auto rep = verify_components(n);
        CHECK(rep.checks_run > 0);
        for (const auto& f : rep.failures) { INFO(f); CHECK(false); }
        CHECK(rep.pass);
    }
}

TEST_CASE("generic points have a one-dimensional cup kernel") {
    for (int n = 4; n <= 5; ++n) {
        auto R = UpperMcCoolRing::build(n);
        auto comps = components(n);
        const std::size_t dim = R.e1.size();
        std::mt19937 rng(9301);
        std::uniform_int_distribution<int> entry(-7, 7);
        int accepted = 0;
        while (accepted < 20) {
            std::vector<Rat> pt(dim);
            for (auto& x : pt) x = entry(rng);
            bool zero = true;
            for (const auto& x : pt) zero = zero && x == 0;
            if (zero || on_some_component(comps, pt)) continue;
            ++accepted;
            RatMatrix K = cup_kernel(from_e1_coords(pt, R), R);
            CHECK(K.row_count() == 1);
            CHECK(in_row_span(K, pt));
        }
    }
}

TEST_CASE("cup product: relations vanish, graded commutativity, bilinearity") {
    for (int n = 3; n <= 6; ++n) {
        auto R = UpperMcCoolRing::build(n);
        for (const auto& pos : R.triples) {
            auto v = cup(ext_u(pos.i, pos.k) - ext_u(pos.j, pos.k), ext_u(pos.i, pos.j), R);
            for (const auto& x : v) CHECK(x == 0);
        }
        std::mt19937 rng(9302);
        std::uniform_int_distribution<int> entry(-5, 5);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rat> av(R.e1.size()), bv(R.e1.size());
            for (auto& x : av) x = entry(rng);
            for (auto& x : bv) x = entry(rng);
            ExtElement a = from_e1_coords(av, R), b = from_e1_coords(bv, R);
            auto ab = cup(a, b, R), ba = cup(b, a, R);
            auto aa = cup(a, a, R);
            for (std::size_t i = 0; i < ab.size(); ++i) {
                CHECK(ab[i] == -ba[i]);
                CHECK(aa[i] == 0);
            }
        }
    }
}

TEST_CASE("isotropy rank is invariant under change of basis") {
    auto R = UpperMcCoolRing::build(5);
    std::mt19937 rng(9303);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (const auto& comp : components(5)) {
        const RatMatrix& B = comp.space.basis;
        for (int trial = 0; trial < 5; ++trial) {
            // Random invertible combination of the basis rows.
            RatMatrix M;
            do {
                M.rows.clear();
                for (std::size_t r = 0; r < B.row_count(); ++r) {
                    std::vector<Rat> row(B.col_count(), Rat(0));
                    for (std::size_t s = 0; s < B.row_count(); ++s)
                        row = add_scaled(std::move(row), entry(rng), B.rows[s]);
                    M.rows.push_back(std::move(row));
                }
            } while (rank(M) != B.row_count());
            CHECK(cup_rank(M, R) == static_cast<std::size_t>(comp.isotropy));
        }
    }
}

TEST_CASE("diagonal entries of the certified basis cut out subspaces of the components") {
    for (int n = 4; n <= 5; ++n) {
        auto rep = upper_bound_check(n);
        for (const auto& f : rep.failures) { INFO(f); CHECK(false); }
        CHECK(rep.pass);
    }
}

TEST_CASE("scheme report: embedded components and certificates") {
    auto rep4 = scheme(4);
    CHECK(rep4.pass());
    REQUIRE(rep4.embedded.size() == 1);
    CHECK(rep4.embedded[0].name() == "L'(4,3)");
    CHECK(rep4.embedded[0].space.dim() == 1);
    auto rep5 = scheme(5);
    CHECK(rep5.pass());
    REQUIRE(rep5.embedded.size() == 3);
    CHECK(rep5.embedded[0].name() == "L'(4,3)");
    CHECK(rep5.embedded[1].name() == "L'(5,3)");
    CHECK(rep5.embedded[2].name() == "L'(5,4)");
}

TEST_CASE("annihilator and radical certificates at n=4") {
    auto rep = ann_membership_example87();
    for (const auto& f : rep.failures) { INFO(f); CHECK(false); }
    CHECK(rep.pass);
}

TEST_CASE("depth lower bound certificates") {
    CHECK(depth_lower_bound(5, 2).pass);
    CHECK(depth_lower_bound(5, 3).pass);
    CHECK(depth_lower_bound(6, 2).pass);
    CHECK(depth_lower_bound(4, 3).checks_run == 0);  // vacuous
}

TEST_CASE("full-group inventory and the comparison report") {
    auto inv = mccool_inventory(4);
    long planes = 0, threes = 0;
    for (const auto& c : inv) {
        CHECK(c.space.valid());
        CHECK(c.isotropy == 0);
        if (c.kind == ComponentKind::McCoolPlane) {
            CHECK(c.space.dim() == 2);
            ++planes;
        } else {
            CHECK(c.space.dim() == 3);
            ++threes;
        }
    }
    CHECK(planes == 6);
    CHECK(threes == 4);

    auto rep = compare_groups(5);
    CHECK(rep.max_dim_upper == 4);
    CHECK(rep.max_dim_full == 3);
    CHECK(rep.planes == 10);
    CHECK(rep.threespaces == 10);
    CHECK(rep.upper_has_nonisotropic);
    CHECK(rep.epi_obstruction);
    CHECK_FALSE(compare_groups(3).epi_obstruction);
}

TEST_CASE("double representation is cross-validated") {
    for (int n = 3; n <= 5; ++n)
        for (int i = 3; i <= n; ++i)
            for (int j = 2; j < i; ++j) {
                auto L = make_L(n, i, j);
                CHECK(L.valid());
                if (j >= 3) CHECK(make_Lprime(n, i, j).valid());
            }
}
