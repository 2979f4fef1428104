#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rdlab/abelian_field.hpp"
#include "rdlab/ramification.hpp"

using namespace rdlab;

TEST_CASE("LowerFiltration validation") {
    CHECK_NOTHROW(LowerFiltration({1}));
    CHECK_NOTHROW(LowerFiltration({6, 3, 3, 1}));
    CHECK_THROWS(LowerFiltration({}));
    CHECK_THROWS(LowerFiltration({4, 3, 1}));  // 3 does not divide 4
    CHECK_THROWS(LowerFiltration({2, 4, 1}));  // increasing
    CHECK_THROWS(LowerFiltration({2, 2}));     // must end at 1
    LowerFiltration f({6, 3, 3, 1, 1, 1});
    CHECK(f.orders() == std::vector<long>{6, 3, 3, 1});  // trimmed after first 1
    CHECK(f.order_at(0) == 6);
    CHECK(f.order_at(2) == 3);
    CHECK(f.order_at(100) == 1);
    CHECK(f.inertia_order() == 6);
    CHECK_FALSE(f.tame());
    CHECK(LowerFiltration({5, 1}).tame());
}

TEST_CASE("Hilbert different and discriminant valuations") {
    LowerFiltration z9({6, 3, 3, 1});
    CHECK(different_valuation(z9) == 5 + 2 + 2);  // 9
    CHECK(disc_valuation(z9, 1, 1) == 9);
    CHECK(disc_valuation(z9, 2, 3) == 54);
    CHECK(different_valuation(LowerFiltration({1})) == 0);
    CHECK(different_valuation(LowerFiltration({7, 1})) == 6);
}

TEST_CASE("Herbrand phi: values and concavity") {
    LowerFiltration f({6, 3, 3, 1});
    CHECK(herbrand_phi(f, 0) == 0);
    CHECK(herbrand_phi(f, 1) == mpq_class(1, 2));
    CHECK(herbrand_phi(f, 2) == 1);
    CHECK(herbrand_phi(f, 3) == mpq_class(7, 6));
    // slopes g_u/g_0 are nonincreasing
    mpq_class prev_slope = 1;
    for (long u = 1; u <= 6; ++u) {
        mpq_class slope = herbrand_phi(f, u) - herbrand_phi(f, u - 1);
        CHECK(slope <= prev_slope);
        prev_slope = slope;
    }
}

TEST_CASE("upper_from_lower on known filtrations") {
    auto u1 = upper_from_lower(LowerFiltration({6, 3, 3, 1}));
    REQUIRE(u1.jumps().size() == 2);
    CHECK(u1.jumps()[0].v == 0);
    CHECK(u1.jumps()[0].order == 6);
    CHECK(u1.jumps()[1].v == 1);
    CHECK(u1.jumps()[1].order == 3);

    auto u2 = upper_from_lower(LowerFiltration({2, 2, 1}));
    REQUIRE(u2.jumps().size() == 1);
    CHECK(u2.jumps()[0].v == 1);
    CHECK(u2.jumps()[0].order == 2);

    auto u3 = upper_from_lower(LowerFiltration({4, 4, 2, 2, 1}));  // Q_2(zeta_8)
    REQUIRE(u3.jumps().size() == 2);
    CHECK(u3.jumps()[0].v == 1);
    CHECK(u3.jumps()[0].order == 4);
    CHECK(u3.jumps()[1].v == 2);
    CHECK(u3.jumps()[1].order == 2);

    CHECK(upper_from_lower(LowerFiltration({1})).trivial());
}

TEST_CASE("lower_from_upper inverts upper_from_lower") {
    for (auto orders : std::vector<std::vector<long>>{{1},
                                                      {5, 1},
                                                      {2, 2, 1},
                                                      {6, 3, 3, 1},
                                                      {4, 4, 2, 2, 1},
                                                      {18, 9, 9, 3, 3, 3, 3, 3, 3, 3, 3, 3, 1},
                                                      {8, 8, 4, 4, 4, 4, 2, 2, 2, 2, 2, 2, 2, 2, 1}}) {
        LowerFiltration f(orders);
        CHECK(lower_from_upper(upper_from_lower(f)) == f);
    }
}

TEST_CASE("round-trip on random divisibility chains") {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> nseg(0, 4), len(1, 5), mult(2, 4);
    for (int iter = 0; iter < 1000; ++iter) {
        int segs = nseg(rng);
        std::vector<long> rev{1};
        long cur = 1;
        for (int s = 0; s < segs; ++s) {
            cur *= mult(rng);
            int l = len(rng);
            for (int i = 0; i < l; ++i) rev.push_back(cur);
        }
        std::vector<long> orders(rev.rbegin(), rev.rend());
        LowerFiltration f(orders);
        auto u = upper_from_lower(f);
        CHECK(lower_from_upper(u) == f);
        if (hasse_arf_check(u)) CHECK(conductor_exponent(u) >= 0);
    }
}

TEST_CASE("hasse_arf_check rejects the half-integral jump of [4,2,1]") {
    auto u = upper_from_lower(LowerFiltration({4, 2, 1}));
    REQUIRE(u.jumps().size() == 2);
    CHECK(u.jumps()[1].v == mpq_class(1, 2));
    CHECK_FALSE(hasse_arf_check(u));
    CHECK(hasse_arf_check(upper_from_lower(LowerFiltration({4, 2, 2, 1}))));
}

TEST_CASE("upper_groups_from_characters") {
    // Q_5(zeta_5): exponents {0,1,1,1}
    auto u = upper_groups_from_characters({0, 1, 1, 1});
    REQUIRE(u.jumps().size() == 1);
    CHECK(u.jumps()[0].v == 0);
    CHECK(u.jumps()[0].order == 4);
    // Q_3(zeta_9): principal, the quadratic char of conductor 3, and four
    // characters of conductor 9
    auto u9 = upper_groups_from_characters({0, 1, 2, 2, 2, 2});
    REQUIRE(u9.jumps().size() == 2);
    CHECK(u9.jumps()[0].v == 0);
    CHECK(u9.jumps()[0].order == 6);
    CHECK(u9.jumps()[1].v == 1);
    CHECK(u9.jumps()[1].order == 3);
    CHECK(upper_groups_from_characters({0}).trivial());
    CHECK_THROWS(upper_groups_from_characters({1, 1}));  // principal char missing
}

TEST_CASE("conductor exponent equals one plus the last upper jump") {
    CHECK(conductor_exponent(UpperJumps()) == 0);
    CHECK(conductor_exponent(upper_from_lower(LowerFiltration({6, 3, 3, 1}))) == 2);
    CHECK(conductor_exponent(upper_from_lower(LowerFiltration({5, 1}))) == 1);
    CHECK_THROWS(conductor_exponent(upper_from_lower(LowerFiltration({4, 2, 1}))));
    // agreement with the global conductor for cyclotomic fields
    for (long p : {2L, 3L, 5L}) {
        for (long n = 1; n <= 3; ++n) {
            long q = 1;
            for (long i = 0; i < n; ++i) q *= p;
            if (q < 3) continue;
            auto F = AbelianField::cyclotomic(q);
            auto ld = local_data(F, p);
            CHECK(conductor_exponent(upper_groups_from_characters(ld.conductor_exponents)) == n);
        }
    }
}

TEST_CASE("cyclotomic_filtration closed form vs character computation") {
    CHECK(cyclotomic_filtration(3, 1) == LowerFiltration({2, 1}));
    CHECK(cyclotomic_filtration(3, 2) == LowerFiltration({6, 3, 3, 1}));
    CHECK(cyclotomic_filtration(2, 2) == LowerFiltration({2, 2, 1}));
    CHECK(cyclotomic_filtration(2, 3) == LowerFiltration({4, 4, 2, 2, 1}));
    CHECK(cyclotomic_filtration(3, 3) ==
          LowerFiltration({18, 9, 9, 3, 3, 3, 3, 3, 3, 1}));
    for (long p : {2L, 3L, 5L, 7L}) {
        for (long n = 1; n <= 4; ++n) {
            long q = 1;
            for (long i = 0; i < n; ++i) q *= p;
            if (q < 3 || q > 300) continue;
            auto F = AbelianField::cyclotomic(q);
            auto ld = local_data(F, p);
            auto from_chars = lower_from_upper(upper_groups_from_characters(ld.conductor_exponents));
            CHECK(cyclotomic_filtration(p, n) == from_chars);
        }
    }
}

TEST_CASE("lemma_J_check") {
    CHECK(lemma_J_check(LowerFiltration({3, 3, 3, 1}), 3));
    CHECK(lemma_J_check(LowerFiltration({9, 9, 9, 3, 3, 3, 3, 3, 3, 1}), 3));
    CHECK_FALSE(lemma_J_check(LowerFiltration({9, 9, 3, 1}), 3));  // 3 appears twice < 3 times
    CHECK(lemma_J_check(LowerFiltration({2, 2, 1}), 2));
    CHECK(lemma_J_check(LowerFiltration({1}), 5));
    CHECK_THROWS(lemma_J_check(LowerFiltration({6, 3, 3, 1}), 3));  // not a p-group
}
