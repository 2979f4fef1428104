#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "rdlab/characters.hpp"

using namespace rdlab;

static long naive_phi(long m) {
    long c = 0;
    for (long a = 1; a <= m; ++a)
        if (std::gcd(a, m) == 1) ++c;
    return c;
}

static long pow_mod(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<long>(static_cast<__int128>(r) * b % m);
        b = static_cast<long>(static_cast<__int128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

TEST_CASE("unit group decomposition: orders, generators, dlog") {
    for (long m = 1; m <= 200; ++m) {
        auto g = unit_group(m);
        long phi = 1;
        for (const auto& c : g->components()) phi *= c.order;
        REQUIRE(phi == naive_phi(m));
        REQUIRE(g->phi() == phi);
        // every unit has a dlog, and the dlog reproduces the residue
        for (long a = 0; a < m || (m == 1 && a == 0); ++a) {
            const auto* d = g->dlog(a);
            if (m > 1 && std::gcd(a, m) != 1) {
                CHECK(d == nullptr);
                continue;
            }
            REQUIRE(d != nullptr);
            long x = 1 % std::max(m, 2L);
            for (size_t i = 0; i < g->components().size(); ++i)
                x = static_cast<long>(static_cast<__int128>(x) *
                                      pow_mod(g->components()[i].generator, (*d)[i],
                                              std::max(m, 2L)) %
                                      std::max(m, 2L));
            if (m > 1) CHECK(x == a % m);
        }
        // generators have the stated order and live in the right component
        for (const auto& c : g->components()) {
            if (m == 1 || m == 2) continue;
            CHECK(pow_mod(c.generator, c.order, m) == 1);
            for (long d = 1; d < c.order; ++d)
                if (c.order % d == 0) CHECK(pow_mod(c.generator, d, m) != 1);
            CHECK(c.generator % (m / c.prime_power * 1) >= 0);
            if (m / c.prime_power > 1) CHECK(c.generator % (m / c.prime_power) == 1 % (m / c.prime_power));
        }
    }
}

TEST_CASE("two-part of the unit group mod powers of two") {
    CHECK(unit_group(2)->components().empty());
    auto g4 = unit_group(4);
    REQUIRE(g4->components().size() == 1);
    CHECK(g4->components()[0].generator == 3);
    auto g8 = unit_group(8);
    REQUIRE(g8->components().size() == 2);
    CHECK(g8->components()[0].generator == 7);  // -1
    CHECK(g8->components()[1].generator == 5);
    auto g16 = unit_group(16);
    REQUIRE(g16->components().size() == 2);
    CHECK(g16->components()[0].generator == 15);
    CHECK(g16->components()[1].generator == 5);
    CHECK(g16->components()[1].order == 4);
}

// Oracle: smallest f | m such that chi is trivial on every unit == 1 mod f.
static long naive_conductor(const DirichletCharacter& chi) {
    long m = chi.group->modulus();
    for (long f = 1; f <= m; ++f) {
        if (m % f != 0) continue;
        bool ok = true;
        for (long a = 1; a <= m && ok; ++a) {
            if (m > 1 && std::gcd(a, m) != 1) continue;
            if (a % f != 1 % f) continue;
            auto v = char_eval(chi, a);
            ok = v && v->num == 0;
        }
        if (ok) return f;
    }
    return m;
}

TEST_CASE("conductor matches kernel-based oracle for every character") {
    for (long m : {1L, 3L, 4L, 5L, 7L, 8L, 9L, 12L, 15L, 16L, 21L, 24L, 32L, 36L, 40L, 45L, 63L}) {
        auto g = unit_group(m);
        std::vector<long> orders;
        for (const auto& c : g->components()) orders.push_back(c.order);
        std::vector<long> e(orders.size(), 0);
        while (true) {
            DirichletCharacter chi{g, e};
            CHECK(conductor(chi) == naive_conductor(chi));
            // per-prime exponents multiply out to the conductor
            long prod = 1;
            for (long p = 2; p <= m; ++p) {
                if (!(m % p == 0)) continue;
                bool prime = true;
                for (long d = 2; d * d <= p; ++d)
                    if (p % d == 0) prime = false;
                if (!prime) continue;
                long q = 1;
                for (long k = 0; k < conductor_exponent_at(chi, p); ++k) q *= p;
                prod *= q;
            }
            CHECK(prod == conductor(chi));
            size_t i = 0;
            while (i < e.size() && ++e[i] == orders[i]) e[i++] = 0;
            if (i == e.size()) break;
        }
    }
}

TEST_CASE("character order and parity") {
    auto g5 = unit_group(5);
    DirichletCharacter chi{g5, {1}};
    CHECK(char_order(chi) == 4);
    CHECK(char_parity(chi) == -1);  // chi(-1) = chi(4) = i^2
    DirichletCharacter chi2{g5, {2}};
    CHECK(char_order(chi2) == 2);
    CHECK(char_parity(chi2) == 1);
    CHECK(is_principal(principal_character(g5)) );
    CHECK(char_order(principal_character(g5)) == 1);
}

TEST_CASE("char_eval is multiplicative and zero off units") {
    for (long m : {5L, 8L, 12L, 45L}) {
        auto g = unit_group(m);
        std::vector<long> e(g->components().size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<long>(i) + 1;
        DirichletCharacter chi{g, e};
        for (long a = 0; a < m; ++a) {
            for (long b = 0; b < m; ++b) {
                auto va = char_eval(chi, a), vb = char_eval(chi, b);
                auto vab = char_eval(chi, a * b % m);
                if (va && vb) {
                    REQUIRE(vab);
                    CHECK(*vab == mul(*va, *vb));
                } else {
                    CHECK_FALSE(vab);
                }
            }
        }
    }
}

TEST_CASE("induce and primitivize round-trip") {
    auto g15 = unit_group(15), g45 = unit_group(45);
    // character mod 15 of conductor 5, lifted to 45 and cut back down
    auto g5 = unit_group(5);
    DirichletCharacter chi5{g5, {1}};
    auto chi15 = induce(chi5, g15);
    CHECK(conductor(chi15) == 5);
    auto chi45 = induce(chi15, g45);
    CHECK(conductor(chi45) == 5);
    auto prim = primitivize(chi45);
    CHECK(prim.group->modulus() == 5);
    CHECK(prim.exps == chi5.exps);
    // values agree on common units
    for (long a = 1; a < 45; ++a) {
        if (std::gcd(a, 45L) != 1) continue;
        auto v1 = char_eval(chi45, a), v2 = char_eval(chi5, a % 5);
        REQUIRE(v1);
        REQUIRE(v2);
        CHECK(*v1 == *v2);
    }
}

TEST_CASE("root of unity arithmetic") {
    CHECK(root_of_unity(2, 4) == root_of_unity(1, 2));
    CHECK(root_of_unity(-1, 4) == root_of_unity(3, 4));
    CHECK(mul(root_of_unity(1, 3), root_of_unity(1, 6)) == root_of_unity(1, 2));
    CHECK(mul(root_of_unity(1, 2), root_of_unity(1, 2)) == root_of_unity(0, 1));
}

// Oracle subgroup enumeration: distinct spans of all generating subsets of
// size <= #components (sufficient: a subgroup of a product of k cyclic
// groups needs at most k generators).
static std::set<std::vector<std::vector<long>>> naive_subgroups(const std::vector<long>& orders) {
    std::vector<std::vector<long>> all = span_of(orders, {});
    // all elements of the ambient group
    {
        std::vector<std::vector<long>> gens;
        std::vector<long> e(orders.size(), 0);
        while (true) {
            gens.push_back(e);
            size_t i = 0;
            while (i < e.size() && ++e[i] == orders[i]) e[i++] = 0;
            if (i == e.size()) break;
        }
        all = gens;
    }
    std::set<std::vector<std::vector<long>>> seen;
    size_t k = orders.size(), n = all.size();
    std::vector<size_t> idx(k, 0);
    // multisets of up to k element indices
    std::vector<size_t> pick;
    auto rec = [&](auto&& self, size_t start, size_t depth) -> void {
        std::vector<std::vector<long>> gens;
        for (size_t i : pick) gens.push_back(all[i]);
        seen.insert(span_of(orders, gens));
        if (depth == k) return;
        for (size_t i = start; i < n; ++i) {
            pick.push_back(i);
            self(self, i, depth + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, 0);
    return seen;
}

TEST_CASE("subgroups: every subgroup exactly once") {
    std::vector<std::vector<long>> cases = {{}, {6}, {2, 2}, {4, 2}, {2, 2, 2}, {3, 3},
                                            {4, 4}, {6, 2}, {12}, {2, 4, 3}, {9, 3}};
    for (const auto& orders : cases) {
        CAPTURE(orders);
        auto got = subgroups(orders);
        std::set<std::vector<std::vector<long>>> got_sets;
        for (const auto& s : got) {
            // elements are the closure of the canonical generators
            CHECK(span_of(orders, s.generators) == s.elements);
            got_sets.insert(s.elements);
        }
        CHECK(got_sets.size() == got.size());  // no duplicates
        CHECK(got_sets == naive_subgroups(orders));
    }
}

TEST_CASE("subgroup counts match classical formulas") {
    auto count = [](std::vector<long> orders) { return subgroups(orders).size(); };
    CHECK(count({12}) == 6);      // divisors of 12
    CHECK(count({2, 2}) == 5);    // Klein four group
    CHECK(count({3, 3}) == 6);    // p + 3 for p = 3
    CHECK(count({5, 5}) == 8);
    CHECK(count({2, 2, 2}) == 16);
}

TEST_CASE("canonical_generators is stable and minimal") {
    std::vector<long> orders{2, 2};
    auto subs = subgroups(orders);
    for (const auto& s : subs) {
        auto g = canonical_generators(orders, s.elements);
        CHECK(g == s.generators);
        CHECK(span_of(orders, g) == s.elements);
    }
    // full Klein group: greedy picks (0,1) then (1,0)
    std::vector<std::vector<long>> all{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    auto g = canonical_generators(orders, all);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == std::vector<long>{0, 1});
    CHECK(g[1] == std::vector<long>{1, 0});
}
