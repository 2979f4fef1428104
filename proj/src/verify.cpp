#include "rdlab/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "rdlab/fieldspec.hpp"
#include "rdlab/towers.hpp"

namespace rdlab {

namespace {

std::string describe(const AbelianField& F) { return canonical_spec(F); }

LowerFiltration char_filtration(const LocalData& ld) {
    return lower_from_upper(upper_groups_from_characters(ld.conductor_exponents));
}

}  // namespace

SuiteResult verify_disc_valuations(const std::vector<AbelianField>& corpus) {
    SuiteResult r{"disc-valuation", "v_p(disc) = g*f*sum(|G_i|-1) vs conductor product", 0, {}};
    for (const auto& F : corpus) {
        mpz_class d = discriminant(F);
        for (long p : ramified_primes(F)) {
            LocalData ld = local_data(F, p);
            long via_filtration = disc_valuation(char_filtration(ld), ld.f, ld.g);
            long via_conductors = static_cast<long>(valuation(d, p));
            ++r.checks;
            if (via_filtration != via_conductors) {
                std::ostringstream os;
                os << describe(F) << " p=" << p << ": filtration " << via_filtration
                   << " != conductor product " << via_conductors;
                r.failures.push_back(os.str());
            }
        }
    }
    return r;
}

SuiteResult verify_tower(const std::vector<AbelianField>& corpus) {
    SuiteResult r{"tower", "v_p(disc L) = v_p(N_{K/Q} d_{L/K}) + [L:K]*v_p(disc K)", 0, {}};
    for (const auto& K : corpus) {
        for (const auto& L : corpus) {
            if (field_degree(L) % field_degree(K) != 0) continue;
            if (L.modulus() % K.modulus() != 0) continue;
            if (!is_subfield(K, L)) continue;
            auto rep = tower_check(K, L);
            ++r.checks;
            if (!rep.holds) {
                std::ostringstream os;
                os << describe(K) << " in " << describe(L) << ":";
                for (const auto& pc : rep.per_prime)
                    if (pc.lhs != pc.rhs)
                        os << " p=" << pc.p << " lhs=" << pc.lhs << " rhs=" << pc.rhs;
                r.failures.push_back(os.str());
            }
        }
    }
    return r;
}

SuiteResult verify_mult(const std::vector<AbelianField>& corpus, size_t max_pairs) {
    SuiteResult r{"mult", "rd(EF)*rd(E n F) <= rd(E)*rd(F)", 0, {}};
    size_t n = corpus.size();
    auto check = [&](size_t i, size_t j) {
        auto rep = mult_lemma_check(corpus[i], corpus[j]);
        ++r.checks;
        if (!rep.holds)
            r.failures.push_back(describe(corpus[i]) + " , " + describe(corpus[j]));
    };
    size_t total = n * (n + 1) / 2;
    if (total <= max_pairs) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) check(i, j);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<size_t> pick(0, n - 1);
        for (size_t k = 0; k < max_pairs; ++k) check(pick(rng), pick(rng));
    }
    return r;
}

SuiteResult verify_ore(const std::vector<AbelianField>& corpus) {
    SuiteResult r{"ore", "v_p(disc E) <= n*(1 + v_p(e) - 1/e)", 0, {}};
    for (const auto& F : corpus) {
        for (long p : ramified_primes(F)) {
            auto rep = ore_bound_check(F, p);
            ++r.checks;
            if (!rep.holds) {
                std::ostringstream os;
                os << describe(F) << " p=" << p << " lhs=" << rep.lhs << " rhs=" << rep.rhs;
                r.failures.push_back(os.str());
            }
        }
    }
    return r;
}

SuiteResult verify_hasse_arf(const std::vector<AbelianField>& corpus) {
    SuiteResult r{"hasse-arf", "upper-numbering jumps of abelian filtrations are integral", 0, {}};
    for (const auto& F : corpus) {
        for (long p : ramified_primes(F)) {
            auto upper = upper_groups_from_characters(local_data(F, p).conductor_exponents);
            ++r.checks;
            if (!hasse_arf_check(upper))
                r.failures.push_back(describe(F) + " p=" + std::to_string(p));
        }
    }
    return r;
}

LowerFiltration cyclotomic_quotient_filtration(long p, long n, const std::vector<long>& H) {
    long q = 1;
    for (long i = 0; i < n; ++i) q *= p;
    std::set<long> h(H.begin(), H.end());
    if (!h.count(1)) throw std::invalid_argument("subgroup must contain 1");
    auto coset_size = [&](const std::vector<long>& U) {
        // |U * H| via the product set
        std::set<long> prod;
        for (long u : U)
            for (long x : h) prod.insert(static_cast<long>((static_cast<__int128>(u) * x) % q));
        return static_cast<long>(prod.size());
    };
    // G^0 = all units, G^v = units == 1 mod p^v for 1 <= v < n
    std::vector<UpperJumps::Jump> jumps;
    long hs = static_cast<long>(h.size());
    std::vector<long> levels;  // |(G/H)^v| for v = 0..n-1
    for (long v = 0; v < n; ++v) {
        long pv = 1;
        for (long i = 0; i < v; ++i) pv *= p;
        std::vector<long> U;
        for (long a = 1; a < q; ++a)
            if (a % p != 0 && (v == 0 || a % pv == 1)) U.push_back(a);
        levels.push_back(coset_size(U) / hs);
    }
    levels.push_back(1);  // G^v trivial for v >= n
    for (long v = 0; v < static_cast<long>(levels.size()); ++v)
        if (levels[v] > 1 && (v + 1 >= static_cast<long>(levels.size()) || levels[v] > levels[v + 1]))
            jumps.push_back({mpq_class(v), levels[v]});
    return lower_from_upper(UpperJumps(std::move(jumps)));
}

LowerFiltration wild_part(const LowerFiltration& F) {
    long w = F.order_at(1);
    if (w == 1) return LowerFiltration({1});
    std::vector<long> orders{w};
    for (long i = 1;; ++i) {
        orders.push_back(F.order_at(i));
        if (F.order_at(i) == 1) break;
    }
    return LowerFiltration(std::move(orders));
}

SuiteResult verify_lemma_j(long max_prime_power) {
    SuiteResult r{"lemma-j",
                  "order-p^(t-i) subgroup appears as at least p^i lower ramification groups", 0, {}};
    for (long p : {2L, 3L, 5L}) {
        for (long n = 1;; ++n) {
            long q = 1;
            for (long i = 0; i < n; ++i) q *= p;
            if (q > max_prime_power) break;
            if (q < 3) continue;
            auto g = unit_group(q);
            std::vector<long> orders;
            for (const auto& c : g->components()) orders.push_back(c.order);
            for (const auto& sub : subgroups(orders)) {
                // subgroup H as residues mod q
                std::vector<long> H;
                for (const auto& e : sub.elements) {
                    __int128 x = 1;
                    for (size_t i = 0; i < e.size(); ++i)
                        for (long j = 0; j < e[i]; ++j)
                            x = (x * g->components()[i].generator) % q;
                    H.push_back(static_cast<long>(x));
                }
                // cyclic quotient only: at most p+1 cosets of order dividing p
                std::set<long> hset(H.begin(), H.end());
                long small = 0;
                for (long a = 1; a < q; ++a) {
                    if (a % p == 0) continue;
                    long ap = 1;
                    for (long i = 0; i < p; ++i) ap = static_cast<long>((static_cast<__int128>(ap) * a) % q);
                    if (hset.count(ap)) ++small;
                }
                if (small / static_cast<long>(hset.size()) > p) continue;  // quotient not cyclic
                auto filt = cyclotomic_quotient_filtration(p, n, H);
                auto wild = wild_part(filt);
                ++r.checks;
                if (!lemma_J_check(wild, p)) {
                    std::ostringstream os;
                    os << "p=" << p << " n=" << n << " |H|=" << H.size();
                    r.failures.push_back(os.str());
                }
            }
        }
    }
    return r;
}

SuiteResult verify_ray_class(long modulus_limit) {
    SuiteResult r{"ray-class", "ray class group orders over Q: phi(m), phi(m)/gcd(2, phi(m))", 0, {}};
    for (long m = 1; m <= modulus_limit; ++m) {
        long phi = 0;
        for (long a = 1; a <= m; ++a)
            if (std::gcd(a, m) == 1) ++phi;
        auto order_of = [](const std::vector<long>& inv) {
            long o = 1;
            for (long d : inv) o *= d;
            return o;
        };
        long with = order_of(ray_class_group_Q(m, true));
        long without = order_of(ray_class_group_Q(m, false));
        long expect_without = m > 2 ? phi / std::gcd(2L, phi) : phi;
        r.checks += 2;
        if (with != phi)
            r.failures.push_back("m=" + std::to_string(m) + " with infinity: order " +
                                 std::to_string(with) + " != " + std::to_string(phi));
        if (without != expect_without)
            r.failures.push_back("m=" + std::to_string(m) + " without infinity: order " +
                                 std::to_string(without) + " != " + std::to_string(expect_without));
    }
    return r;
}

}  // namespace rdlab
