#include "rdlab/enumerator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rdlab {

namespace {

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    for (long p = 2; p <= n; ++p) {
        bool ok = true;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(p);
    }
    return out;
}

long totient(long m) {
    long phi = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            phi -= phi / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) phi -= phi / m;
    return phi;
}

// All primitive character subgroups mod m, filtered; shared by the
// bounded enumeration and the corpus builder.
template <typename Keep>
std::vector<AbelianField> scan_conductor(long m, Keep&& keep) {
    auto g = unit_group(m);
    std::vector<long> orders;
    for (const auto& c : g->components()) orders.push_back(c.order);
    std::vector<AbelianField> out;
    for (auto& sub : subgroups(orders)) {
        long cond = 1;
        mpz_class disc = 1;
        for (const auto& e : sub.elements) {
            long c = conductor({g, e});
            cond = std::lcm(cond, c);
            disc *= c;
        }
        if (cond != m) continue;  // counted at its own conductor
        if (!keep(disc, static_cast<long>(sub.elements.size()))) continue;
        out.push_back(AbelianField::from_subgroup(m, std::move(sub.elements)));
    }
    return out;
}

void sort_fields(std::vector<AbelianField>& fields) {
    std::sort(fields.begin(), fields.end(), [](const AbelianField& a, const AbelianField& b) {
        long da = field_degree(a), db = field_degree(b);
        if (da != db) return da < db;
        mpz_class xa = discriminant(a), xb = discriminant(b);
        int c = cmp(xa, xb);
        if (c != 0) return c < 0;
        return a.canonical_key() < b.canonical_key();
    });
}

template <typename Scan>
std::vector<AbelianField> run_over_moduli(const std::vector<long>& moduli, Scan&& scan,
                                          bool parallel) {
    std::vector<AbelianField> fields;
    if (parallel) {
#pragma omp parallel
        {
            std::vector<AbelianField> local;
#pragma omp for schedule(dynamic) nowait
            for (long i = 0; i < static_cast<long>(moduli.size()); ++i) {
                auto part = scan(moduli[i]);
                local.insert(local.end(), std::make_move_iterator(part.begin()),
                             std::make_move_iterator(part.end()));
            }
#pragma omp critical
            fields.insert(fields.end(), std::make_move_iterator(local.begin()),
                          std::make_move_iterator(local.end()));
        }
    } else {
        for (long m : moduli) {
            auto part = scan(m);
            fields.insert(fields.end(), std::make_move_iterator(part.begin()),
                          std::make_move_iterator(part.end()));
        }
    }
    sort_fields(fields);
    return fields;
}

std::vector<AbelianField> enumerate_impl(const EnumerationParams& params, bool parallel) {
    if (params.bound <= 0) throw std::invalid_argument("enumerate: bound must be positive");
    auto moduli = candidate_conductors(params);
    unsigned long long estimate = 0;
    for (long m : moduli) {
        unsigned long long phi = static_cast<unsigned long long>(totient(m));
        estimate += phi * phi;
    }
    if (estimate > params.ceiling) throw ResourceCeilingExceeded(params.ceiling, estimate);

    const mpz_class& num = params.bound.get_num();
    const mpz_class& den = params.bound.get_den();
    auto scan = [&](long m) {
        return scan_conductor(m, [&](const mpz_class& disc, long degree) {
            if (params.max_degree && degree > *params.max_degree) return false;
            mpz_class lhs, rhs;
            mpz_pow_ui(rhs.get_mpz_t(), num.get_mpz_t(), degree);
            mpz_pow_ui(lhs.get_mpz_t(), den.get_mpz_t(), degree);
            lhs *= disc;
            return lhs <= rhs;
        });
    };
    return run_over_moduli(moduli, scan, parallel);
}

}  // namespace

EnumerationParams EnumerationParams::for_bound(const mpq_class& N, std::optional<long> max_degree) {
    EnumerationParams p;
    p.bound = N;
    p.max_degree = max_degree;
    p.prime_bound = ramified_prime_bound(N);
    for (long q : primes_up_to(p.prime_bound)) p.exponent_bounds[q] = exponent_bound(q, N);
    return p;
}

long ramified_prime_bound(const mpq_class& N) {
    if (N <= 0) throw std::invalid_argument("ramified_prime_bound: N must be positive");
    mpz_class n2 = N.get_num() * N.get_num();
    mpz_class d2 = N.get_den() * N.get_den();
    mpz_class q = n2 / d2;  // floor
    if (!q.fits_slong_p()) throw std::invalid_argument("ramified_prime_bound: bound too large");
    return std::max(1L, q.get_si());
}

long exponent_bound(long p, const mpq_class& N) {
    if (N <= 0) throw std::invalid_argument("exponent_bound: N must be positive");
    const mpz_class& num = N.get_num();
    const mpz_class& den = N.get_den();
    if (p == 2) {
        // wild levels: v_2(rd) >= a/2 for a >= 3, so need 2^a <= N^2
        long best = 2;
        mpz_class n2 = num * num, d2 = den * den;
        for (long a = 3;; ++a) {
            mpz_class lhs;
            mpz_ui_pow_ui(lhs.get_mpz_t(), 2, a);
            if (lhs * d2 > n2) break;
            best = a;
        }
        return best;
    }
    // odd p: v_p(rd) >= a*(1 - 1/p) for a >= 2, so need p^(a(p-1)) <= N^p
    long best = 1;
    mpz_class np, dp;
    mpz_pow_ui(np.get_mpz_t(), num.get_mpz_t(), p);
    mpz_pow_ui(dp.get_mpz_t(), den.get_mpz_t(), p);
    for (long a = 2;; ++a) {
        mpz_class lhs;
        mpz_ui_pow_ui(lhs.get_mpz_t(), p, a * (p - 1));
        if (lhs * dp > np) break;
        best = a;
    }
    return best;
}

std::vector<long> candidate_conductors(const EnumerationParams& params) {
    std::vector<std::pair<long, long>> bounds(params.exponent_bounds.begin(),
                                              params.exponent_bounds.end());
    constexpr long kModulusCap = 1'000'000'000'000L;
    std::vector<long> out;
    // depth-first over exponent choices, pruning on the squarefree kernel
    std::vector<long> stack_m{1}, stack_rad{1};
    std::vector<size_t> stack_i{0};
    while (!stack_m.empty()) {
        long m = stack_m.back();
        long rad = stack_rad.back();
        size_t i = stack_i.back();
        stack_m.pop_back();
        stack_rad.pop_back();
        stack_i.pop_back();
        if (i == bounds.size()) {
            out.push_back(m);
            if (out.size() > params.ceiling)
                throw ResourceCeilingExceeded(params.ceiling, out.size());
            continue;
        }
        auto [p, bnd] = bounds[i];
        // exponent 0 (p unramified)
        stack_m.push_back(m);
        stack_rad.push_back(rad);
        stack_i.push_back(i + 1);
        if (rad * p > params.prime_bound) continue;  // rd >= sqrt(rad)
        long pw = p;
        for (long a = 1; a <= bnd; ++a, pw *= p) {
            if (p == 2 && a == 1) continue;  // no conductor is 2 mod 4
            if (m > kModulusCap / pw)
                throw ResourceCeilingExceeded(params.ceiling,
                                              std::numeric_limits<unsigned long long>::max());
            stack_m.push_back(m * pw);
            stack_rad.push_back(rad * p);
            stack_i.push_back(i + 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AbelianField> enumerate_abelian_fields(const EnumerationParams& params) {
    return enumerate_impl(params, true);
}

std::vector<AbelianField> enumerate_abelian_fields_serial(const EnumerationParams& params) {
    return enumerate_impl(params, false);
}

std::vector<AbelianField> all_fields_with_conductor_leq(long C) {
    if (C < 1) throw std::invalid_argument("conductor limit must be >= 1");
    std::vector<long> moduli;
    for (long m = 1; m <= C; ++m)
        if (m % 4 != 2) moduli.push_back(m);  // no conductor is 2 mod 4
    auto scan = [](long m) {
        return scan_conductor(m, [](const mpz_class&, long) { return true; });
    };
    return run_over_moduli(moduli, scan, true);
}

}  // namespace rdlab
