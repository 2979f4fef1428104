#include "rdlab/towers.hpp"

#include <numeric>
#include <stdexcept>

#include "rdlab/ramification.hpp"

namespace rdlab {

namespace {

LowerFiltration local_filtration(const LocalData& ld) {
    return lower_from_upper(upper_groups_from_characters(ld.conductor_exponents));
}

// Smith normal form diagonal of a small integer matrix (rows of
// relations among the columns' generators).
std::vector<long> smith_diagonal(std::vector<std::vector<long>> a) {
    size_t rows = a.size();
    if (rows == 0) return {};
    size_t cols = a[0].size();
    std::vector<long> diag;
    size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // find a nonzero pivot
        size_t pr = r0, pc = c0;
        bool found = false;
        for (size_t i = r0; i < rows && !found; ++i)
            for (size_t j = c0; j < cols && !found; ++j)
                if (a[i][j] != 0) {
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        std::swap(a[r0], a[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][c0], a[i][pc]);
        // clear the pivot row and column
        for (;;) {
            bool clean = true;
            for (size_t i = r0 + 1; i < rows; ++i) {
                if (a[i][c0] == 0) continue;
                long q = a[i][c0] / a[r0][c0];
                for (size_t j = c0; j < cols; ++j) a[i][j] -= q * a[r0][j];
                if (a[i][c0] != 0) {
                    std::swap(a[r0], a[i]);
                    clean = false;
                }
            }
            for (size_t j = c0 + 1; j < cols; ++j) {
                if (a[r0][j] == 0) continue;
                long q = a[r0][j] / a[r0][c0];
                for (size_t i = r0; i < rows; ++i) a[i][j] -= q * a[i][c0];
                if (a[r0][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(a[i][c0], a[i][j]);
                    clean = false;
                }
            }
            if (clean) break;
        }
        diag.push_back(std::abs(a[r0][c0]));
        ++r0;
        ++c0;
    }
    while (diag.size() < cols) diag.push_back(0);
    // enforce divisibility d1 | d2 | ...
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) {
            long g = std::gcd(diag[i], diag[j]);
            long l = (g == 0) ? 0 : diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

}  // namespace

TowerReport tower_check(const AbelianField& K, const AbelianField& L) {
    if (!is_subfield(K, L)) throw std::invalid_argument("tower_check: K must be a subfield of L");
    TowerReport rep;
    mpz_class dL = discriminant(L);
    mpz_class dK = discriminant(K);
    long rel_degree = field_degree(L) / field_degree(K);
    for (long p : ramified_primes(L)) {
        LocalData lL = local_data(L, p);
        LocalData lK = local_data(K, p);
        long DL = different_valuation(local_filtration(lL));
        long DK = different_valuation(local_filtration(lK));
        long e_rel = lL.e / lK.e;
        // transitivity of the different: v_{L_P}(D_{L/K}) = D_L - e_rel * D_K
        long norm_val = lL.g * lL.f * (DL - e_rel * DK);
        long lhs = static_cast<long>(valuation(dL, p));
        long rhs = norm_val + rel_degree * static_cast<long>(valuation(dK, p));
        rep.per_prime.push_back({p, lhs, rhs});
        if (lhs != rhs) rep.holds = false;
    }
    return rep;
}

MultReport mult_lemma_check(const AbelianField& E, const AbelianField& F) {
    RootDiscriminant rdE = root_discriminant(E);
    RootDiscriminant rdF = root_discriminant(F);
    RootDiscriminant rdEF = root_discriminant(compositum(E, F));
    RootDiscriminant rdI = root_discriminant(intersect(E, F));
    auto cmp = rd_product_compare(rdEF, rdI, rdE, rdF);
    return MultReport{cmp.leq, cmp.equal};
}

OreReport ore_bound_check(const AbelianField& E, long p) {
    if (!is_prime(mpz_class(p))) throw std::invalid_argument("ore_bound_check: p must be prime");
    OreReport rep;
    rep.p = p;
    long n = field_degree(E);
    long e = local_data(E, p).e;
    long vpe = 0;
    long x = e;
    while (x % p == 0) {
        x /= p;
        ++vpe;
    }
    rep.lhs = static_cast<long>(valuation(discriminant(E), p));
    rep.rhs = mpq_class(n) * (1 + vpe - mpq_class(1, e));
    rep.rhs.canonicalize();
    rep.holds = mpq_class(rep.lhs) <= rep.rhs;
    return rep;
}

std::vector<long> ray_class_group_Q(long m, bool with_infinity) {
    if (m < 1) throw std::invalid_argument("ray_class_group_Q: m must be >= 1");
    auto g = unit_group(m);
    const auto& comps = g->components();
    size_t k = comps.size();
    if (k == 0) return {};
    std::vector<std::vector<long>> rel;
    for (size_t i = 0; i < k; ++i) {
        std::vector<long> row(k, 0);
        row[i] = comps[i].order;
        rel.push_back(std::move(row));
    }
    if (!with_infinity && m > 2) {
        const auto* d = g->dlog(m - 1);
        rel.push_back(*d);
    }
    auto diag = smith_diagonal(std::move(rel));
    std::vector<long> out;
    for (long d : diag)
        if (d != 1 && d != 0) out.push_back(d);
    return out;
}

}  // namespace rdlab
