#pragma once

#include <gmpxx.h>

#include <vector>

namespace rdlab {

// Lower-numbering ramification filtration of a local Galois extension,
// stored as the chain of group orders [g_0, g_1, ..., 1]. Orders are
// nonincreasing, each divides its predecessor, and the list stops at the
// first trivial group (which is kept as the final entry).
class LowerFiltration {
public:
    explicit LowerFiltration(std::vector<long> orders);

    const std::vector<long>& orders() const { return orders_; }
    long order_at(long u) const;  // g_u, with g_u = 1 beyond the list
    long inertia_order() const { return orders_.front(); }
    bool tame() const { return order_at(1) == 1; }

    friend bool operator==(const LowerFiltration& a, const LowerFiltration& b) {
        return a.orders_ == b.orders_;
    }

private:
    std::vector<long> orders_;
};

// Upper-numbering jumps: |G^w| = order for w in (previous jump, v].
// Jump values strictly increase, orders strictly decrease and divide
// their predecessors; the group is trivial past the last jump. An empty
// jump list is the trivial (unramified) filtration.
class UpperJumps {
public:
    struct Jump {
        mpq_class v;
        long order;
    };

    UpperJumps() = default;
    explicit UpperJumps(std::vector<Jump> jumps);

    const std::vector<Jump>& jumps() const { return jumps_; }
    bool trivial() const { return jumps_.empty(); }

    friend bool operator==(const UpperJumps& a, const UpperJumps& b);

private:
    std::vector<Jump> jumps_;
};

// Hilbert's formula: valuation of the different, sum of (g_i - 1).
long different_valuation(const LowerFiltration& F);

// Discriminant valuation g * f * sum(|G_i| - 1).
long disc_valuation(const LowerFiltration& F, long f, long g);

// Herbrand function, phi(u) = (1/g_0) * sum_{i=0..u} g_i - 1, so that
// phi(0) = 0, phi is piecewise linear, nondecreasing and concave.
mpq_class herbrand_phi(const LowerFiltration& F, long u);

UpperJumps upper_from_lower(const LowerFiltration& F);

// Inverse of the Herbrand correspondence. Rejects jump lists whose
// implied lower filtration is not an integral divisibility chain.
LowerFiltration lower_from_upper(const UpperJumps& U);

// True iff every upper jump is an integer.
bool hasse_arf_check(const UpperJumps& U);

// Upper filtration of a local abelian extension from the multiset of
// p-conductor exponents of its decomposition-group dual:
// |G^v| = total / #(exponents <= v) at integer v, constant in between.
UpperJumps upper_groups_from_characters(const std::vector<long>& exponents);

// 0 when unramified, otherwise 1 + largest jump (Hasse-Arf makes this an
// integer for the filtrations produced above).
long conductor_exponent(const UpperJumps& U);

// Lower filtration of Q_p(zeta_{p^n}) / Q_p in closed form:
// g_0 = phi(p^n), and |G_u| = p^(n-k) for p^(k-1) <= u <= p^k - 1.
// Cross-checked internally against the cyclotomic discriminant exponent.
LowerFiltration cyclotomic_filtration(long p, long n);

// Structure check for totally ramified cyclic p-extensions: the subgroup
// of order p^(t-i) must appear as G_m for at least p^i indices m >= 1.
bool lemma_J_check(const LowerFiltration& F, long p);

}  // namespace rdlab
