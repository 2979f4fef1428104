#pragma once

#include <gmpxx.h>

#include <vector>

#include "rdlab/abelian_field.hpp"

namespace rdlab {

// Per-prime comparison of two independently computed discriminant
// valuations in the tower K subset L over Q:
//   lhs = v_p(disc L) from the conductor product,
//   rhs = v_p(N_{K/Q} d_{L/K}) + [L:K] * v_p(disc K), with the relative
//         norm term rebuilt from local filtrations and transitivity of
//         the different.
struct TowerPrimeCheck {
    long p;
    long lhs;
    long rhs;
};

struct TowerReport {
    bool holds = true;
    std::vector<TowerPrimeCheck> per_prime;
};

TowerReport tower_check(const AbelianField& K, const AbelianField& L);

// rd(EF) * rd(E n F) <= rd(E) * rd(F), decided exactly. A false `holds`
// signals an implementation bug, not a counterexample to the inequality.
struct MultReport {
    bool holds = false;
    bool equality = false;
};

MultReport mult_lemma_check(const AbelianField& E, const AbelianField& F);

// v_p(disc E) <= n * (1 + v_p(e) - 1/e), compared exactly over the
// rationals.
struct OreReport {
    bool holds = false;
    long p = 0;
    long lhs = 0;
    mpq_class rhs;
};

OreReport ore_bound_check(const AbelianField& E, long p);

// Invariant factors (ascending divisibility, trivial factors dropped) of
// the ray class group of Q mod m: (Z/m)* with the infinite place,
// (Z/m)*/{+-1} without it.
std::vector<long> ray_class_group_Q(long m, bool with_infinity);

}  // namespace rdlab
