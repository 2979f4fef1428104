#pragma once

#include <string>
#include <vector>

#include "rdlab/abelian_field.hpp"
#include "rdlab/ramification.hpp"

namespace rdlab {

struct SuiteResult {
    std::string name;
    std::string statement;  // the identity or bound being exercised
    long checks = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
};

// Discriminant valuations two ways: conductor product vs
// g*f*sum(|G_i|-1) from the character-derived filtration, at every
// ramified prime of every corpus field.
SuiteResult verify_disc_valuations(const std::vector<AbelianField>& corpus);

// Tower discriminant formula on every nested pair in the corpus.
SuiteResult verify_tower(const std::vector<AbelianField>& corpus);

// Compositum root-discriminant inequality on corpus pairs (all pairs up
// to a cap, then a seeded random sample).
SuiteResult verify_mult(const std::vector<AbelianField>& corpus, size_t max_pairs = 5000);

// Ore's bound at every ramified prime of every corpus field.
SuiteResult verify_ore(const std::vector<AbelianField>& corpus);

// Integrality of upper jumps for every character-derived filtration.
SuiteResult verify_hasse_arf(const std::vector<AbelianField>& corpus);

// Filtration structure of the wild part of every cyclic subextension of
// Q_p(zeta_{p^n}) for p in {2,3,5}, p^n <= max_prime_power.
SuiteResult verify_lemma_j(long max_prime_power = 125);

// Ray class group orders over Q for all moduli up to the limit.
SuiteResult verify_ray_class(long modulus_limit);

// Lower filtration of the degree-[index] quotient extension cut out of
// Q_p(zeta_{p^n})/Q_p by the subgroup H of (Z/p^n)* (H given as a set of
// residues). Computed through upper-numbering quotients.
LowerFiltration cyclotomic_quotient_filtration(long p, long n, const std::vector<long>& H);

// Filtration of the wild inertia subextension: [g_1, g_1, g_2, ..., 1].
LowerFiltration wild_part(const LowerFiltration& F);

}  // namespace rdlab
