#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdlab/abelian_field.hpp"

namespace rdlab {

// Bounds steering the search for all abelian fields with rd <= N.
// prime_bound and exponent_bounds are sound pruning data: no field below
// the bound is lost by honoring them (see ramified_prime_bound /
// exponent_bound). Tests re-run the search with inflated bounds to
// confirm that empirically.
struct EnumerationParams {
    mpq_class bound;  // N > 0
    std::optional<long> max_degree;
    long prime_bound = 1;
    std::map<long, long> exponent_bounds;
    unsigned long long ceiling = 100'000'000ull;  // search-space guard

    static EnumerationParams for_bound(const mpq_class& N,
                                       std::optional<long> max_degree = std::nullopt);
};

// floor(N^2): a prime p ramified in a Galois extension contributes at
// least 1/2 to v_p(log_p rd), so rd >= sqrt(p).
long ramified_prime_bound(const mpq_class& N);

// Largest conductor exponent a at p consistent with rd <= N under
// v_p(rd) >= a*(1 - 1/p) for a >= 2 (a/2 for p = 2, a >= 3), never below
// the tame value (1 for odd p, 2 for p = 2).
long exponent_bound(long p, const mpq_class& N);

struct ResourceCeilingExceeded : std::runtime_error {
    unsigned long long ceiling;
    unsigned long long estimate;
    ResourceCeilingExceeded(unsigned long long c, unsigned long long e)
        : std::runtime_error("enumeration search space " + std::to_string(e) +
                             " exceeds ceiling " + std::to_string(c)),
          ceiling(c),
          estimate(e) {}
};

// All abelian extensions of Q with rd <= params.bound (and degree <=
// max_degree when set), sorted by (degree, discriminant, canonical
// encoding). Parallel over candidate conductors; output is byte-stable
// across runs and thread counts.
std::vector<AbelianField> enumerate_abelian_fields(const EnumerationParams& params);

// Serial reference path, kept verbatim for tests and benchmarking.
std::vector<AbelianField> enumerate_abelian_fields_serial(const EnumerationParams& params);

// Every abelian field (no rd filter) whose conductor is at most C; the
// verification corpus. Sorted like the enumeration output.
std::vector<AbelianField> all_fields_with_conductor_leq(long C);

// Candidate conductors compatible with the bounds: divisors of
// prod p^exponent_bounds[p] whose squarefree kernel is at most
// prime_bound (rd >= sqrt(rad(conductor))).
std::vector<long> candidate_conductors(const EnumerationParams& params);

}  // namespace rdlab
