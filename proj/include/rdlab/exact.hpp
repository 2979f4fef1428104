#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace rdlab {

// Positive integer together with its prime factorization,
// primes strictly increasing, exponents >= 1.
struct Factorization {
    mpz_class value;
    std::vector<std::pair<mpz_class, unsigned long>> factors;
};

bool is_prime(const mpz_class& n);

// Deterministic trial division with a 2-3-5 wheel. Inputs here are
// desk-scale discriminants, so nothing fancier is needed.
Factorization factor(const mpz_class& n);

// Largest k with p^k | n. Rejects n < 1 and composite p.
unsigned long valuation(const mpz_class& n, const mpz_class& p);

// Exact representation of disc^(1/degree). Never compared through
// floating point; all decisions go through cross-power integer
// comparison below.
struct RootDiscriminant {
    mpz_class disc;
    unsigned long degree = 1;
};

enum class Ordering { less, equal, greater };

// Orders a.disc^(1/a.degree) against b.disc^(1/b.degree) by comparing
// a.disc^b.degree with b.disc^a.degree.
Ordering rd_compare(const RootDiscriminant& a, const RootDiscriminant& b);

// True iff disc^(1/degree) <= N, N a positive rational, decided exactly.
bool rd_leq_bound(const RootDiscriminant& a, const mpq_class& N);

struct ProductOrdering {
    bool leq = false;
    bool equal = false;
};

// Decides a1^(1/n1) * a2^(1/n2)  vs  b1^(1/m1) * b2^(1/m2) by raising
// both sides to the lcm of the four degrees.
ProductOrdering rd_product_compare(const RootDiscriminant& a1, const RootDiscriminant& a2,
                                   const RootDiscriminant& b1, const RootDiscriminant& b2);

bool rd_product_leq(const std::pair<RootDiscriminant, RootDiscriminant>& lhs,
                    const std::pair<RootDiscriminant, RootDiscriminant>& rhs);

// Parses "8", "8/3" or "2.5" into an exact rational. Throws
// std::invalid_argument on malformed input or value <= 0.
mpq_class parse_positive_rational(const std::string& s);

// Decimal approximation of disc^(1/degree) to 6 significant digits.
// Display only, never compared.
std::string rd_approx(const RootDiscriminant& a);

}  // namespace rdlab
