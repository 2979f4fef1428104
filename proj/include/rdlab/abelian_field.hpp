#pragma once

#include <string>
#include <vector>

#include "rdlab/characters.hpp"
#include "rdlab/exact.hpp"

namespace rdlab {

// A finite abelian extension of Q, represented by its group of Dirichlet
// characters at the field's conductor (Kronecker-Weber). The character
// list is the full subgroup, sorted, so field equality is syntactic
// equality of (modulus, chars). No polynomial arithmetic anywhere.
class AbelianField {
public:
    static AbelianField rationals();

    // Closure of the given exponent vectors mod `modulus`, then conductor
    // reduction. Vectors are against the components of unit_group(modulus).
    static AbelianField from_generators(long modulus,
                                        const std::vector<std::vector<long>>& gens);

    static AbelianField from_characters(const std::vector<DirichletCharacter>& chars);

    // Full dual group mod m: the cyclotomic field Q(zeta_m).
    static AbelianField cyclotomic(long m);

    // Q(sqrt(D)), D a nonzero integer (squarefree kernel taken).
    static AbelianField quadratic(long D);

    // Internal: subgroup already known closed; still canonicalized.
    static AbelianField from_subgroup(long modulus, std::vector<std::vector<long>> elements);

    long modulus() const { return modulus_; }  // equals the field conductor
    const StructurePtr& group() const { return group_; }
    const std::vector<std::vector<long>>& chars() const { return chars_; }

    DirichletCharacter character(size_t i) const { return {group_, chars_[i]}; }

    std::vector<std::vector<long>> generator_matrix() const;

    // Stable total order / equality key: modulus then sorted exponent rows.
    std::string canonical_key() const;

    friend bool operator==(const AbelianField& a, const AbelianField& b) {
        return a.modulus_ == b.modulus_ && a.chars_ == b.chars_;
    }

private:
    AbelianField(long modulus, StructurePtr group, std::vector<std::vector<long>> chars)
        : modulus_(modulus), group_(std::move(group)), chars_(std::move(chars)) {}

    long modulus_;
    StructurePtr group_;
    std::vector<std::vector<long>> chars_;  // sorted, full subgroup
};

long field_degree(const AbelianField& F);
mpz_class discriminant(const AbelianField& F);
RootDiscriminant root_discriminant(const AbelianField& F);
long field_conductor(const AbelianField& F);
std::vector<long> ramified_primes(const AbelianField& F);
std::pair<long, long> signature(const AbelianField& F);  // (r1, r2)

AbelianField compositum(const AbelianField& a, const AbelianField& b);
AbelianField intersect(const AbelianField& a, const AbelianField& b);
bool is_subfield(const AbelianField& a, const AbelianField& b);  // a subfield of b?

// Decomposition data at a rational prime p:
//   e            ramification index (inertia image order)
//   f            residue degree (Frobenius order)
//   g            number of primes above p, with e*f*g = degree
//   conductor_exponents
//                multiset (sorted) of v_p(conductor) over the e*f
//                characters of the decomposition-group dual
struct LocalData {
    long e = 1;
    long f = 1;
    long g = 1;
    std::vector<long> conductor_exponents;
};

LocalData local_data(const AbelianField& F, long p);

}  // namespace rdlab
