#pragma once

#include <memory>
#include <optional>
#include <vector>

namespace rdlab {

// One cyclic factor of (Z/M)*. For an odd prime power p^a the generator
// is the smallest primitive root lifted by CRT; for 2^a with a >= 3 the
// two factors come from -1 and 5; for 4 the single factor from -1.
struct UnitGroupComponent {
    long prime = 0;
    long prime_power = 1;  // p^a dividing the modulus
    long generator = 1;    // residue mod M, == 1 mod M/p^a
    long order = 1;
};

// Internal direct-product decomposition of (Z/M)* with a discrete-log
// table over all residues, so character evaluation is table lookup.
class UnitGroupStructure {
public:
    explicit UnitGroupStructure(long modulus);

    long modulus() const { return modulus_; }
    const std::vector<UnitGroupComponent>& components() const { return components_; }
    long phi() const { return phi_; }

    // Exponent vector of a residue against the generators, or nullptr
    // when gcd(a, M) > 1. a may be any integer.
    const std::vector<long>* dlog(long a) const;

private:
    long modulus_;
    long phi_;
    std::vector<UnitGroupComponent> components_;
    std::vector<std::vector<long>> table_;  // indexed by residue, empty = non-unit
};

using StructurePtr = std::shared_ptr<const UnitGroupStructure>;

// Shared, cached structure per modulus. Thread safe.
StructurePtr unit_group(long modulus);

// exp(2*pi*i*num/den), reduced, 0 <= num < den.
struct RootOfUnity {
    long num = 0;
    long den = 1;
};

RootOfUnity root_of_unity(long num, long den);
RootOfUnity mul(const RootOfUnity& a, const RootOfUnity& b);
bool operator==(const RootOfUnity& a, const RootOfUnity& b);

// A character is an exponent vector against the components of its
// ambient group: value at generator g_i is exp(2*pi*i*exps[i]/order_i).
struct DirichletCharacter {
    StructurePtr group;
    std::vector<long> exps;
};

DirichletCharacter principal_character(StructurePtr g);
bool is_principal(const DirichletCharacter& chi);

// nullopt encodes the value 0 (argument shares a factor with the modulus).
std::optional<RootOfUnity> char_eval(const DirichletCharacter& chi, long a);

// Smallest modulus f | M through which chi factors, computed per prime
// component.
long conductor(const DirichletCharacter& chi);

// p-exponent of the conductor.
long conductor_exponent_at(const DirichletCharacter& chi, long p);

long char_order(const DirichletCharacter& chi);
int char_parity(const DirichletCharacter& chi);  // value at -1: +1 or -1

// Same character viewed in a larger ambient group (modulus of target a
// multiple of the source modulus).
DirichletCharacter induce(const DirichletCharacter& chi, const StructurePtr& target);

// Same character viewed modulo its conductor.
DirichletCharacter primitivize(const DirichletCharacter& chi);

// A subgroup of Z/orders[0] x ... x Z/orders[k-1]; elements are exponent
// vectors sorted lexicographically, generators in canonical echelon-style
// form (greedy lexicographic minimal generating sequence).
struct Subgroup {
    std::vector<std::vector<long>> generators;
    std::vector<std::vector<long>> elements;
};

// Every subgroup exactly once, via primary decomposition and a
// subgroup-lattice closure per p-part.
std::vector<Subgroup> subgroups(const std::vector<long>& orders);

// Closure of a generating set under addition mod the component orders.
std::vector<std::vector<long>> span_of(const std::vector<long>& orders,
                                       const std::vector<std::vector<long>>& gens);

// Canonical generating sequence for a subgroup given as a sorted element
// list: repeatedly append the lexicographically smallest element outside
// the span so far.
std::vector<std::vector<long>> canonical_generators(const std::vector<long>& orders,
                                                    const std::vector<std::vector<long>>& elements);

}  // namespace rdlab
