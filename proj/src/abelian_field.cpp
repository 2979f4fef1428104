#include "rdlab/abelian_field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rdlab {

namespace {

std::vector<long> component_orders(const UnitGroupStructure& g) {
    std::vector<long> orders;
    for (const auto& c : g.components()) orders.push_back(c.order);
    return orders;
}

// View a character mod m through a smaller modulus f | m it factors
// through: read off exponents on the generators of (Z/f)*, lifted to
// units mod m.
std::vector<long> restrict_exps(const DirichletCharacter& chi, const UnitGroupStructure& target) {
    long m = chi.group->modulus();
    long f = target.modulus();
    std::vector<long> out;
    for (const auto& c : target.components()) {
        long lift = c.generator;
        while (std::gcd(lift, m) != 1) lift += f;
        auto v = char_eval(chi, lift);
        if (!v) throw std::logic_error("restrict_exps: lift not a unit");
        if (c.order % v->den != 0)
            throw std::logic_error("restrict_exps: character does not factor through target");
        out.push_back(v->num * (c.order / v->den) % c.order);
    }
    return out;
}

}  // namespace

AbelianField AbelianField::rationals() {
    auto g = unit_group(1);
    return AbelianField(1, g, {std::vector<long>{}});
}

AbelianField AbelianField::from_subgroup(long modulus, std::vector<std::vector<long>> elements) {
    auto g = unit_group(modulus);
    long f = 1;
    for (const auto& e : elements) f = std::lcm(f, conductor({g, e}));
    if (f != modulus) {
        auto tg = unit_group(f);
        std::vector<std::vector<long>> reduced;
        reduced.reserve(elements.size());
        for (const auto& e : elements) reduced.push_back(restrict_exps({g, e}, *tg));
        std::sort(reduced.begin(), reduced.end());
        return AbelianField(f, tg, std::move(reduced));
    }
    std::sort(elements.begin(), elements.end());
    return AbelianField(modulus, g, std::move(elements));
}

AbelianField AbelianField::from_generators(long modulus,
                                           const std::vector<std::vector<long>>& gens) {
    auto g = unit_group(modulus);
    auto orders = component_orders(*g);
    std::vector<std::vector<long>> reduced;
    for (const auto& v : gens) {
        if (v.size() != orders.size())
            throw std::invalid_argument("generator exponent vector has wrong length");
        std::vector<long> r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = ((v[i] % orders[i]) + orders[i]) % orders[i];
        reduced.push_back(std::move(r));
    }
    return from_subgroup(modulus, span_of(orders, reduced));
}

AbelianField AbelianField::from_characters(const std::vector<DirichletCharacter>& chars) {
    long L = 1;
    for (const auto& c : chars) L = std::lcm(L, c.group->modulus());
    auto g = unit_group(L);
    std::vector<std::vector<long>> gens;
    for (const auto& c : chars) gens.push_back(induce(c, g).exps);
    return from_generators(L, gens);
}

AbelianField AbelianField::cyclotomic(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic: m must be >= 1");
    auto g = unit_group(m);
    auto orders = component_orders(*g);
    std::vector<std::vector<long>> gens;
    for (size_t i = 0; i < orders.size(); ++i) {
        std::vector<long> v(orders.size(), 0);
        v[i] = 1;
        gens.push_back(std::move(v));
    }
    return from_generators(m, gens);
}

AbelianField AbelianField::quadratic(long D) {
    if (D == 0) throw std::invalid_argument("quadratic: D must be nonzero");
    long sign = D < 0 ? -1 : 1;
    long n = D < 0 ? -D : D;
    long kernel = 1;
    for (long p = 2; p * p <= n; ++p) {
        long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e & 1) kernel *= p;
    }
    kernel *= n;  // leftover prime
    long D0 = sign * kernel;
    if (D0 == 1) return rationals();
    long f = ((D0 % 4) + 4) % 4 == 1 ? kernel : 4 * kernel;
    auto g = unit_group(f);
    const auto& comps = g->components();
    // involution characters: exponent 0 or order/2 per component
    std::vector<size_t> even;
    for (size_t i = 0; i < comps.size(); ++i)
        if (comps[i].order % 2 == 0) even.push_back(i);
    int want_parity = D0 < 0 ? -1 : 1;
    for (unsigned long mask = 1; mask < (1ul << even.size()); ++mask) {
        std::vector<long> v(comps.size(), 0);
        for (size_t j = 0; j < even.size(); ++j)
            if (mask & (1ul << j)) v[even[j]] = comps[even[j]].order / 2;
        DirichletCharacter chi{g, v};
        if (conductor(chi) == f && char_parity(chi) == want_parity)
            return from_subgroup(f, {std::vector<long>(comps.size(), 0), v});
    }
    throw std::logic_error("quadratic: no character with the required conductor and parity");
}

std::vector<std::vector<long>> AbelianField::generator_matrix() const {
    return canonical_generators(component_orders(*group_), chars_);
}

std::string AbelianField::canonical_key() const {
    std::ostringstream os;
    os << modulus_;
    for (const auto& row : chars_) {
        os << ';';
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    }
    return os.str();
}

long field_degree(const AbelianField& F) { return static_cast<long>(F.chars().size()); }

mpz_class discriminant(const AbelianField& F) {
    mpz_class d = 1;
    for (size_t i = 0; i < F.chars().size(); ++i) d *= conductor(F.character(i));
    return d;
}

RootDiscriminant root_discriminant(const AbelianField& F) {
    return {discriminant(F), static_cast<unsigned long>(field_degree(F))};
}

long field_conductor(const AbelianField& F) { return F.modulus(); }

std::vector<long> ramified_primes(const AbelianField& F) {
    std::vector<long> out;
    long m = F.modulus();
    for (long p = 2; p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    return out;
}

std::pair<long, long> signature(const AbelianField& F) {
    long n = field_degree(F);
    for (size_t i = 0; i < F.chars().size(); ++i)
        if (char_parity(F.character(i)) == -1) return {0, n / 2};
    return {n, 0};
}

AbelianField compositum(const AbelianField& a, const AbelianField& b) {
    long L = std::lcm(a.modulus(), b.modulus());
    auto g = unit_group(L);
    std::vector<std::vector<long>> gens;
    for (size_t i = 0; i < a.chars().size(); ++i) gens.push_back(induce(a.character(i), g).exps);
    for (size_t i = 0; i < b.chars().size(); ++i) gens.push_back(induce(b.character(i), g).exps);
    return AbelianField::from_generators(L, gens);
}

AbelianField intersect(const AbelianField& a, const AbelianField& b) {
    long L = std::lcm(a.modulus(), b.modulus());
    auto g = unit_group(L);
    auto lift = [&](const AbelianField& F) {
        std::vector<std::vector<long>> out;
        for (size_t i = 0; i < F.chars().size(); ++i) out.push_back(induce(F.character(i), g).exps);
        std::sort(out.begin(), out.end());
        return out;
    };
    auto ea = lift(a);
    auto eb = lift(b);
    std::vector<std::vector<long>> common;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));
    return AbelianField::from_subgroup(L, std::move(common));
}

bool is_subfield(const AbelianField& a, const AbelianField& b) {
    if (b.modulus() % a.modulus() != 0) return false;
    for (size_t i = 0; i < a.chars().size(); ++i) {
        auto e = induce(a.character(i), b.group()).exps;
        if (!std::binary_search(b.chars().begin(), b.chars().end(), e)) return false;
    }
    return true;
}

LocalData local_data(const AbelianField& F, long p) {
    if (!is_prime(mpz_class(p))) throw std::invalid_argument("local_data: p must be prime");
    long m = F.modulus();
    const auto& comps = F.group()->components();
    std::vector<size_t> P;
    for (size_t i = 0; i < comps.size(); ++i)
        if (comps[i].prime == p) P.push_back(i);

    // characters unramified at p: trivial on the p-components
    std::vector<std::vector<long>> unram;
    for (const auto& e : F.chars()) {
        bool triv = true;
        for (size_t i : P)
            if (e[i] != 0) {
                triv = false;
                break;
            }
        if (triv) unram.push_back(e);
    }
    long n = field_degree(F);
    LocalData out;
    out.e = n / static_cast<long>(unram.size());

    long mprime = m;
    while (mprime % p == 0) mprime /= p;
    auto gq = unit_group(mprime);

    // Frobenius order: least k with chi(p^k) = 1 for every unramified chi
    std::vector<std::vector<long>> frob_trivial;  // kernel of evaluation at p
    long f = 1;
    for (const auto& e : unram) {
        DirichletCharacter down{gq, restrict_exps({F.group(), e}, *gq)};
        auto v = char_eval(down, p);
        if (!v) throw std::logic_error("local_data: p not a unit mod m'");
        f = std::lcm(f, v->den);
        if (v->num == 0) frob_trivial.push_back(e);
    }
    out.f = f;
    out.g = n / (out.e * out.f);

    // decomposition-group dual = chars / frob_trivial; one conductor
    // exponent per coset
    std::sort(frob_trivial.begin(), frob_trivial.end());
    auto orders = [&] {
        std::vector<long> o;
        for (const auto& c : comps) o.push_back(c.order);
        return o;
    }();
    std::vector<char> used(F.chars().size(), 0);
    const auto& all = F.chars();
    for (size_t i = 0; i < all.size(); ++i) {
        if (used[i]) continue;
        // mark the whole coset all[i] + frob_trivial
        for (const auto& t : frob_trivial) {
            std::vector<long> s(orders.size());
            for (size_t j = 0; j < orders.size(); ++j) s[j] = (all[i][j] + t[j]) % orders[j];
            auto it = std::lower_bound(all.begin(), all.end(), s);
            used[it - all.begin()] = 1;
        }
        out.conductor_exponents.push_back(conductor_exponent_at(F.character(i), p));
    }
    std::sort(out.conductor_exponents.begin(), out.conductor_exponents.end());
    return out;
}

}  // namespace rdlab
