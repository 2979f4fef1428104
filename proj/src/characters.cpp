#include "rdlab/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace rdlab {

namespace {

long mod_norm(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long mul_mod(long a, long b, long m) {
    return static_cast<long>(static_cast<__int128>(a) * b % m);
}

long pow_mod(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

long egcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long x1, y1;
    long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

long inv_mod(long a, long m) {
    long x, y;
    long g = egcd(mod_norm(a, m), m, x, y);
    if (g != 1) throw std::logic_error("inv_mod: not invertible");
    return mod_norm(x, m);
}

std::vector<std::pair<long, long>> factor_small(long n) {
    std::vector<std::pair<long, long>> out;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            long e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long euler_phi_prime_power(long p, long a) {
    long pw = 1;
    for (long i = 1; i < a; ++i) pw *= p;
    return pw * (p - 1);
}

// Smallest primitive root mod p^a, p odd.
long smallest_primitive_root(long p, long a) {
    long q = 1;
    for (long i = 0; i < a; ++i) q *= p;
    long phi = euler_phi_prime_power(p, a);
    auto phi_factors = factor_small(phi);
    for (long g = 2; g < q; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (auto& [r, e] : phi_factors) {
            if (pow_mod(g, phi / r, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

// Residue mod M that is == r mod q and == 1 mod M/q, for q a prime power
// exactly dividing M.
long crt_lift(long r, long q, long M) {
    long rest = M / q;
    if (rest == 1) return mod_norm(r, M);
    // 1 + rest * t == r (mod q)
    long t = mul_mod(mod_norm(r - 1, q), inv_mod(rest % q, q), q);
    return mod_norm(1 + rest * t, M);
}

}  // namespace

UnitGroupStructure::UnitGroupStructure(long modulus) : modulus_(modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    phi_ = 1;
    for (auto& [p, a] : factor_small(modulus)) {
        long q = 1;
        for (long i = 0; i < a; ++i) q *= p;
        if (p == 2) {
            if (a == 1) continue;  // (Z/2)* trivial
            if (a == 2) {
                components_.push_back({2, 4, crt_lift(3, 4, modulus), 2});
                phi_ *= 2;
            } else {
                long half = q / 4;  // order of 5 mod 2^a
                components_.push_back({2, q, crt_lift(q - 1, q, modulus), 2});
                components_.push_back({2, q, crt_lift(5, q, modulus), half});
                phi_ *= 2 * half;
            }
        } else {
            long g = smallest_primitive_root(p, a);
            long ord = euler_phi_prime_power(p, a);
            components_.push_back({p, q, crt_lift(g, q, modulus), ord});
            phi_ *= ord;
        }
    }
    // discrete log table: walk all exponent tuples
    table_.assign(modulus_, {});
    size_t k = components_.size();
    std::vector<std::vector<long>> powers(k);
    for (size_t i = 0; i < k; ++i) {
        powers[i].resize(components_[i].order);
        long v = 1 % modulus_;
        for (long j = 0; j < components_[i].order; ++j) {
            powers[i][j] = v;
            v = mul_mod(v, components_[i].generator, modulus_);
        }
    }
    std::vector<long> expv(k, 0);
    for (;;) {
        long r = 1 % modulus_;
        for (size_t i = 0; i < k; ++i) r = mul_mod(r, powers[i][expv[i]], modulus_);
        table_[r] = expv;
        if (modulus_ == 1) break;
        table_[r].shrink_to_fit();
        size_t i = 0;
        while (i < k && ++expv[i] == components_[i].order) expv[i++] = 0;
        if (i == k) break;
    }
    if (modulus_ == 1) table_[0] = {};
}

const std::vector<long>* UnitGroupStructure::dlog(long a) const {
    if (modulus_ == 1) return &table_[0];
    long r = mod_norm(a, modulus_);
    if (std::gcd(r, modulus_) != 1) return nullptr;
    return &table_[r];
}

StructurePtr unit_group(long modulus) {
    static std::mutex mu;
    static std::map<long, StructurePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(modulus);
    if (it != cache.end()) return it->second;
    auto s = std::make_shared<const UnitGroupStructure>(modulus);
    cache[modulus] = s;
    return s;
}

RootOfUnity root_of_unity(long num, long den) {
    if (den < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
    num = mod_norm(num, den);
    long g = std::gcd(num, den);
    if (num == 0) return {0, 1};
    return {num / g, den / g};
}

RootOfUnity mul(const RootOfUnity& a, const RootOfUnity& b) {
    long den = std::lcm(a.den, b.den);
    return root_of_unity(a.num * (den / a.den) + b.num * (den / b.den), den);
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    return a.num == b.num && a.den == b.den;
}

DirichletCharacter principal_character(StructurePtr g) {
    size_t k = g->components().size();
    return {std::move(g), std::vector<long>(k, 0)};
}

bool is_principal(const DirichletCharacter& chi) {
    return std::all_of(chi.exps.begin(), chi.exps.end(), [](long x) { return x == 0; });
}

std::optional<RootOfUnity> char_eval(const DirichletCharacter& chi, long a) {
    const auto* d = chi.group->dlog(a);
    if (!d) return std::nullopt;
    RootOfUnity v{0, 1};
    const auto& comps = chi.group->components();
    for (size_t i = 0; i < comps.size(); ++i)
        v = mul(v, root_of_unity(chi.exps[i] * (*d)[i] % comps[i].order, comps[i].order));
    return v;
}

long conductor_exponent_at(const DirichletCharacter& chi, long p) {
    const auto& comps = chi.group->components();
    if (p == 2) {
        long x_minus1 = 0, ord_5 = 1;
        bool has4 = false, has_two_comps = false;
        for (size_t i = 0; i < comps.size(); ++i) {
            if (comps[i].prime != 2) continue;
            if (comps[i].prime_power == 4) {
                has4 = true;
                x_minus1 = chi.exps[i] % 2;
            } else if (comps[i].order == 2 && !has_two_comps) {
                has_two_comps = true;
                x_minus1 = chi.exps[i] % 2;
            } else {
                long d = comps[i].order;
                long x = chi.exps[i] % d;
                ord_5 = d / std::gcd(x, d);
            }
        }
        if (has4) return x_minus1 ? 2 : 0;
        if (!has_two_comps) return 0;
        if (ord_5 > 1) {
            long w = 0;
            while ((1L << w) < ord_5) ++w;
            return w + 2;
        }
        return x_minus1 ? 2 : 0;
    }
    for (size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].prime != p) continue;
        long d = comps[i].order;
        long x = chi.exps[i] % d;
        long ord = d / std::gcd(x, d);
        if (ord == 1) return 0;
        long s = 0;
        while (ord % p == 0) {
            ord /= p;
            ++s;
        }
        return s + 1;
    }
    return 0;
}

long conductor(const DirichletCharacter& chi) {
    long f = 1;
    const auto& comps = chi.group->components();
    long last_prime = 0;
    for (const auto& c : comps) {
        if (c.prime == last_prime) continue;
        last_prime = c.prime;
        long e = conductor_exponent_at(chi, c.prime);
        for (long i = 0; i < e; ++i) f *= c.prime;
    }
    return f;
}

long char_order(const DirichletCharacter& chi) {
    long ord = 1;
    const auto& comps = chi.group->components();
    for (size_t i = 0; i < comps.size(); ++i) {
        long d = comps[i].order;
        ord = std::lcm(ord, d / std::gcd(chi.exps[i] % d, d));
    }
    return ord;
}

int char_parity(const DirichletCharacter& chi) {
    long m = chi.group->modulus();
    if (m <= 2) return 1;
    auto v = char_eval(chi, m - 1);
    if (!v) throw std::logic_error("char_parity: -1 not a unit");
    if (v->num == 0) return 1;
    if (v->den == 2) return -1;
    throw std::logic_error("char_parity: value at -1 not +-1");
}

namespace {

long exponent_from_value(const RootOfUnity& v, long order) {
    if (order % v.den != 0)
        throw std::logic_error("character value order does not divide component order");
    return v.num * (order / v.den) % order;
}

}  // namespace

DirichletCharacter induce(const DirichletCharacter& chi, const StructurePtr& target) {
    long m = chi.group->modulus();
    long M = target->modulus();
    if (M % m != 0) throw std::invalid_argument("induce: target modulus not a multiple");
    DirichletCharacter out{target, {}};
    for (const auto& c : target->components()) {
        auto v = char_eval(chi, c.generator);
        if (!v) throw std::logic_error("induce: generator not a unit in source");
        out.exps.push_back(exponent_from_value(*v, c.order));
    }
    return out;
}

DirichletCharacter primitivize(const DirichletCharacter& chi) {
    long m = chi.group->modulus();
    long f = conductor(chi);
    if (f == m) return chi;
    auto target = unit_group(f);
    DirichletCharacter out{target, {}};
    for (const auto& c : target->components()) {
        long lift = c.generator;
        while (std::gcd(lift, m) != 1) lift += f;
        auto v = char_eval(chi, lift);
        if (!v) throw std::logic_error("primitivize: lift not a unit");
        out.exps.push_back(exponent_from_value(*v, c.order));
    }
    return out;
}

// ---------------------------------------------------------------------
// Subgroup enumeration

namespace {

using Bits = std::vector<uint64_t>;

struct BitsHash {
    size_t operator()(const Bits& b) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : b) {
            h ^= static_cast<size_t>(w);
            h *= 1099511628211ull;
        }
        return h;
    }
};

bool bit_test(const Bits& b, long i) { return (b[i >> 6] >> (i & 63)) & 1; }
void bit_set(Bits& b, long i) { b[i >> 6] |= uint64_t(1) << (i & 63); }

struct MixedRadix {
    std::vector<long> radices;
    long total = 1;

    long encode(const std::vector<long>& v) const {
        long idx = 0;
        for (size_t i = radices.size(); i-- > 0;) idx = idx * radices[i] + v[i];
        return idx;
    }
    std::vector<long> decode(long idx) const {
        std::vector<long> v(radices.size());
        for (size_t i = 0; i < radices.size(); ++i) {
            v[i] = idx % radices[i];
            idx /= radices[i];
        }
        return v;
    }
    long add(long a, long b) const {
        long idx = 0, mult = 1;
        for (size_t i = 0; i < radices.size(); ++i) {
            long r = radices[i];
            long s = (a % r + b % r) % r;
            idx += s * mult;
            mult *= r;
            a /= r;
            b /= r;
        }
        return idx;
    }
    long element_order(long a) const {
        long ord = 1;
        for (size_t i = 0; i < radices.size(); ++i) {
            long r = radices[i];
            long c = a % r;
            ord = std::lcm(ord, r / std::gcd(c, r));
            a /= r;
        }
        return ord;
    }
};

// All subgroups of the group described by rad, as element-index bitsets.
std::vector<Bits> subgroup_bitsets(const MixedRadix& rad) {
    long n = rad.total;
    size_t words = static_cast<size_t>((n + 63) / 64);
    Bits trivial(words, 0);
    bit_set(trivial, 0);
    std::vector<Bits> out{trivial};
    std::unordered_map<Bits, char, BitsHash> seen;
    seen.emplace(trivial, 1);
    std::queue<Bits> work;
    work.push(trivial);
    std::vector<long> members;
    while (!work.empty()) {
        Bits s = std::move(work.front());
        work.pop();
        members.clear();
        for (long i = 0; i < n; ++i)
            if (bit_test(s, i)) members.push_back(i);
        for (long g = 1; g < n; ++g) {
            if (bit_test(s, g)) continue;
            Bits t = s;
            long ord = rad.element_order(g);
            long shift = g;
            for (long j = 1; j < ord; ++j) {
                for (long m : members) bit_set(t, rad.add(m, shift));
                shift = rad.add(shift, g);
            }
            if (seen.emplace(t, 1).second) {
                out.push_back(t);
                work.push(t);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<long>> span_of(const std::vector<long>& orders,
                                       const std::vector<std::vector<long>>& gens) {
    MixedRadix rad{orders, 1};
    for (long d : orders) rad.total *= d;
    std::vector<char> in(rad.total, 0);
    std::vector<long> list{0};
    in[0] = 1;
    for (const auto& g : gens) {
        long gi = rad.encode(g);
        long ord = rad.element_order(gi);
        std::vector<long> base = list;
        long shift = gi;
        for (long j = 1; j < ord; ++j) {
            for (long m : base) {
                long x = rad.add(m, shift);
                if (!in[x]) {
                    in[x] = 1;
                    list.push_back(x);
                }
            }
            shift = rad.add(shift, gi);
        }
    }
    std::sort(list.begin(), list.end(), [&](long a, long b) {
        return rad.decode(a) < rad.decode(b);
    });
    std::vector<std::vector<long>> out;
    out.reserve(list.size());
    for (long i : list) out.push_back(rad.decode(i));
    return out;
}

std::vector<std::vector<long>> canonical_generators(const std::vector<long>& orders,
                                                    const std::vector<std::vector<long>>& elements) {
    std::vector<std::vector<long>> gens;
    std::vector<std::vector<long>> span{std::vector<long>(orders.size(), 0)};
    while (span.size() < elements.size()) {
        for (const auto& e : elements) {  // elements sorted lexicographically
            if (!std::binary_search(span.begin(), span.end(), e)) {
                gens.push_back(e);
                span = span_of(orders, gens);
                break;
            }
        }
    }
    return gens;
}

std::vector<Subgroup> subgroups(const std::vector<long>& orders) {
    long total = 1;
    for (long d : orders) {
        if (d < 1) throw std::invalid_argument("subgroups: orders must be positive");
        total *= d;
        if (total > 10'000'000) throw std::invalid_argument("subgroups: group too large");
    }
    size_t k = orders.size();
    // primary decomposition
    std::vector<long> primes;
    for (long d : orders)
        for (auto& [p, e] : factor_small(d))
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    std::sort(primes.begin(), primes.end());

    // per prime: subgroups as element lists in full coordinates
    std::vector<std::vector<std::vector<std::vector<long>>>> per_prime;
    for (long p : primes) {
        std::vector<long> q(k, 1);  // p-part of each order
        for (size_t i = 0; i < k; ++i) {
            long d = orders[i];
            while (d % p == 0) {
                q[i] *= p;
                d /= p;
            }
        }
        std::vector<size_t> active;
        MixedRadix rad;
        for (size_t i = 0; i < k; ++i)
            if (q[i] > 1) {
                active.push_back(i);
                rad.radices.push_back(q[i]);
                rad.total *= q[i];
            }
        auto bitsets = subgroup_bitsets(rad);
        std::vector<std::vector<std::vector<long>>> subs;
        subs.reserve(bitsets.size());
        for (const auto& bs : bitsets) {
            std::vector<std::vector<long>> elems;
            for (long i = 0; i < rad.total; ++i) {
                if (!bit_test(bs, i)) continue;
                auto local = rad.decode(i);
                std::vector<long> full(k, 0);
                for (size_t j = 0; j < active.size(); ++j) {
                    size_t idx = active[j];
                    // embed Z/q into Z/d via multiples of d/q
                    full[idx] = local[j] * (orders[idx] / q[idx]) % orders[idx];
                }
                elems.push_back(std::move(full));
            }
            subs.push_back(std::move(elems));
        }
        per_prime.push_back(std::move(subs));
    }

    // cartesian product over primes, summing element sets
    std::vector<Subgroup> out;
    std::vector<size_t> choice(per_prime.size(), 0);
    auto emit = [&]() {
        std::vector<std::vector<long>> elems{std::vector<long>(k, 0)};
        for (size_t pi = 0; pi < per_prime.size(); ++pi) {
            const auto& h = per_prime[pi][choice[pi]];
            if (h.size() == 1) continue;
            std::vector<std::vector<long>> next;
            next.reserve(elems.size() * h.size());
            for (const auto& a : elems)
                for (const auto& b : h) {
                    std::vector<long> s(k);
                    for (size_t i = 0; i < k; ++i) s[i] = (a[i] + b[i]) % orders[i];
                    next.push_back(std::move(s));
                }
            elems = std::move(next);
        }
        std::sort(elems.begin(), elems.end());
        Subgroup sg;
        sg.generators = canonical_generators(orders, elems);
        sg.elements = std::move(elems);
        out.push_back(std::move(sg));
    };
    if (per_prime.empty()) {
        emit();
        return out;
    }
    for (;;) {
        emit();
        size_t i = 0;
        while (i < choice.size() && ++choice[i] == per_prime[i].size()) choice[i++] = 0;
        if (i == choice.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

}  // namespace rdlab
