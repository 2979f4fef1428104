#include "rdlab/ramification.hpp"

#include <algorithm>
#include <stdexcept>

namespace rdlab {

LowerFiltration::LowerFiltration(std::vector<long> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("filtration: empty order list");
    for (size_t i = 0; i < orders_.size(); ++i) {
        if (orders_[i] < 1) throw std::invalid_argument("filtration: orders must be positive");
        if (i > 0 && orders_[i - 1] % orders_[i] != 0)
            throw std::invalid_argument("filtration: orders must form a divisibility chain");
    }
    if (orders_.back() != 1) throw std::invalid_argument("filtration: must end at the trivial group");
    // stop at the first trivial group
    auto it = std::find(orders_.begin(), orders_.end(), 1L);
    orders_.erase(it + 1, orders_.end());
}

long LowerFiltration::order_at(long u) const {
    if (u < 0) throw std::invalid_argument("order_at: index must be >= 0");
    if (static_cast<size_t>(u) >= orders_.size()) return 1;
    return orders_[u];
}

UpperJumps::UpperJumps(std::vector<Jump> jumps) : jumps_(std::move(jumps)) {
    for (size_t i = 0; i < jumps_.size(); ++i) {
        if (jumps_[i].v < 0) throw std::invalid_argument("upper jumps: values must be >= 0");
        if (jumps_[i].order < 2) throw std::invalid_argument("upper jumps: orders must exceed 1");
        if (i > 0) {
            if (jumps_[i].v <= jumps_[i - 1].v)
                throw std::invalid_argument("upper jumps: values must strictly increase");
            if (jumps_[i].order >= jumps_[i - 1].order ||
                jumps_[i - 1].order % jumps_[i].order != 0)
                throw std::invalid_argument("upper jumps: orders must strictly divide down");
        }
    }
}

bool operator==(const UpperJumps& a, const UpperJumps& b) {
    if (a.jumps_.size() != b.jumps_.size()) return false;
    for (size_t i = 0; i < a.jumps_.size(); ++i)
        if (a.jumps_[i].v != b.jumps_[i].v || a.jumps_[i].order != b.jumps_[i].order) return false;
    return true;
}

long different_valuation(const LowerFiltration& F) {
    long s = 0;
    for (long g : F.orders()) s += g - 1;
    return s;
}

long disc_valuation(const LowerFiltration& F, long f, long g) {
    if (f < 1 || g < 1) throw std::invalid_argument("disc_valuation: f, g must be >= 1");
    return g * f * different_valuation(F);
}

mpq_class herbrand_phi(const LowerFiltration& F, long u) {
    if (u < 0) throw std::invalid_argument("herbrand_phi: u must be >= 0");
    long sum = 0;
    for (long i = 0; i <= u; ++i) sum += F.order_at(i);
    mpq_class phi(sum, F.inertia_order());
    phi.canonicalize();
    return phi - 1;
}

UpperJumps upper_from_lower(const LowerFiltration& F) {
    std::vector<UpperJumps::Jump> jumps;
    long len = static_cast<long>(F.orders().size());
    for (long u = 0; u < len; ++u)
        if (F.order_at(u) > F.order_at(u + 1) && F.order_at(u) > 1)
            jumps.push_back({herbrand_phi(F, u), F.order_at(u)});
    return UpperJumps(std::move(jumps));
}

LowerFiltration lower_from_upper(const UpperJumps& U) {
    if (U.trivial()) return LowerFiltration({1});
    const auto& js = U.jumps();
    long g0 = js[0].order;
    std::vector<long> orders;
    // phi is the identity up to the first jump
    mpq_class u1 = js[0].v;
    if (u1.get_den() != 1)
        throw std::invalid_argument("lower_from_upper: first jump must be integral");
    long prev_u = u1.get_num().get_si();
    for (long i = 0; i <= prev_u; ++i) orders.push_back(g0);
    for (size_t j = 1; j < js.size(); ++j) {
        mpq_class delta = (js[j].v - js[j - 1].v) * g0 / js[j].order;
        delta.canonicalize();
        if (delta.get_den() != 1 || delta <= 0)
            throw std::invalid_argument("lower_from_upper: jumps imply a non-integral filtration");
        long d = delta.get_num().get_si();
        for (long i = 0; i < d; ++i) orders.push_back(js[j].order);
        prev_u += d;
    }
    orders.push_back(1);
    return LowerFiltration(std::move(orders));
}

bool hasse_arf_check(const UpperJumps& U) {
    for (const auto& j : U.jumps())
        if (j.v.get_den() != 1) return false;
    return true;
}

UpperJumps upper_groups_from_characters(const std::vector<long>& exponents) {
    if (exponents.empty())
        throw std::invalid_argument("upper_groups_from_characters: empty exponent multiset");
    long n = static_cast<long>(exponents.size());
    long maxe = 0;
    bool has_zero = false;
    for (long e : exponents) {
        if (e < 0) throw std::invalid_argument("upper_groups_from_characters: negative exponent");
        if (e == 0) has_zero = true;
        maxe = std::max(maxe, e);
    }
    if (!has_zero)
        throw std::invalid_argument("upper_groups_from_characters: principal exponent 0 missing");
    auto order_at = [&](long v) {
        if (v >= maxe) return 1L;
        long cnt = 0;
        for (long e : exponents)
            if (e <= v) ++cnt;
        if (n % cnt != 0)
            throw std::logic_error("upper_groups_from_characters: counts do not divide the total");
        return n / cnt;
    };
    std::vector<UpperJumps::Jump> jumps;
    for (long v = 0; v <= maxe; ++v) {
        long o = order_at(v);
        if (o > 1 && o > order_at(v + 1)) jumps.push_back({mpq_class(v), o});
    }
    return UpperJumps(std::move(jumps));
}

long conductor_exponent(const UpperJumps& U) {
    if (U.trivial()) return 0;
    const mpq_class& last = U.jumps().back().v;
    if (last.get_den() != 1)
        throw std::domain_error("conductor_exponent: non-integral final jump");
    return last.get_num().get_si() + 1;
}

LowerFiltration cyclotomic_filtration(long p, long n) {
    if (p < 2 || n < 1) throw std::invalid_argument("cyclotomic_filtration: bad arguments");
    long q = 1;
    for (long i = 0; i < n; ++i) q *= p;
    if (q < 3) throw std::invalid_argument("cyclotomic_filtration: p^n must be >= 3");
    long pn1 = q / p;  // p^(n-1)
    std::vector<long> orders;
    orders.push_back(pn1 * (p - 1));
    for (long u = 1; u < pn1; ++u) {
        long k = 0, pk = 1;
        while (pk - 1 < u) {
            pk *= p;
            ++k;
        }
        long g = 1;
        for (long i = 0; i < n - k; ++i) g *= p;
        orders.push_back(g);
    }
    orders.push_back(1);
    LowerFiltration F(std::move(orders));
    // closed form for the discriminant exponent of the p^n-th cyclotomic field
    long expected = pn1 * (n * p - n - 1);
    if (different_valuation(F) != expected)
        throw std::logic_error("cyclotomic_filtration: different valuation mismatch");
    return F;
}

bool lemma_J_check(const LowerFiltration& F, long p) {
    if (p < 2) throw std::invalid_argument("lemma_J_check: bad prime");
    long t = 0, g0 = F.inertia_order();
    long g = g0;
    while (g % p == 0) {
        g /= p;
        ++t;
    }
    if (g != 1) throw std::invalid_argument("lemma_J_check: g_0 is not a power of p");
    for (long gi : F.orders()) {
        long x = gi;
        while (x % p == 0) x /= p;
        if (x != 1) throw std::invalid_argument("lemma_J_check: orders must be powers of p");
    }
    long len = static_cast<long>(F.orders().size());
    long required = 1;  // p^i
    long target = g0;   // p^(t-i)
    for (long i = 0; i < t; ++i) {
        long count = 0;
        for (long m = 1; m < len; ++m)
            if (F.order_at(m) == target) ++count;
        if (count < required) return false;
        required *= p;
        target /= p;
    }
    return true;  // the trivial subgroup appears unboundedly
}

}  // namespace rdlab
