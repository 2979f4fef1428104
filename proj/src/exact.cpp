#include "rdlab/exact.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace rdlab {

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Factorization factor(const mpz_class& n) {
    if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
    Factorization out;
    out.value = n;
    mpz_class m = n;
    auto strip = [&](mpz_class p) {  // by value: the final call aliases m
        unsigned long e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e > 0) out.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    strip(5);
    // wheel mod 30 starting at 7
    static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    mpz_class d = 7;
    int w = 0;
    while (d * d <= m) {
        strip(d);
        d += wheel[w];
        w = (w + 1) & 7;
    }
    if (m > 1) strip(m);
    return out;
}

unsigned long valuation(const mpz_class& n, const mpz_class& p) {
    if (n < 1) throw std::invalid_argument("valuation: n must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
    mpz_class m = n;
    unsigned long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

Ordering rd_compare(const RootDiscriminant& a, const RootDiscriminant& b) {
    mpz_class lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), a.disc.get_mpz_t(), b.degree);
    mpz_pow_ui(rhs.get_mpz_t(), b.disc.get_mpz_t(), a.degree);
    int c = cmp(lhs, rhs);
    if (c < 0) return Ordering::less;
    if (c > 0) return Ordering::greater;
    return Ordering::equal;
}

bool rd_leq_bound(const RootDiscriminant& a, const mpq_class& N) {
    if (N <= 0) throw std::invalid_argument("rd_leq_bound: bound must be positive");
    mpz_class num_pow, den_pow;
    mpz_pow_ui(num_pow.get_mpz_t(), N.get_num().get_mpz_t(), a.degree);
    mpz_pow_ui(den_pow.get_mpz_t(), N.get_den().get_mpz_t(), a.degree);
    return a.disc * den_pow <= num_pow;
}

ProductOrdering rd_product_compare(const RootDiscriminant& a1, const RootDiscriminant& a2,
                                   const RootDiscriminant& b1, const RootDiscriminant& b2) {
    unsigned long L = std::lcm(std::lcm(a1.degree, a2.degree), std::lcm(b1.degree, b2.degree));
    auto raised = [L](const RootDiscriminant& r) {
        mpz_class out;
        mpz_pow_ui(out.get_mpz_t(), r.disc.get_mpz_t(), L / r.degree);
        return out;
    };
    mpz_class lhs = raised(a1) * raised(a2);
    mpz_class rhs = raised(b1) * raised(b2);
    return ProductOrdering{lhs <= rhs, lhs == rhs};
}

bool rd_product_leq(const std::pair<RootDiscriminant, RootDiscriminant>& lhs,
                    const std::pair<RootDiscriminant, RootDiscriminant>& rhs) {
    return rd_product_compare(lhs.first, lhs.second, rhs.first, rhs.second).leq;
}

mpq_class parse_positive_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    mpq_class q;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed decimal: " + s);
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
        q = mpq_class(num, den);
    } else {
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("malformed rational: " + s);
    }
    q.canonicalize();
    if (q <= 0) throw std::invalid_argument("rational must be positive: " + s);
    return q;
}

std::string rd_approx(const RootDiscriminant& a) {
    // log via mpz -> double with exponent rescue for large discriminants
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, a.disc.get_mpz_t());
    double log_disc = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    double approx = std::exp(log_disc / static_cast<double>(a.degree));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", approx);
    return buf;
}

}  // namespace rdlab
