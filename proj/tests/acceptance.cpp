// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "rdlab/enumerator.hpp"
#include "rdlab/fieldspec.hpp"
#include "rdlab/towers.hpp"
#include "rdlab/verify.hpp"

using namespace rdlab;
using Clock = std::chrono::steady_clock;

static int failures = 0;

static void report(int idx, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << idx << ": " << what << std::endl;
    if (!ok) ++failures;
}

static double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. cyclotomic discriminants vs the closed form p^(p^(n-1)(np-n-1))
static void criterion1() {
    auto t0 = Clock::now();
    bool ok = true;
    long count = 0;
    for (long p : {2L, 3L, 5L, 7L}) {
        long q = p;
        for (long n = 1; q <= 250; ++n, q *= p) {
            if (q < 3) continue;
            mpz_class got = discriminant(AbelianField::cyclotomic(q));
            long pn1 = 1;
            for (long i = 0; i < n - 1; ++i) pn1 *= p;
            long exp = pn1 * (n * p - n - 1);
            mpz_class want;
            mpz_ui_pow_ui(want.get_mpz_t(), p, exp);
            ok = ok && got == want;
            ++count;
        }
    }
    std::ostringstream os;
    os << "cyclotomic discriminants, " << count << " prime powers <= 250 ("
       << since(t0) << " s)";
    report(1, ok && since(t0) < 1.0 && count >= 12, os.str());
}

int main() {
    criterion1();

    auto corpus = all_fields_with_conductor_leq(60);

    {  // 2. discriminant valuation two ways
        auto t0 = Clock::now();
        auto r = verify_disc_valuations(corpus);
        std::ostringstream os;
        os << "dual-path discriminant valuations, " << r.checks << " (field, prime) pairs ("
           << since(t0) << " s)";
        report(2, r.pass() && since(t0) < 10.0, os.str());
    }

    {  // 3. tower formula on nested pairs
        auto t0 = Clock::now();
        auto r = verify_tower(corpus);
        std::ostringstream os;
        os << "tower discriminant formula, " << r.checks << " nested pairs (" << since(t0)
           << " s)";
        report(3, r.pass() && r.checks > 500 && since(t0) < 30.0, os.str());
    }

    {  // 4. compositum rd inequality
        auto t0 = Clock::now();
        bool ok = true;
        long pairs = 0, equalities = 0;
        std::vector<AbelianField> quads;
        for (long D = -100; D <= 100; ++D) {
            if (D == 0) continue;
            auto F = AbelianField::quadratic(D);
            if (field_degree(F) == 2 && discriminant(F) <= 100) quads.push_back(F);
        }
        for (const auto& E : quads)
            for (const auto& F : quads) {
                auto r = mult_lemma_check(E, F);
                ok = ok && r.holds;
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), discriminant(E).get_mpz_t(),
                        discriminant(F).get_mpz_t());
                if (g == 1) {
                    ok = ok && r.equality;
                    ++equalities;
                }
                ++pairs;
            }
        auto rc = verify_mult(corpus, 200);
        ok = ok && rc.pass() && rc.checks == 200;
        std::ostringstream os;
        os << "rd multiplicativity bound, " << pairs << " quadratic pairs (" << equalities
           << " coprime equalities) + 200 random corpus pairs (" << since(t0) << " s)";
        report(4, ok && since(t0) < 30.0, os.str());
    }

    {  // 5. the discriminant-exponent upper bound at every ramified prime
        auto t0 = Clock::now();
        auto r = verify_ore(corpus);
        std::ostringstream os;
        os << "discriminant exponent bound n(1 + v_p(e) - 1/e), " << r.checks << " checks ("
           << since(t0) << " s)";
        report(5, r.pass() && since(t0) < 10.0, os.str());
    }

    {  // 6. integral upper jumps; [4,2,1] rejected
        auto t0 = Clock::now();
        auto r = verify_hasse_arf(corpus);
        auto bad = upper_from_lower(LowerFiltration({4, 2, 1}));
        bool reject = !hasse_arf_check(bad) && bad.jumps().back().v == mpq_class(1, 2);
        std::ostringstream os;
        os << "integral upper jumps on " << r.checks
           << " filtrations; [4,2,1] rejected with jump 1/2 (" << since(t0) << " s)";
        report(6, r.pass() && reject && since(t0) < 5.0, os.str());
    }

    {  // 7. cyclic p-extension filtration structure
        auto t0 = Clock::now();
        auto r = verify_lemma_j(125);
        bool counterexample = !lemma_J_check(LowerFiltration({9, 9, 3, 1}), 3);
        std::ostringstream os;
        os << "filtration structure of " << r.checks
           << " cyclic subextensions (p^n <= 125); [9,9,3,1] rejected (" << since(t0) << " s)";
        report(7, r.pass() && counterexample && since(t0) < 5.0, os.str());
    }

    {  // 8. bounded enumeration
        auto t0 = Clock::now();
        bool ok = true;
        auto one = enumerate_abelian_fields(EnumerationParams::for_bound(mpq_class(1)));
        ok = ok && one.size() == 1 && one[0] == AbelianField::rationals();
        auto two = enumerate_abelian_fields(EnumerationParams::for_bound(mpq_class(2)));
        ok = ok && two.size() == 3 && two[1] == AbelianField::quadratic(-3) &&
             two[2] == AbelianField::quadratic(-1);
        auto three = enumerate_abelian_fields(EnumerationParams::for_bound(mpq_class(3)));
        ok = ok && three.size() == 7;
        for (long D : {-3L, -1L, 5L, -7L, 2L, -2L}) {
            auto F = AbelianField::quadratic(D);
            bool found = false;
            for (const auto& G : three) found = found || F == G;
            ok = ok && found;
        }
        // oracle with inflated bounds at N <= 4
        for (const char* b : {"2", "3", "4"}) {
            auto params = EnumerationParams::for_bound(parse_positive_rational(b));
            auto fields = enumerate_abelian_fields(params);
            auto inflated = params;
            for (auto& [p, e] : inflated.exponent_bounds) e += 2;
            inflated.ceiling = 1'000'000'000ull;
            auto oracle = enumerate_abelian_fields_serial(inflated);
            ok = ok && fields.size() == oracle.size();
            for (size_t i = 0; ok && i < fields.size(); ++i) ok = fields[i] == oracle[i];
        }
        // N = 6: recomputation + determinism
        auto t6 = Clock::now();
        auto p6 = EnumerationParams::for_bound(mpq_class(6));
        auto run1 = enumerate_abelian_fields(p6);
        double dt6 = since(t6);
        auto run2 = enumerate_abelian_fields(p6);
        ok = ok && run1.size() == run2.size();
        for (size_t i = 0; ok && i < run1.size(); ++i) {
            ok = run1[i] == run2[i];
            ok = ok && rd_leq_bound(root_discriminant(run1[i]), mpq_class(6));
            ok = ok && field_conductor(run1[i]) == run1[i].modulus();
        }
        std::ostringstream os;
        os << "enumeration: exact lists at N=1,2,3; oracle match at N<=4; N=6 gives "
           << run1.size() << " fields in " << dt6 << " s, identical across runs ("
           << since(t0) << " s total)";
        report(8, ok && dt6 < 60.0, os.str());
    }

    {  // 9. round-trips and byte stability
        auto t0 = Clock::now();
        bool ok = true;
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> nseg(0, 4), len(1, 5), mult(2, 4);
        for (int iter = 0; iter < 1000; ++iter) {
            std::vector<long> rev{1};
            long cur = 1;
            int segs = nseg(rng);
            for (int s = 0; s < segs; ++s) {
                cur *= mult(rng);
                for (int i = 0, l = len(rng); i < l; ++i) rev.push_back(cur);
            }
            LowerFiltration f(std::vector<long>(rev.rbegin(), rev.rend()));
            ok = ok && lower_from_upper(upper_from_lower(f)) == f;
        }
        auto capture = [](const std::string& args) {
            std::string cmd = std::string(RDLAB_CLI_PATH) + " " + args + " 2>/dev/null";
            FILE* p = popen(cmd.c_str(), "r");
            std::string out;
            char buf[4096];
            size_t n;
            while (p && (n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
            if (p) pclose(p);
            return out;
        };
        std::string a = capture("enumerate --bound 3");
        std::string b = capture("enumerate --bound 3");
        std::ifstream gf(std::string(RDLAB_GOLDEN_DIR) + "/enumerate_3.jsonl",
                         std::ios::binary);
        std::ostringstream gs;
        gs << gf.rdbuf();
        ok = ok && !a.empty() && a == b && a == gs.str();
        std::ostringstream os;
        os << "1000 filtration round-trips; enumeration JSON byte-stable vs golden ("
           << since(t0) << " s)";
        report(9, ok, os.str());
    }

    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 9 criteria passed" << std::endl;
    return 0;
}
