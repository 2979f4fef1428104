#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdlab/enumerator.hpp"
#include "rdlab/fieldspec.hpp"
#include "rdlab/ramification.hpp"
#include "rdlab/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

json field_report(const rdlab::AbelianField& F) {
    json j;
    j["spec"] = rdlab::canonical_spec(F);
    j["degree"] = rdlab::field_degree(F);
    mpz_class d = rdlab::discriminant(F);
    json factors = json::array();
    for (const auto& [p, e] : rdlab::factor(d).factors)
        factors.push_back({p.get_str(), e});
    j["disc"] = {{"value", d.get_str()}, {"factors", factors}};
    j["conductor"] = rdlab::field_conductor(F);
    j["ramified"] = rdlab::ramified_primes(F);
    auto [r1, r2] = rdlab::signature(F);
    j["signature"] = {r1, r2};
    auto rd = rdlab::root_discriminant(F);
    j["rd"] = {{"disc", rd.disc.get_str()},
               {"degree", rd.degree},
               {"approx", rdlab::rd_approx(rd)}};
    return j;
}

void field_tsv_header() {
    std::cout << "spec\tdegree\tdisc\tconductor\trd_num_disc\trd_degree\trd_approx\n";
}

void field_tsv_row(const rdlab::AbelianField& F) {
    auto rd = rdlab::root_discriminant(F);
    std::cout << rdlab::canonical_spec(F) << '\t' << rdlab::field_degree(F) << '\t'
              << rdlab::discriminant(F).get_str() << '\t' << rdlab::field_conductor(F) << '\t'
              << rd.disc.get_str() << '\t' << rd.degree << '\t' << rdlab::rd_approx(rd) << '\n';
}

int run_rd(const std::string& spec, bool tsv) {
    auto F = rdlab::parse_field_spec(spec);
    if (tsv) {
        field_tsv_header();
        field_tsv_row(F);
    } else {
        std::cout << field_report(F).dump(2) << '\n';
    }
    return 0;
}

int run_enumerate(const std::string& bound, std::optional<long> max_degree, bool tsv) {
    auto N = rdlab::parse_positive_rational(bound);
    auto params = rdlab::EnumerationParams::for_bound(N, max_degree);
    if (const char* env = std::getenv("RDLAB_CEILING"))
        params.ceiling = std::stoull(env);
    auto fields = rdlab::enumerate_abelian_fields(params);
    if (tsv) {
        field_tsv_header();
        for (const auto& F : fields) field_tsv_row(F);
        std::cerr << "enumerated " << fields.size() << " fields with rd <= " << bound << "\n";
    } else {
        for (const auto& F : fields) std::cout << field_report(F).dump() << '\n';
        std::cout << json{{"count", fields.size()}}.dump() << '\n';
    }
    return 0;
}

int run_filtration(long p, long n) {
    if (n < 1 || !rdlab::is_prime(mpz_class(p))) {
        std::cerr << "filtration: p must be prime and n >= 1\n";
        return 2;
    }
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, n);
    if (q < 3 || q > 1'000'000) {
        std::cerr << "filtration: need 3 <= p^n <= 10^6\n";
        return 2;
    }
    auto F = rdlab::cyclotomic_filtration(p, n);
    auto U = rdlab::upper_from_lower(F);
    json j;
    j["p"] = p;
    j["n"] = n;
    j["lower"] = F.orders();
    json jumps = json::array();
    for (const auto& jp : U.jumps())
        jumps.push_back({jp.v.get_str(), jp.order});
    j["upper_jumps"] = jumps;
    j["tame"] = F.tame();
    j["conductor_exponent"] = rdlab::conductor_exponent(U);
    j["different_valuation"] = rdlab::different_valuation(F);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_verify(const std::string& suite, long climit) {
    std::vector<rdlab::SuiteResult> results;
    std::vector<rdlab::AbelianField> corpus;
    bool all = suite == "all";
    if (all || suite == "mult" || suite == "ore" || suite == "tower" || suite == "hasse-arf" ||
        suite == "disc-valuation")
        corpus = rdlab::all_fields_with_conductor_leq(climit);
    if (all || suite == "disc-valuation") results.push_back(rdlab::verify_disc_valuations(corpus));
    if (all || suite == "tower") results.push_back(rdlab::verify_tower(corpus));
    if (all || suite == "mult") results.push_back(rdlab::verify_mult(corpus));
    if (all || suite == "ore") results.push_back(rdlab::verify_ore(corpus));
    if (all || suite == "hasse-arf") results.push_back(rdlab::verify_hasse_arf(corpus));
    if (all || suite == "lemma-j") results.push_back(rdlab::verify_lemma_j());
    if (all || suite == "ray-class")
        results.push_back(rdlab::verify_ray_class(std::min(climit, 200L)));
    bool ok = true;
    for (const auto& r : results) {
        std::cout << "[suite " << r.name << "] " << r.statement << '\n';
        std::cout << "  checks: " << r.checks << '\n';
        for (const auto& f : r.failures) std::cout << "  FAIL: " << f << '\n';
        std::cout << "  " << (r.pass() ? "PASS" : "FAIL") << '\n';
        ok = ok && r.pass();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for abelian extensions of Q"};
    app.require_subcommand(1);

    std::string spec, bound = "2", suite = "all";
    bool tsv_rd = false, json_rd = false, tsv_en = false, json_en = false;
    long max_degree = 0, fp = 3, fn = 1, climit = 60;

    auto* rd = app.add_subcommand("rd", "invariants of one field");
    rd->add_option("spec", spec, "Q | quad:D | zeta:m | chars:mod=M;gens=...")->required();
    rd->add_flag("--tsv", tsv_rd);
    rd->add_flag("--json", json_rd);

    auto* en = app.add_subcommand("enumerate", "all abelian fields with rd <= N");
    en->add_option("--bound", bound, "N as decimal or fraction")->required();
    en->add_option("--max-degree", max_degree, "restrict to degree <= this");
    en->add_flag("--tsv", tsv_en);
    en->add_flag("--json", json_en);

    auto* fl = app.add_subcommand("filtration", "ramification filtration of Q_p(zeta_{p^n})/Q_p");
    fl->add_option("--p", fp)->required();
    fl->add_option("--n", fn)->required();
    fl->add_flag("--json", json_rd);

    auto* vf = app.add_subcommand("verify", "property suites over a conductor-bounded corpus");
    vf->add_option("--suite", suite,
                   "mult|ore|tower|hasse-arf|lemma-j|ray-class|disc-valuation|all");
    vf->add_option("--conductor-limit", climit)->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (rd->parsed()) return run_rd(spec, tsv_rd);
        if (en->parsed())
            return run_enumerate(bound,
                                 max_degree > 0 ? std::optional<long>(max_degree) : std::nullopt,
                                 tsv_en);
        if (fl->parsed()) return run_filtration(fp, fn);
        if (vf->parsed()) return run_verify(suite, climit);
    } catch (const rdlab::SpecParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const rdlab::SpecUnsupported& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return 3;
    } catch (const rdlab::ResourceCeilingExceeded& e) {
        std::cerr << "resource ceiling: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
