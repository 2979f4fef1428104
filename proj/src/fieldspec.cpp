#include "rdlab/fieldspec.hpp"

#include <sstream>

namespace rdlab {

namespace {

constexpr long kModulusLimit = 1'000'000;  // dlog tables are O(M)

long parse_long(const std::string& s, size_t pos_offset, bool allow_negative) {
    if (s.empty()) throw SpecParseError("expected an integer", pos_offset);
    size_t i = 0;
    if (allow_negative && s[0] == '-') i = 1;
    if (i == s.size()) throw SpecParseError("expected digits", pos_offset + i);
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw SpecParseError("unexpected character '" + std::string(1, s[j]) + "'",
                                 pos_offset + j);
    try {
        return std::stol(s);
    } catch (const std::out_of_range&) {
        throw SpecParseError("integer out of range", pos_offset);
    }
}

}  // namespace

AbelianField parse_field_spec(const std::string& spec) {
    if (spec == "Q") return AbelianField::rationals();
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw SpecParseError("expected 'Q', 'quad:D', 'zeta:m' or 'chars:...'", 0);
    std::string head = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (head == "quad") {
        long D = parse_long(rest, colon + 1, true);
        if (D == 0) throw SpecParseError("quad: D must be nonzero", colon + 1);
        return AbelianField::quadratic(D);
    }
    if (head == "zeta") {
        long m = parse_long(rest, colon + 1, false);
        if (m < 1) throw SpecParseError("zeta: m must be >= 1", colon + 1);
        if (m > kModulusLimit) throw SpecUnsupported("zeta: modulus too large");
        return AbelianField::cyclotomic(m);
    }
    if (head == "chars") {
        // chars:mod=M;gens=e/e/...,e/e/...
        auto semi = rest.find(';');
        if (semi == std::string::npos || rest.compare(0, 4, "mod=") != 0)
            throw SpecParseError("chars: expected 'mod=M;gens=...'", colon + 1);
        long M = parse_long(rest.substr(4, semi - 4), colon + 5, false);
        if (M < 1) throw SpecParseError("chars: modulus must be >= 1", colon + 5);
        if (M > kModulusLimit) throw SpecUnsupported("chars: modulus too large");
        std::string gens_part = rest.substr(semi + 1);
        if (gens_part.compare(0, 5, "gens=") != 0)
            throw SpecParseError("chars: expected 'gens='", colon + 1 + semi + 1);
        gens_part = gens_part.substr(5);
        size_t base = colon + 1 + semi + 6;
        auto g = unit_group(M);
        size_t ncomp = g->components().size();
        std::vector<std::vector<long>> gens;
        if (!gens_part.empty()) {
            std::stringstream ss(gens_part);
            std::string item;
            size_t offset = 0;
            while (std::getline(ss, item, ',')) {
                std::vector<long> v;
                std::stringstream es(item);
                std::string num;
                size_t eoff = 0;
                while (std::getline(es, num, '/')) {
                    v.push_back(parse_long(num, base + offset + eoff, false));
                    eoff += num.size() + 1;
                }
                if (v.size() != ncomp)
                    throw SpecParseError("chars: generator needs " + std::to_string(ncomp) +
                                             " exponents, got " + std::to_string(v.size()),
                                         base + offset);
                gens.push_back(std::move(v));
                offset += item.size() + 1;
            }
        }
        return AbelianField::from_generators(M, gens);
    }
    throw SpecParseError("unknown spec kind '" + head + "'", 0);
}

std::string canonical_spec(const AbelianField& F) {
    if (field_degree(F) == 1) return "Q";
    std::ostringstream os;
    os << "chars:mod=" << F.modulus() << ";gens=";
    auto gens = F.generator_matrix();
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ',';
        for (size_t j = 0; j < gens[i].size(); ++j) {
            if (j) os << '/';
            os << gens[i][j];
        }
    }
    return os.str();
}

}  // namespace rdlab
