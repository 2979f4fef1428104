#pragma once

#include <stdexcept>
#include <string>

#include "rdlab/abelian_field.hpp"

namespace rdlab {

// Input grammar for fields on the command line:
//   Q                         the rationals
//   quad:D                    Q(sqrt(D)), D a nonzero integer
//   zeta:m                    the m-th cyclotomic field, m >= 1
//   chars:mod=M;gens=a/b,c/d  character subgroup generators, one exponent
//                             per component of (Z/M)*
struct SpecParseError : std::runtime_error {
    size_t pos;
    SpecParseError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

struct SpecUnsupported : std::runtime_error {
    explicit SpecUnsupported(const std::string& msg) : std::runtime_error(msg) {}
};

AbelianField parse_field_spec(const std::string& spec);

// Canonical printable form; re-parsing yields the identical field.
std::string canonical_spec(const AbelianField& F);

}  // namespace rdlab
