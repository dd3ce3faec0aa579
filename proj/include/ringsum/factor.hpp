#ifndef RINGSUM_FACTOR_HPP
#define RINGSUM_FACTOR_HPP

#include <vector>

#include "ringsum/ratfun.hpp"

namespace ringsum {

// p(k) -> p(k+r)
inline MPoly shift_substitute(const MPoly& p, std::size_t kvar, long r) {
    return p.subst_int_shift(kvar, r);
}
inline RatFun shift_substitute(const RatFun& p, std::size_t kvar, long r) {
    return p.subst_int_shift(kvar, r);
}

// res_k(a(k), b(k+z)) with a fresh variable z appended to the context.
// Returns the resultant in the extended context and the index of z.
struct ShiftResultant {
    MPoly res;
    std::size_t zvar;
};
ShiftResultant shift_resultant(const MPoly& a, const MPoly& b, std::size_t kvar);

// All integers r with p(r) = 0 identically in the remaining variables.
std::vector<long long> integer_roots(const MPoly& p, std::size_t var);

// max r >= 0 with deg_k gcd(p, q(k+r)) > 0, or -1 when no shift aligns.
int dispersion(const MPoly& p, const MPoly& q, std::size_t kvar);

struct FactorEntry {
    MPoly poly; // irreducible, primitive integer, positive graded-lex sign
    int mult = 1;
};

struct Factorization {
    int unit = 1; // p = unit * prod(poly^mult)
    std::vector<FactorEntry> factors;

    MPoly reassemble(const ContextPtr& ctx) const;
};

// Content extraction + square-free decomposition + linear extraction and
// quadratic splitting per main variable. Prime factors of the integer
// content appear as degree-0 entries. Throws FactorDegreeExceeded when an
// irreducible factor in k would exceed degree_cap_k (or when a residual
// part cannot be certified irreducible).
Factorization factor_irreducible(const MPoly& p, std::size_t kvar, int degree_cap_k = 2);

} // namespace ringsum

#endif
