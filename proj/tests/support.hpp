#ifndef RINGSUM_TESTS_SUPPORT_HPP
#define RINGSUM_TESTS_SUPPORT_HPP

#include <random>

#include "ringsum/ratfun.hpp"

namespace ringsum::testsupport {

// deterministic helpers for building small polynomials over (n, k)
struct NK {
    ContextPtr ctx = make_context({"n", "k"});
    std::size_t n = 0, k = 1;

    MPoly C(long v) const { return MPoly::constant(ctx, BigRat(v)); }
    MPoly C(const BigRat& v) const { return MPoly::constant(ctx, v); }
    MPoly N() const { return MPoly::variable(ctx, n); }
    MPoly K() const { return MPoly::variable(ctx, k); }
    RatFun R(const MPoly& p) const { return RatFun(p); }
    RatFun R(long v) const { return RatFun(C(v)); }
    RatFun R(const MPoly& p, const MPoly& q) const { return RatFun(p, q); }
};

inline MPoly random_poly(const NK& nk, std::mt19937& rng, int max_deg = 2,
                         int coeff_range = 5, bool allow_zero = true) {
    std::uniform_int_distribution<int> cd(-coeff_range, coeff_range);
    std::uniform_int_distribution<int> dd(0, max_deg);
    MPoly p = nk.C(0);
    int dn = dd(rng), dk = dd(rng);
    for (int i = 0; i <= dn; ++i)
        for (int j = 0; j <= dk; ++j) {
            int c = cd(rng);
            if (c == 0) continue;
            p = p + nk.N().pow(static_cast<unsigned>(i)) * nk.K().pow(static_cast<unsigned>(j)) *
                        BigRat(c);
        }
    if (!allow_zero && p.is_zero()) return nk.C(1);
    return p;
}

} // namespace ringsum::testsupport

#endif
