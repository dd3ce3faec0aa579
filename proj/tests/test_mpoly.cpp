#include <doctest.h>

#include "ringsum/errors.hpp"
#include "ringsum/factor.hpp"
#include "support.hpp"

using namespace ringsum;
using namespace ringsum::testsupport;

TEST_CASE("basic arithmetic and normal form") {
    NK nk;
    MPoly p = (nk.K() + nk.N()) * (nk.K() - nk.N());
    CHECK(p == nk.K() * nk.K() - nk.N() * nk.N());
    CHECK((p - p).is_zero());
    CHECK(p.degree(nk.k) == 2);
    CHECK(p.degree(nk.n) == 2);
    CHECK(MPoly::zero(nk.ctx).degree(nk.k) == -1);
    CHECK(p.to_string() == "k^2 - n^2");

    auto norm = (nk.K() * BigRat(-4) - nk.C(6)).normalized();
    CHECK(norm.sign == -1);
    CHECK(norm.content == BigRat(2));
    CHECK(norm.prim == nk.K() * BigRat(2) + nk.C(3));
}

TEST_CASE("exact division") {
    NK nk;
    MPoly a = (nk.K() + nk.C(1)) * (nk.K() + nk.N()) * (nk.K() + nk.N());
    CHECK(a.divexact(nk.K() + nk.N()) == (nk.K() + nk.C(1)) * (nk.K() + nk.N()));
    CHECK_THROWS_AS(a.divexact(nk.K() + nk.C(2)), NonExactDivision);
}

TEST_CASE("poly_gcd spec examples") {
    NK nk;
    // gcd(k^2-1, k-1) = k-1
    CHECK(poly_gcd(nk.K() * nk.K() - nk.C(1), nk.K() - nk.C(1)) == nk.K() - nk.C(1));
    // gcd((k+n)(k+1), (k+n)k) = k+n, verified by polynomial division
    MPoly g = poly_gcd((nk.K() + nk.N()) * (nk.K() + nk.C(1)), (nk.K() + nk.N()) * nk.K());
    CHECK(g == nk.K() + nk.N());
    // gcd(p, 0) = normalized p
    MPoly p = (nk.K() + nk.N()) * BigRat(-6);
    CHECK(poly_gcd(p, MPoly::zero(nk.ctx)) == nk.K() + nk.N());
}

TEST_CASE("poly_gcd divides both inputs exactly (randomized)") {
    NK nk;
    std::mt19937 rng(42);
    for (int iter = 0; iter < 60; ++iter) {
        MPoly a = random_poly(nk, rng), b = random_poly(nk, rng);
        // seed a common factor half of the time
        if (iter % 2 == 0) {
            MPoly c = random_poly(nk, rng, 1, 3, false);
            a = a * c;
            b = b * c;
        }
        MPoly g = poly_gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(g.is_zero());
            continue;
        }
        CHECK(!g.is_zero());
        MPoly qa, qb;
        CHECK(a.divides(g, &qa));
        CHECK(b.divides(g, &qb));
        CHECK(qa * g == a);
        CHECK(qb * g == b);
    }
}

TEST_CASE("shift substitution") {
    NK nk;
    CHECK(shift_substitute(nk.K() + nk.N(), nk.k, 2) == nk.K() + nk.N() + nk.C(2));
    MPoly p = nk.K() * nk.K() * nk.N() - nk.C(7);
    CHECK(shift_substitute(p, nk.k, 0) == p);
    CHECK(shift_substitute(nk.K() * nk.K(), nk.k, -1) ==
          nk.K() * nk.K() - nk.K() * BigRat(2) + nk.C(1));
}

TEST_CASE("shift round trip r in [-10,10] (randomized)") {
    NK nk;
    std::mt19937 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        MPoly p = random_poly(nk, rng, 3);
        for (long r = -10; r <= 10; ++r)
            CHECK(shift_substitute(shift_substitute(p, nk.k, r), nk.k, -r) == p);
    }
}

TEST_CASE("resultant basics") {
    NK nk;
    auto sr = shift_resultant(nk.K(), nk.K(), nk.k); // res_k(k, k+z)
    MPoly z = MPoly::variable(sr.res.ctx(), sr.zvar);
    CHECK((sr.res == z || sr.res == -z));

    auto sr2 = shift_resultant(nk.K(), nk.K() + nk.C(5), nk.k); // res_k(k, k+z+5)
    CHECK((sr2.res == z.lift_to(sr2.res.ctx()) + MPoly::constant(sr2.res.ctx(), BigRat(5)) ||
           sr2.res == -(z.lift_to(sr2.res.ctx()) + MPoly::constant(sr2.res.ctx(), BigRat(5)))));

    // Ex. Pi1 shift distance: res_k(-k-2-n, (k+n)(k+z)) has the integer root z=2
    auto sr3 = shift_resultant(-nk.K() - nk.C(2) - nk.N(), nk.K() + nk.N(), nk.k);
    auto roots = integer_roots(sr3.res, sr3.zvar);
    CHECK(roots == std::vector<long long>{2});
}

TEST_CASE("resultant of quadratics via common-root oracle") {
    // res vanishes exactly when the two polynomials share a root:
    // p = (k-1)(k-4), q = (k-4+z)(k+9+z) share a root iff z in {0,3,-10,-13}
    NK nk;
    MPoly p = (nk.K() - nk.C(1)) * (nk.K() - nk.C(4));
    MPoly q = (nk.K() - nk.C(4)) * (nk.K() + nk.C(9));
    auto sr = shift_resultant(p, q, nk.k);
    auto roots = integer_roots(sr.res, sr.zvar);
    CHECK(roots == std::vector<long long>{-13, -10, 0, 3});
}

TEST_CASE("poly_sqrt") {
    NK nk;
    MPoly s = nk.K() * BigRat(2) + nk.N() * nk.N() - nk.C(3);
    auto r = poly_sqrt(s * s);
    REQUIRE(r.has_value());
    CHECK((*r == s || *r == -s));
    CHECK(!poly_sqrt(nk.K()).has_value());
    CHECK(!poly_sqrt(nk.K() * nk.K() + nk.C(1)).has_value());
}
