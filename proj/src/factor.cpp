#include "ringsum/factor.hpp"

#include <algorithm>
#include <set>

#include "ringsum/errors.hpp"

namespace ringsum {

ShiftResultant shift_resultant(const MPoly& a, const MPoly& b, std::size_t kvar) {
    ContextPtr big = extend_context(a.ctx(), "z#");
    std::size_t z = big->size() - 1;
    MPoly a2 = a.lift_to(big);
    MPoly b2 = b.lift_to(big).subst_var_shift(kvar, z);
    return {resultant(a2, b2, kvar), z};
}

namespace {

// Divisors d of |n| with |d| <= bound (unsigned, without sign).
std::vector<BigInt> bounded_divisors(const BigInt& n, const BigInt& bound) {
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, m] : factor_integer(n)) {
        std::vector<BigInt> next;
        for (const BigInt& d : divs) {
            BigInt cur = d;
            for (int i = 0; i <= m; ++i) {
                if (cur <= bound) next.push_back(cur);
                if (i < m) cur *= p;
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

// Integer roots of a dense univariate integer polynomial given by coeffs.
std::vector<BigInt> integer_roots_upoly(const std::vector<BigRat>& coeffs) {
    // clear denominators
    BigInt den_lcm(1);
    for (const BigRat& c : coeffs)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> a;
    for (const BigRat& c : coeffs) {
        BigRat v = c * BigRat(den_lcm);
        a.push_back(v.get_num());
    }
    // strip trailing zeros (v^m factor) -> remember root 0
    std::vector<BigInt> roots;
    std::size_t t = 0;
    while (t < a.size() && a[t] == 0) ++t;
    if (t == a.size()) return roots; // zero polynomial: no isolated roots reported
    if (t > 0) roots.push_back(0);
    std::vector<BigInt> u(a.begin() + static_cast<long>(t), a.end());
    if (u.size() == 1) return roots;
    // Cauchy bound
    BigInt lead = u.back();
    if (lead < 0) lead = -lead;
    BigInt maxc(0);
    for (const BigInt& c : u) {
        BigInt ac = c < 0 ? BigInt(-c) : c;
        if (ac > maxc) maxc = ac;
    }
    BigInt bound = maxc / lead + 2;
    BigInt trailing = u.front() < 0 ? BigInt(-u.front()) : u.front();
    auto eval_at = [&](const BigInt& x) {
        BigInt acc(0);
        for (std::size_t i = u.size(); i-- > 0;) acc = acc * x + u[i];
        return acc;
    };
    for (const BigInt& d : bounded_divisors(trailing, bound)) {
        if (eval_at(d) == 0) roots.push_back(d);
        if (eval_at(-d) == 0) roots.push_back(-d);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

std::vector<long long> integer_roots(const MPoly& p, std::size_t var) {
    if (p.is_zero()) throw UnsupportedProblem("integer_roots of the zero polynomial");
    // group terms by the parameter part; each group gives a univariate
    // constraint that a root must annihilate
    std::map<MPoly::Exp, std::vector<BigRat>> groups;
    int d = p.degree(var);
    for (const auto& [e, c] : p.terms()) {
        MPoly::Exp key = e;
        int ev = key[var];
        key[var] = 0;
        auto& vec = groups[key];
        if (vec.empty()) vec.assign(static_cast<std::size_t>(d) + 1, BigRat(0));
        vec[static_cast<std::size_t>(ev)] = c;
    }
    std::vector<long long> out;
    bool first = true;
    std::set<BigInt> cand;
    for (auto& [key, coeffs] : groups) {
        auto roots = integer_roots_upoly(coeffs);
        std::set<BigInt> rs(roots.begin(), roots.end());
        if (first) {
            cand = rs;
            first = false;
        } else {
            std::set<BigInt> inter;
            for (const BigInt& r : cand)
                if (rs.count(r)) inter.insert(r);
            cand = std::move(inter);
        }
        if (cand.empty()) break;
    }
    for (const BigInt& r : cand) {
        // paranoia: verify by substitution
        if (p.subst_value(var, BigRat(r)).is_zero() && r.fits_slong_p())
            out.push_back(r.get_si());
    }
    std::sort(out.begin(), out.end());
    return out;
}

int dispersion(const MPoly& p, const MPoly& q, std::size_t kvar) {
    if (p.is_zero() || q.is_zero()) throw UnsupportedProblem("dispersion of zero polynomial");
    if (p.degree(kvar) <= 0 || q.degree(kvar) <= 0) return -1;
    auto sr = shift_resultant(p, q, kvar);
    if (sr.res.is_zero()) throw UnsupportedProblem("identically vanishing shift resultant");
    int best = -1;
    for (long long r : integer_roots(sr.res, sr.zvar))
        if (r >= 0) best = std::max(best, static_cast<int>(r));
    return best;
}

MPoly Factorization::reassemble(const ContextPtr& ctx) const {
    MPoly prod = MPoly::constant(ctx, BigRat(unit));
    for (const FactorEntry& f : factors) {
        if (f.mult >= 0) {
            prod = prod * f.poly.pow(static_cast<unsigned>(f.mult));
        } else {
            // negative multiplicities arise when callers feed factored
            // denominators back in; reassemble only for polynomial parts
            throw UnsupportedProblem("reassemble with negative multiplicity");
        }
    }
    return prod;
}

namespace {

MPoly content_in_var(const MPoly& p, std::size_t var) {
    MPoly g(p.ctx());
    for (const MPoly& c : p.coeffs_in(var)) g = poly_gcd(g, c);
    return g;
}

std::optional<std::size_t> highest_var(const MPoly& p) {
    for (std::size_t i = p.ctx()->size(); i-- > 0;)
        if (p.depends_on(i)) return i;
    return std::nullopt;
}

bool univariate_in(const MPoly& p, std::size_t var) {
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) return false;
    return true;
}

void emit(std::vector<FactorEntry>& out, const MPoly& f, int mult) {
    MPoly g = f.normalized().prim;
    for (FactorEntry& e : out) {
        if (e.poly == g) {
            e.mult += mult;
            return;
        }
    }
    out.push_back({g, mult});
}

// Yun square-free decomposition w.r.t. var; input var-primitive.
std::vector<std::pair<MPoly, int>> yun_squarefree(const MPoly& f, std::size_t var) {
    std::vector<std::pair<MPoly, int>> parts;
    MPoly df = f.derivative(var);
    MPoly c = poly_gcd(f, df);
    if (c.is_constant()) {
        parts.emplace_back(f, 1);
        return parts;
    }
    MPoly w = f.divexact(c);
    MPoly y = df.divexact(c);
    int i = 1;
    while (w.degree(var) > 0) {
        MPoly z = y - w.derivative(var);
        MPoly g = poly_gcd(w, z);
        if (!g.is_constant()) parts.emplace_back(g, i);
        w = w.divexact(g);
        y = z.divexact(g);
        ++i;
    }
    return parts;
}

struct FactorCtx {
    std::size_t kvar;
    int cap;
};

void factor_prim(const MPoly& p, const FactorCtx& fc, std::vector<FactorEntry>& out);

// s: square-free, var-primitive, deg_var >= 1
void factor_squarefree(const MPoly& s, std::size_t var, const FactorCtx& fc,
                       std::vector<FactorEntry>& out) {
    int d = s.degree(var);
    auto cap_check = [&](int deg) {
        if (var == fc.kvar && deg > fc.cap)
            throw FactorDegreeExceeded("irreducible factor of degree " + std::to_string(deg) +
                                       " in " + s.ctx()->name(var) + " exceeds the configured cap " +
                                       std::to_string(fc.cap));
    };
    if (d == 1) {
        cap_check(1);
        emit(out, s, 1);
        return;
    }
    if (d == 2) {
        // split over Q(params) iff the discriminant is a perfect square
        MPoly A = s.coeff_of(var, 2), B = s.coeff_of(var, 1), C = s.coeff_of(var, 0);
        MPoly disc = B * B - A * C * BigRat(4);
        auto sq = poly_sqrt(disc);
        if (sq) {
            MPoly v = MPoly::variable(s.ctx(), var);
            MPoly f1 = A * v * BigRat(2) + B - *sq;
            MPoly f2 = A * v * BigRat(2) + B + *sq;
            // the quadratic-formula factors may carry content in the lower
            // variables (it cancels against 4A); strip it
            f1 = f1.divexact(content_in_var(f1, var));
            f2 = f2.divexact(content_in_var(f2, var));
            cap_check(1);
            emit(out, f1, 1);
            emit(out, f2, 1);
            return;
        }
        cap_check(2);
        emit(out, s, 1);
        return;
    }
    // degree >= 3
    if (univariate_in(s, var)) {
        // rational-root extraction over Z, then the small cases
        MPoly rem = s;
        bool found = true;
        while (rem.degree(var) > 2 && found) {
            found = false;
            auto coeffs = rem.coeffs_in(var);
            std::vector<BigRat> cs;
            for (auto& c : coeffs) cs.push_back(c.constant_value());
            // candidates p/q: p | trailing, q | leading
            BigInt den_lcm(1);
            for (const BigRat& c : cs)
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
            std::vector<BigInt> ic;
            for (const BigRat& c : cs) ic.push_back(BigRat(c * BigRat(den_lcm)).get_num());
            std::size_t t = 0;
            while (t < ic.size() && ic[t] == 0) ++t;
            if (t > 0) {
                MPoly v = MPoly::variable(s.ctx(), var);
                rem = rem.divexact(v);
                emit(out, v, 1);
                found = true;
                continue;
            }
            BigInt trail = ic.front() < 0 ? BigInt(-ic.front()) : ic.front();
            BigInt lead = ic.back() < 0 ? BigInt(-ic.back()) : ic.back();
            BigInt big_bound = trail > lead ? trail : lead;
            for (const BigInt& pnum : bounded_divisors(trail, big_bound)) {
                for (const BigInt& qden : bounded_divisors(lead, big_bound)) {
                    BigInt g;
                    mpz_gcd(g.get_mpz_t(), pnum.get_mpz_t(), qden.get_mpz_t());
                    if (g != 1) continue;
                    for (int sign : {1, -1}) {
                        BigRat root(sign * pnum, qden);
                        root.canonicalize();
                        if (!rem.subst_value(var, root).is_zero()) continue;
                        MPoly lin = MPoly::variable(s.ctx(), var) * BigRat(qden) -
                                    MPoly::constant(s.ctx(), BigRat(sign * pnum));
                        rem = rem.divexact(lin).normalized().prim;
                        emit(out, lin, 1);
                        found = true;
                        break;
                    }
                    if (found) break;
                }
                if (found) break;
            }
        }
        int dr = rem.degree(var);
        if (dr == 0) return;
        if (dr <= 2) {
            factor_squarefree(rem.normalized().prim, var, fc, out);
            return;
        }
        if (dr == 3) {
            // cubic without rational roots is irreducible over Q
            cap_check(3);
            emit(out, rem, 1);
            return;
        }
        throw FactorDegreeExceeded("cannot certify irreducibility at degree " +
                                   std::to_string(dr));
    }
    throw FactorDegreeExceeded("multivariate factor of degree " + std::to_string(d) + " in " +
                               s.ctx()->name(var) + " is beyond the factorization scope");
}

void factor_prim(const MPoly& p, const FactorCtx& fc, std::vector<FactorEntry>& out) {
    if (p.is_constant()) return;
    std::size_t v = *highest_var(p);
    MPoly cont = content_in_var(p, v);
    if (!cont.is_constant()) factor_prim(cont, fc, out);
    MPoly pp = p.divexact(cont);
    for (auto& [part, mult] : yun_squarefree(pp.normalized().prim, v)) {
        std::vector<FactorEntry> sub;
        factor_squarefree(part.normalized().prim, v, fc, sub);
        for (FactorEntry& e : sub) emit(out, e.poly, e.mult * mult);
    }
}

} // namespace

Factorization factor_irreducible(const MPoly& p, std::size_t kvar, int degree_cap_k) {
    if (p.is_zero()) throw UnsupportedProblem("factor_irreducible(0)");
    Factorization out;
    auto norm = p.normalized();

    // prime factorization of the rational content (denominator primes get
    // negative multiplicity; they occur for rational-coefficient inputs)
    for (const auto& [prime, mult] : factor_integer(norm.content.get_num()))
        out.factors.push_back({MPoly::constant(p.ctx(), BigRat(prime)), mult});
    for (const auto& [prime, mult] : factor_integer(norm.content.get_den()))
        out.factors.push_back({MPoly::constant(p.ctx(), BigRat(prime)), -mult});

    factor_prim(norm.prim, FactorCtx{kvar, degree_cap_k}, out.factors);

    // self-check: the residual after dividing out every entry must be +-1
    MPoly residual = p;
    BigRat scalar(1);
    for (const FactorEntry& f : out.factors) {
        if (f.poly.is_constant()) {
            scalar *= rat_pow(f.poly.constant_value(), f.mult);
        } else {
            for (int i = 0; i < f.mult; ++i) residual = residual.divexact(f.poly);
        }
    }
    residual = residual * (BigRat(1) / scalar);
    if (!residual.is_constant() || abs(residual.constant_value()) != 1)
        throw UnsupportedProblem("factorization self-check failed for " + p.to_string());
    out.unit = sgn(residual.constant_value()) < 0 ? -1 : 1;
    return out;
}

} // namespace ringsum
