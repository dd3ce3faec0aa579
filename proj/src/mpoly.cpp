#include "ringsum/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "ringsum/errors.hpp"

namespace ringsum {

ContextPtr make_context(std::vector<std::string> vars) {
    return std::make_shared<const Context>(std::move(vars));
}

ContextPtr extend_context(const ContextPtr& ctx, const std::string& var) {
    std::vector<std::string> vars = ctx->names();
    if (ctx->index(var)) throw UnsupportedProblem("variable '" + var + "' already in context");
    vars.push_back(var);
    return make_context(std::move(vars));
}

void MPoly::check_ctx(const MPoly& o) const {
    if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))
        throw UnsupportedProblem("polynomial context mismatch");
}

MPoly MPoly::constant(const ContextPtr& ctx, const BigRat& c) {
    MPoly p(ctx);
    if (!ringsum::is_zero(c)) p.terms_.emplace(Exp(ctx->size(), 0), c);
    return p;
}

MPoly MPoly::variable(const ContextPtr& ctx, std::size_t var) {
    MPoly p(ctx);
    Exp e(ctx->size(), 0);
    e.at(var) = 1;
    p.terms_.emplace(std::move(e), BigRat(1));
    return p;
}

MPoly MPoly::variable(const ContextPtr& ctx, const std::string& var) {
    auto idx = ctx->index(var);
    if (!idx) throw UnsupportedProblem("unknown variable '" + var + "'");
    return variable(ctx, *idx);
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exp& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

BigRat MPoly::constant_value() const {
    if (terms_.empty()) return BigRat(0);
    return terms_.begin()->second;
}

bool MPoly::depends_on(std::size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) return true;
    return false;
}

int MPoly::degree(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return terms_.empty() ? -1 : d;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void MPoly::add_term(const Exp& e, const BigRat& c) {
    if (ringsum::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (ringsum::is_zero(it->second)) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_ctx(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    check_ctx(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_ctx(o);
    MPoly r(ctx_);
    Exp e(ctx_->size(), 0);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

MPoly MPoly::operator*(const BigRat& c) const {
    MPoly r(ctx_);
    if (ringsum::is_zero(c)) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    check_ctx(o);
    return terms_ == o.terms_;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = constant(ctx_, BigRat(1));
    MPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

MPoly MPoly::coeff_of(std::size_t var, int e) const {
    MPoly r(ctx_);
    for (const auto& [ex, c] : terms_) {
        if (ex[var] == e) {
            Exp e2 = ex;
            e2[var] = 0;
            r.terms_.emplace(std::move(e2), c);
        }
    }
    return r;
}

MPoly MPoly::leading_coeff(std::size_t var) const {
    return coeff_of(var, degree(var));
}

std::vector<MPoly> MPoly::coeffs_in(std::size_t var) const {
    int d = degree(var);
    std::vector<MPoly> out;
    for (int i = 0; i <= d; ++i) out.push_back(coeff_of(var, i));
    return out;
}

MPoly MPoly::from_coeffs(const ContextPtr& ctx, std::size_t var,
                         const std::vector<MPoly>& coeffs) {
    MPoly r(ctx);
    MPoly v = variable(ctx, var);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        r = r + coeffs[i] * v.pow(static_cast<unsigned>(i));
    return r;
}

MPoly MPoly::derivative(std::size_t var) const {
    MPoly r(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exp e2 = e;
        e2[var] -= 1;
        r.add_term(e2, c * BigRat(e[var]));
    }
    return r;
}

MPoly MPoly::subst_int_shift(std::size_t var, long r) const {
    if (r == 0) return *this;
    return subst_poly(var, variable(ctx_, var) + constant(ctx_, BigRat(r)));
}

MPoly MPoly::subst_var_shift(std::size_t var, std::size_t var2) const {
    return subst_poly(var, variable(ctx_, var) + variable(ctx_, var2));
}

MPoly MPoly::subst_value(std::size_t var, const BigRat& v) const {
    return subst_poly(var, constant(ctx_, v));
}

MPoly MPoly::subst_poly(std::size_t var, const MPoly& p) const {
    check_ctx(p);
    // Horner in var.
    int d = degree(var);
    if (d <= 0) return *this;
    MPoly r = coeff_of(var, d);
    for (int i = d - 1; i >= 0; --i) r = r * p + coeff_of(var, i);
    return r;
}

MPoly MPoly::lift_to(const ContextPtr& bigger) const {
    std::vector<std::size_t> remap(ctx_->size());
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
        auto idx = bigger->index(ctx_->name(i));
        if (!idx) throw UnsupportedProblem("lift_to: variable missing in target context");
        remap[i] = *idx;
    }
    MPoly r(bigger);
    for (const auto& [e, c] : terms_) {
        Exp e2(bigger->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) e2[remap[i]] = e[i];
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

BigRat MPoly::eval(const std::map<std::string, BigRat>& values) const {
    BigRat total(0);
    for (const auto& [e, c] : terms_) {
        BigRat t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = values.find(ctx_->name(i));
            if (it == values.end()) throw MissingParameter(ctx_->name(i));
            t *= rat_pow(it->second, e[i]);
        }
        total += t;
    }
    return total;
}

namespace {
bool glex_less(const MPoly::Exp& a, const MPoly::Exp& b) {
    int ta = 0, tb = 0;
    for (int x : a) ta += x;
    for (int x : b) tb += x;
    if (ta != tb) return ta < tb;
    return a < b;
}
} // namespace

const MPoly::Exp* MPoly::glex_leading_exp() const {
    const Exp* best = nullptr;
    for (const auto& [e, c] : terms_)
        if (!best || glex_less(*best, e)) best = &e;
    return best;
}

BigRat MPoly::glex_leading_coeff() const {
    const Exp* e = glex_leading_exp();
    return e ? terms_.at(*e) : BigRat(0);
}

MPoly::Normalized MPoly::normalized() const {
    Normalized out;
    out.prim = MPoly(ctx_);
    if (terms_.empty()) {
        out.sign = 1;
        out.content = BigRat(0);
        return out;
    }
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    BigRat content(num_gcd, den_lcm);
    content.canonicalize();
    int sign = sgn(glex_leading_coeff()) < 0 ? -1 : 1;
    out.sign = sign;
    out.content = content;
    BigRat scale = BigRat(sign) / content;
    for (const auto& [e, c] : terms_) out.prim.terms_.emplace(e, c * scale);
    return out;
}

MPoly MPoly::divexact(const MPoly& d) const {
    MPoly q;
    if (!divides(d, &q)) throw NonExactDivision("non-exact polynomial division");
    return q;
}

bool MPoly::divides(const MPoly& d, MPoly* quotient) const {
    // does d divide *this*? greedy cancellation of the lex-leading term.
    check_ctx(d);
    if (d.is_zero()) {
        if (!is_zero()) return false;
        if (quotient) *quotient = MPoly(ctx_);
        return true;
    }
    MPoly r = *this;
    MPoly q(ctx_);
    const auto& dlead = *d.terms_.rbegin(); // lex-leading term (map is lex-sorted)
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.rbegin();
        Exp t(ctx_->size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            t[i] = rlead.first[i] - dlead.first[i];
            if (t[i] < 0) return false;
        }
        BigRat c = rlead.second / dlead.second;
        MPoly mono(ctx_);
        mono.terms_.emplace(t, c);
        q = q + mono;
        r = r - mono * d;
    }
    if (quotient) *quotient = q;
    return true;
}

MPoly prem(const MPoly& a, const MPoly& b, std::size_t var) {
    a.check_ctx(b);
    if (b.is_zero()) throw UnsupportedProblem("pseudo-remainder by zero");
    MPoly r = a;
    const int db = b.degree(var);
    const MPoly lb = b.leading_coeff(var);
    MPoly v = MPoly::variable(a.ctx(), var);
    while (!r.is_zero() && r.degree(var) >= db) {
        int dr = r.degree(var);
        MPoly lr = r.leading_coeff(var);
        r = r * lb - b * lr * v.pow(static_cast<unsigned>(dr - db));
    }
    return r;
}

namespace {

// v-content: gcd of the coefficients of p seen as a polynomial in v.
MPoly content_in(const MPoly& p, std::size_t var) {
    MPoly g(p.ctx());
    for (const MPoly& c : p.coeffs_in(var)) g = poly_gcd(g, c);
    return g;
}

std::optional<std::size_t> main_variable(const MPoly& a, const MPoly& b) {
    for (std::size_t i = a.ctx()->size(); i-- > 0;)
        if (a.depends_on(i) || b.depends_on(i)) return i;
    return std::nullopt;
}

MPoly gcd_prim(const MPoly& a, const MPoly& b); // forward

MPoly gcd_with_content_split(const MPoly& a, const MPoly& b, std::size_t v) {
    MPoly ca = content_in(a, v);
    MPoly cb = content_in(b, v);
    MPoly c = gcd_prim(ca, cb);
    MPoly pa = a.divexact(ca);
    MPoly pb = b.divexact(cb);

    // primitive PRS in v
    MPoly p = pa, q = pb;
    if (p.degree(v) < q.degree(v)) std::swap(p, q);
    MPoly g;
    while (true) {
        if (q.is_zero()) {
            g = p;
            break;
        }
        if (q.degree(v) == 0) {
            // v-primitive inputs share no v-free factor
            g = MPoly::constant(a.ctx(), BigRat(1));
            break;
        }
        MPoly r = prem(p, q, v);
        if (!r.is_zero()) {
            MPoly cr = content_in(r, v);
            r = r.divexact(cr);
        }
        p = q;
        q = r;
    }
    MPoly cg = content_in(g, v);
    g = g.divexact(cg);
    return (c * g).normalized().prim;
}

} // namespace

namespace {
MPoly gcd_prim(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.normalized().prim;
    if (b.is_zero()) return a.normalized().prim;
    auto v = main_variable(a, b);
    if (!v) return MPoly::constant(a.ctx(), BigRat(1));
    if (!a.depends_on(*v)) return gcd_prim(a, content_in(b, *v));
    if (!b.depends_on(*v)) return gcd_prim(content_in(a, *v), b);
    return gcd_with_content_split(a, b, *v);
}
} // namespace

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    MPoly g = gcd_prim(a.is_zero() ? a : a.normalized().prim,
                       b.is_zero() ? b : b.normalized().prim);
    return g.normalized().prim;
}

MPoly poly_lcm(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly::zero(a.ctx());
    MPoly g = poly_gcd(a, b);
    return (a * b).divexact(g).normalized().prim;
}

MPoly resultant(const MPoly& a, const MPoly& b, std::size_t var) {
    const int da = a.degree(var), db = b.degree(var);
    if (da < 0 || db < 0) return MPoly::zero(a.ctx());
    if (da == 0) return a.pow(static_cast<unsigned>(db));
    if (db == 0) return b.pow(static_cast<unsigned>(da));

    const std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly::zero(a.ctx())));
    auto ac = a.coeffs_in(var);
    auto bc = b.coeffs_in(var);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) m[i][i + j] = ac[static_cast<std::size_t>(da - j)];
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) m[db + i][i + j] = bc[static_cast<std::size_t>(db - j)];

    // Bareiss fraction-free elimination
    MPoly prev = MPoly::constant(a.ctx(), BigRat(1));
    int sign = 1;
    for (std::size_t r = 0; r + 1 < n; ++r) {
        if (m[r][r].is_zero()) {
            std::size_t swap_row = r;
            for (std::size_t i = r + 1; i < n; ++i)
                if (!m[i][r].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (m[swap_row][r].is_zero()) return MPoly::zero(a.ctx());
            std::swap(m[r], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j)
                m[i][j] = (m[r][r] * m[i][j] - m[i][r] * m[r][j]).divexact(prev);
            m[i][r] = MPoly::zero(a.ctx());
        }
        prev = m[r][r];
    }
    MPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

std::optional<MPoly> poly_sqrt(const MPoly& p) {
    if (p.is_zero()) return p;
    std::optional<std::size_t> v;
    for (std::size_t i = p.ctx()->size(); i-- > 0;)
        if (p.depends_on(i)) {
            v = i;
            break;
        }
    if (!v) {
        auto r = rat_sqrt(p.constant_value());
        if (!r) return std::nullopt;
        return MPoly::constant(p.ctx(), *r);
    }
    int d = p.degree(*v);
    if (d % 2 != 0) return std::nullopt;
    int m = d / 2;
    auto pc = p.coeffs_in(*v);
    std::vector<MPoly> e(static_cast<std::size_t>(m) + 1, MPoly::zero(p.ctx()));
    auto top = poly_sqrt(pc[static_cast<std::size_t>(d)]);
    if (!top) return std::nullopt;
    e[static_cast<std::size_t>(m)] = *top;
    MPoly two_top = e[static_cast<std::size_t>(m)] * BigRat(2);
    for (int j = 1; j <= m; ++j) {
        // match coefficient of v^(2m-j)
        MPoly acc = pc[static_cast<std::size_t>(2 * m - j)];
        for (int i = 1; i < j; ++i)
            acc = acc - e[static_cast<std::size_t>(m - i)] * e[static_cast<std::size_t>(m - j + i)];
        MPoly q;
        if (!acc.divides(two_top, &q)) return std::nullopt;
        e[static_cast<std::size_t>(m - j)] = q;
    }
    MPoly cand = MPoly::from_coeffs(p.ctx(), *v, e);
    if (cand * cand == p) return cand;
    MPoly neg = -cand;
    if (neg * neg == p) return neg;
    return std::nullopt;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    // descending graded-lex for stable, readable output
    std::vector<const std::pair<const Exp, BigRat>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return glex_less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        BigRat c = t->second;
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (neg) c = -c;
        std::string vars;
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            int e = t->first[i];
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ctx_->name(i);
            if (e != 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            os << rat_to_string(c);
        } else if (c == 1) {
            os << vars;
        } else {
            os << rat_to_string(c) << "*" << vars;
        }
    }
    return os.str();
}

} // namespace ringsum
