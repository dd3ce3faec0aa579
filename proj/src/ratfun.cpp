#include "ringsum/ratfun.hpp"

#include "ringsum/errors.hpp"

namespace ringsum {

RatFun::RatFun(MPoly num, MPoly den) {
    if (den.is_zero()) throw UnsupportedProblem("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = num;
        den_ = MPoly::constant(num.ctx(), BigRat(1));
        return;
    }
    MPoly g = poly_gcd(num, den);
    if (!(g.is_constant() && g.constant_value() == 1)) {
        num = num.divexact(g);
        den = den.divexact(g);
    }
    auto n = den.normalized();
    den_ = n.prim;
    num_ = num * (BigRat(n.sign) / n.content);
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw UnsupportedProblem("division of rational functions by zero");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw UnsupportedProblem("inverse of zero");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const {
    if (e == 0) return constant(ctx(), BigRat(1));
    RatFun base = e < 0 ? inverse() : *this;
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    RatFun r = constant(ctx(), BigRat(1));
    while (ue > 0) {
        if (ue & 1) r = r * base;
        base = base * base;
        ue >>= 1;
    }
    return r;
}

RatFun RatFun::subst_int_shift(std::size_t var, long r) const {
    if (r == 0) return *this;
    return RatFun(num_.subst_int_shift(var, r), den_.subst_int_shift(var, r));
}

RatFun RatFun::subst_value(std::size_t var, const BigRat& v) const {
    return RatFun(num_.subst_value(var, v), den_.subst_value(var, v));
}

RatFun RatFun::subst_ratfun(std::size_t var, const RatFun& v) const {
    // substitute var -> v.num/v.den and clear denominators
    int dn = num_.degree(var), dd = den_.degree(var);
    int d = std::max(std::max(dn, dd), 0);
    auto clear = [&](const MPoly& p) {
        MPoly acc = MPoly::zero(p.ctx());
        for (int i = 0; i <= p.degree(var); ++i) {
            MPoly c = p.coeff_of(var, i);
            acc = acc + c * v.num().pow(static_cast<unsigned>(i)) *
                            v.den().pow(static_cast<unsigned>(d - i));
        }
        return acc;
    };
    return RatFun(clear(num_), clear(den_));
}

RatFun RatFun::lift_to(const ContextPtr& bigger) const {
    RatFun r;
    r.num_ = num_.lift_to(bigger);
    r.den_ = den_.lift_to(bigger);
    return r;
}

BigRat RatFun::eval(const std::map<std::string, BigRat>& values) const {
    BigRat d = den_.eval(values);
    if (sgn(d) == 0) throw PoleEncountered("denominator vanished during evaluation", 0);
    return num_.eval(values) / d;
}

std::string RatFun::to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    bool n_par = num_.terms().size() > 1;
    bool d_par = den_.terms().size() > 1;
    std::string out = n_par ? "(" + n + ")" : n;
    out += "/";
    out += d_par ? "(" + d + ")" : d;
    return out;
}

} // namespace ringsum
