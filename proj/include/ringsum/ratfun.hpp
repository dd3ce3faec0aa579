#ifndef RINGSUM_RATFUN_HPP
#define RINGSUM_RATFUN_HPP

#include <map>
#include <optional>
#include <string>

#include "ringsum/mpoly.hpp"

namespace ringsum {

// Rational function num/den over Q in the context variables.
// Invariants: den != 0, gcd(num,den) = 1, den is a primitive integer
// polynomial with positive graded-lex leading coefficient.
class RatFun {
public:
    RatFun() = default;
    explicit RatFun(const MPoly& num) : num_(num), den_(MPoly::constant(num.ctx(), BigRat(1))) {}
    RatFun(MPoly num, MPoly den);

    static RatFun zero(const ContextPtr& ctx) { return RatFun(MPoly::zero(ctx)); }
    static RatFun constant(const ContextPtr& ctx, const BigRat& c) {
        return RatFun(MPoly::constant(ctx, c));
    }
    static RatFun variable(const ContextPtr& ctx, const std::string& v) {
        return RatFun(MPoly::variable(ctx, v));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const ContextPtr& ctx() const { return num_.ctx(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    BigRat constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool depends_on(std::size_t var) const {
        return num_.depends_on(var) || den_.depends_on(var);
    }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun inverse() const;
    RatFun pow(long e) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun subst_int_shift(std::size_t var, long r) const; // var -> var+r
    RatFun subst_value(std::size_t var, const BigRat& v) const;
    RatFun subst_ratfun(std::size_t var, const RatFun& v) const;
    RatFun lift_to(const ContextPtr& bigger) const;

    // Evaluate with every variable assigned; throws PoleEncountered(0) on
    // a vanishing denominator.
    BigRat eval(const std::map<std::string, BigRat>& values) const;

    std::string to_string() const;

private:
    MPoly num_, den_;
};

} // namespace ringsum

#endif
