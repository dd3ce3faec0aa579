#ifndef RINGSUM_MPOLY_HPP
#define RINGSUM_MPOLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringsum/rational.hpp"

namespace ringsum {

// Ordered variable list shared by the polynomials of one computation.
// Convention: parameters y1..yo first, the shift variable k last (extra
// helper variables such as the resultant variable z may be appended).
class Context {
public:
    explicit Context(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    std::size_t size() const { return vars_.size(); }
    const std::string& name(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& names() const { return vars_; }

    std::optional<std::size_t> index(const std::string& var) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == var) return i;
        return std::nullopt;
    }

    bool operator==(const Context& o) const { return vars_ == o.vars_; }

private:
    std::vector<std::string> vars_;
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(std::vector<std::string> vars);
ContextPtr extend_context(const ContextPtr& ctx, const std::string& var);

// Sparse multivariate polynomial over Q with exact coefficients.
// Invariant: no zero coefficients are stored; all exponent vectors have
// length ctx->size().
class MPoly {
public:
    using Exp = std::vector<std::int32_t>;

    MPoly() = default;
    explicit MPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static MPoly zero(const ContextPtr& ctx) { return MPoly(ctx); }
    static MPoly constant(const ContextPtr& ctx, const BigRat& c);
    static MPoly variable(const ContextPtr& ctx, std::size_t var);
    static MPoly variable(const ContextPtr& ctx, const std::string& var);

    const ContextPtr& ctx() const { return ctx_; }
    const std::map<Exp, BigRat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    BigRat constant_value() const; // requires is_constant()

    bool depends_on(std::size_t var) const;
    int degree(std::size_t var) const;   // deg(0) = -1 sentinel
    int total_degree() const;            // -1 for zero

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const BigRat& c) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(unsigned e) const;

    // Coefficient of var^e, as a polynomial in the same context (var-free).
    MPoly coeff_of(std::size_t var, int e) const;
    MPoly leading_coeff(std::size_t var) const;
    std::vector<MPoly> coeffs_in(std::size_t var) const; // index = exponent
    static MPoly from_coeffs(const ContextPtr& ctx, std::size_t var,
                             const std::vector<MPoly>& coeffs);

    MPoly derivative(std::size_t var) const;

    MPoly subst_int_shift(std::size_t var, long r) const;        // var -> var + r
    MPoly subst_var_shift(std::size_t var, std::size_t var2) const; // var -> var + var2
    MPoly subst_value(std::size_t var, const BigRat& v) const;   // var -> v
    MPoly subst_poly(std::size_t var, const MPoly& p) const;     // var -> p

    // Rebuild in a context that contains (at least) all our variables by name.
    MPoly lift_to(const ContextPtr& bigger) const;

    // Full evaluation; every occurring variable must be assigned.
    BigRat eval(const std::map<std::string, BigRat>& values) const;

    // p = sign * content * prim with content > 0 rational and prim a primitive
    // integer polynomial whose graded-lex leading coefficient is positive.
    struct Normalized {
        int sign = 1;
        BigRat content = BigRat(0);
        MPoly prim;
    };
    Normalized normalized() const;

    const Exp* glex_leading_exp() const; // nullptr for zero
    BigRat glex_leading_coeff() const;   // 0 for zero

    // Exact polynomial division; throws NonExactDivision when not divisible.
    MPoly divexact(const MPoly& d) const;
    bool divides(const MPoly& d, MPoly* quotient = nullptr) const; // d | this

    std::string to_string() const;

private:
    void add_term(const Exp& e, const BigRat& c);
    void check_ctx(const MPoly& o) const;

    std::map<Exp, BigRat> terms_;
    ContextPtr ctx_;

    friend MPoly prem(const MPoly& a, const MPoly& b, std::size_t var);
};

MPoly prem(const MPoly& a, const MPoly& b, std::size_t var);

// GCD, normalized primitive-integer with positive graded-lex leading
// coefficient; poly_gcd(0,q) is the normalization of q.
MPoly poly_gcd(const MPoly& a, const MPoly& b);
MPoly poly_lcm(const MPoly& a, const MPoly& b);

MPoly resultant(const MPoly& a, const MPoly& b, std::size_t var);

// Exact polynomial square root, if one exists.
std::optional<MPoly> poly_sqrt(const MPoly& p);

} // namespace ringsum

#endif
