#ifndef RINGSUM_RATIONAL_HPP
#define RINGSUM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ringsum {

// Exact rationals. mpq_class keeps the canonical form we require:
// gcd(num,den)=1 and den>0 after every arithmetic operation.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat rat(long n) { return BigRat(n); }
inline BigRat rat(long n, long d) {
    BigRat q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_zero(const BigRat& q) { return sgn(q) == 0; }

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

inline std::optional<long long> to_ll(const BigRat& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p()) return std::nullopt;
    return static_cast<long long>(q.get_num().get_si());
}

inline BigRat rat_pow(const BigRat& base, long e) {
    if (e == 0) return BigRat(1);
    BigRat b = base;
    bool inv = e < 0;
    unsigned long ue = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    BigRat r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), ue);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), ue);
    r.canonicalize();
    if (inv) r = 1 / r;
    return r;
}

// Exact square root of a rational, if it is a perfect square.
inline std::optional<BigRat> rat_sqrt(const BigRat& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_den_mpz_t()) == 0) return std::nullopt;
    BigRat r;
    mpz_sqrt(r.get_num_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), q.get_den_mpz_t());
    r.canonicalize();
    return r;
}

// Prime factorization by trial division; fine for the small contents we meet.
inline std::vector<std::pair<BigInt, int>> factor_integer(BigInt n) {
    std::vector<std::pair<BigInt, int>> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    BigInt p = 2;
    while (p * p <= n) {
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            int m = 0;
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
                n /= p;
                ++m;
            }
            out.emplace_back(p, m);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::string rat_to_string(const BigRat& q) { return q.get_str(); }

} // namespace ringsum

#endif
