#ifndef LENSTOR_RATIONAL_HPP
#define LENSTOR_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

/* Exact scalar arithmetic. All coefficients in this library are rationals in
 * lowest terms with positive denominator (GMP canonical form); there is no
 * floating point anywhere. */

namespace lenstor {

using Integer  = mpz_class;
using Rational = mpq_class;

static_assert(sizeof(long) >= 8, "64-bit long assumed for GMP conversions");

inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

inline std::string int_str(const Integer& n) { return n.get_str(); }

/* "p/q" or "p"; denominator 1 prints as a plain integer. */
inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational rat_parse(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long long checked_ll(const Integer& n)
{
    if (!n.fits_slong_p())
        throw std::overflow_error("integer too large for machine word: " + n.get_str());
    return n.get_si();
}

inline long long mod_nonneg(long long x, long long n)
{
    if (n <= 0)
        throw std::invalid_argument("mod_nonneg: modulus must be positive");
    long long r = x % n;
    return r < 0 ? r + n : r;
}

inline long long gcd_ll(long long a, long long b)
{
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/* g = gcd(a,b) >= 0 together with u,v such that u*a + v*b = g. */
inline long long xgcd_ll(long long a, long long b, long long& u, long long& v)
{
    long long u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    long long r0 = a, r1 = b;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0 < 0) { r0 = -r0; u0 = -u0; v0 = -v0; }
    u = u0;
    v = v0;
    return r0;
}

/* x*xbar == 1 (mod N), result in [1, N-1]. */
inline long long mod_inverse(long long x, long long N)
{
    if (N < 2)
        throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    long long u, v;
    long long g = xgcd_ll(mod_nonneg(x, N), N, u, v);
    if (g != 1)
        throw std::invalid_argument("mod_inverse: gcd(" + std::to_string(x) + ", " +
                                    std::to_string(N) + ") = " + std::to_string(g) + " != 1");
    return mod_nonneg(u, N);
}

inline std::vector<long long> divisors(long long n)
{
    if (n <= 0)
        throw std::invalid_argument("divisors: argument must be positive");
    std::vector<long long> lo, hi;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d)
                hi.push_back(n / d);
        }
    }
    for (auto it = hi.rbegin(); it != hi.rend(); ++it)
        lo.push_back(*it);
    return lo;
}

} // namespace lenstor

#endif
