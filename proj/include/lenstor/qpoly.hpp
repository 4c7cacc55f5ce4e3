#ifndef LENSTOR_QPOLY_HPP
#define LENSTOR_QPOLY_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lenstor/rational.hpp"

/* Dense univariate polynomials over Q, the engine behind residue rings,
 * resultants and cyclotomic polynomials. coeffs[i] is the coefficient of t^i;
 * a normalized polynomial has no trailing zero and the zero polynomial is the
 * empty vector (degree -1). */

namespace lenstor::qp {

using Poly = std::vector<Rational>;

inline void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline long long deg(const Poly& p) { return static_cast<long long>(p.size()) - 1; }
inline bool is_zero(const Poly& p) { return p.empty(); }

inline const Rational& lc(const Poly& p)
{
    if (p.empty())
        throw std::invalid_argument("lc of zero polynomial");
    return p.back();
}

inline Poly constant(const Rational& c)
{
    Poly p;
    if (c != 0)
        p.push_back(c);
    return p;
}

inline Poly monomial(long long e, const Rational& c)
{
    if (e < 0)
        throw std::invalid_argument("qp::monomial: negative exponent");
    Poly p;
    if (c != 0) {
        p.assign(static_cast<size_t>(e) + 1, Rational(0));
        p.back() = c;
    }
    return p;
}

inline Poly add(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline Poly scale(const Poly& a, const Rational& c)
{
    if (c == 0)
        return {};
    Poly r = a;
    for (auto& x : r)
        x *= c;
    return r;
}

inline Rational eval(const Poly& p, const Rational& x)
{
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

/* Euclidean division over Q: a = q*b + r with deg r < deg b. */
inline void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r)
{
    if (b.empty())
        throw std::invalid_argument("qp::divrem: division by zero polynomial");
    q.clear();
    r = a;
    if (deg(a) >= deg(b))
        q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational inv_lc = Rational(1) / lc(b);
    while (!r.empty() && deg(r) >= deg(b)) {
        long long k = deg(r) - deg(b);
        Rational c = r.back() * inv_lc;
        q[static_cast<size_t>(k)] = c;
        for (size_t i = 0; i < b.size(); ++i)
            r[static_cast<size_t>(k) + i] -= c * b[i];
        trim(r);
    }
    trim(q);
}

inline Poly rem(const Poly& a, const Poly& b)
{
    Poly q, r;
    divrem(a, b, q, r);
    return r;
}

inline Poly div_exact(const Poly& a, const Poly& b)
{
    Poly q, r;
    divrem(a, b, q, r);
    if (!r.empty())
        throw std::domain_error("qp::div_exact: division not exact");
    return q;
}

inline Poly monic(const Poly& p)
{
    if (p.empty())
        return p;
    return scale(p, Rational(1) / lc(p));
}

/* Monic gcd. */
inline Poly gcd(Poly a, Poly b)
{
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/* g = gcd(a,b) monic (or zero), with u*a + v*b = g. */
inline Poly xgcd(const Poly& a, const Poly& b, Poly& u, Poly& v)
{
    Poly r0 = a, r1 = b;
    Poly u0 = constant(1), u1;
    Poly v0, v1 = constant(1);
    while (!r1.empty()) {
        Poly q, r2;
        divrem(r0, r1, q, r2);
        Poly u2 = sub(u0, mul(q, u1));
        Poly v2 = sub(v0, mul(q, v1));
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (!r0.empty()) {
        Rational s = Rational(1) / lc(r0);
        r0 = scale(r0, s);
        u0 = scale(u0, s);
        v0 = scale(v0, s);
    }
    u = u0;
    v = v0;
    return r0;
}

/* t^n - 1 */
inline Poly tn_minus_1(long long n)
{
    Poly p(static_cast<size_t>(n) + 1, Rational(0));
    p[0] = -1;
    p.back() = 1;
    return p;
}

/* nu_n = t^{n-1} + ... + t + 1 */
inline Poly nu(long long n)
{
    return Poly(static_cast<size_t>(n), Rational(1));
}

/* Phi_d, monic with integer coefficients, degree phi(d); obtained by dividing
 * t^d - 1 by the product of the Phi_e over proper divisors e of d. */
inline Poly cyclotomic(long long d)
{
    if (d < 1)
        throw std::invalid_argument("cyclotomic: d must be >= 1");
    std::vector<std::pair<long long, Poly>> table;
    for (long long e : divisors(d)) {
        Poly prod = constant(1);
        for (const auto& [f, phi_f] : table)
            if (e % f == 0)
                prod = mul(prod, phi_f);
        table.emplace_back(e, div_exact(tn_minus_1(e), prod));
    }
    return table.back().second;
}

namespace detail {

/* Integer content of a rational-coefficient polynomial: the positive rational
 * c with p = c * (primitive integer polynomial). */
inline Rational content(const Poly& p)
{
    Integer num_gcd(0), den_lcm(1);
    for (const auto& c : p) {
        if (c == 0)
            continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

/* Pseudo-remainder: lc(b)^{deg a - deg b + 1} * a  mod  b. */
inline Poly prem(const Poly& a, const Poly& b)
{
    long long e = deg(a) - deg(b) + 1;
    Poly r = a;
    while (!r.empty() && deg(r) >= deg(b)) {
        long long k = deg(r) - deg(b);
        Rational c = lc(r);
        r = scale(r, lc(b));
        for (size_t i = 0; i < b.size(); ++i)
            r[static_cast<size_t>(k) + i] -= c * b[i];
        trim(r);
        --e;
    }
    for (long long i = 0; i < e; ++i)
        r = scale(r, lc(b));
    return r;
}

/* Sub-resultant PRS resultant of nonzero integer-coefficient a, b
 * (Cohen, Algorithm 3.3.7). */
inline Rational resultant_int(Poly a, Poly b)
{
    int s = 1;
    if (deg(a) < deg(b)) {
        if ((deg(a) & 1) && (deg(b) & 1))
            s = -s;
        std::swap(a, b);
    }
    if (deg(b) == 0) {
        Rational r(1);
        for (long long i = 0; i < deg(a); ++i)
            r *= b[0];
        return s * r;
    }
    Rational g(1), h(1);
    while (true) {
        long long delta = deg(a) - deg(b);
        if ((deg(a) & 1) && (deg(b) & 1))
            s = -s;
        Poly r = prem(a, b);
        a = std::move(b);
        Rational denom = g;
        for (long long i = 0; i < delta; ++i)
            denom *= h;
        b = scale(r, Rational(1) / denom);
        g = lc(a);
        /* h = h^{1-delta} g^delta */
        if (delta > 0) {
            Rational hn(1);
            for (long long i = 0; i < delta; ++i)
                hn *= g;
            for (long long i = 0; i < delta - 1; ++i)
                hn /= h;
            h = hn;
        }
        if (is_zero(b))
            return Rational(0);
        if (deg(b) == 0)
            break;
    }
    Rational r(1);
    for (long long i = 0; i < deg(a); ++i)
        r *= b[0];
    for (long long i = 0; i < deg(a) - 1; ++i)
        r /= h;
    return s * r;
}

} // namespace detail

/* Res(f, g) = lc(f)^{deg g} * prod over roots r of f of g(r); computed by the
 * fraction-free sub-resultant chain after clearing denominators. */
inline Rational resultant(const Poly& f, const Poly& g)
{
    if (is_zero(f) || is_zero(g))
        throw std::invalid_argument("resultant of zero polynomial");
    if (deg(f) == 0 && deg(g) == 0)
        return Rational(1);
    if (deg(f) == 0) {
        Rational r(1);
        for (long long i = 0; i < deg(g); ++i)
            r *= f[0];
        return r;
    }
    if (deg(g) == 0) {
        Rational r(1);
        for (long long i = 0; i < deg(f); ++i)
            r *= g[0];
        return r;
    }
    Rational cf = detail::content(f), cg = detail::content(g);
    Rational scale_factor(1);
    for (long long i = 0; i < deg(g); ++i)
        scale_factor *= cf;
    for (long long i = 0; i < deg(f); ++i)
        scale_factor *= cg;
    return scale_factor *
           detail::resultant_int(scale(f, Rational(1) / cf), scale(g, Rational(1) / cg));
}

} // namespace lenstor::qp

#endif
