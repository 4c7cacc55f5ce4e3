#ifndef LENSTOR_TORSION_HPP
#define LENSTOR_TORSION_HPP

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lenstor/cutseq.hpp"
#include "lenstor/laurent.hpp"
#include "lenstor/linkalg.hpp"
#include "lenstor/rational.hpp"
#include "lenstor/residue.hpp"

/* Reidemeister-Turaev torsion value sequences of the surgered manifolds,
 * lens-space torsions, R(m,n), d-norms and the Franz multiset test.
 *
 * A torsion sequence over degree N is stored as a single residue modulo
 * nu_N(t) = t^{N-1} + ... + 1; by the Chinese Remainder Theorem this residue
 * carries the value tau(zeta_d) for every divisor d >= 2 of N at once, and
 * per-d values are recovered by further reduction modulo Phi_d. */

namespace lenstor {

struct LensType {
    long long P = 0;
    long long Q = 0;
    bool oriented = true; // Q pinned up to q^{±1} (true) or ±q^{±1} (false)
};

/* L(-a, b) = L(a, -b); order 0 keeps Q = 1 (S^1 x S^2), order 1 keeps Q = 0. */
inline LensType lens_normalize(long long P, long long Q, bool oriented = true)
{
    if (P < 0) {
        P = -P;
        Q = -Q;
    }
    if (P == 0)
        return {0, 1, oriented};
    Q = mod_nonneg(Q, P);
    if (gcd_ll(Q, P) != 1)
        throw std::invalid_argument("lens parameters not coprime: L(" + std::to_string(P) +
                                    "," + std::to_string(Q) + ")");
    return {P, Q, oriented};
}

/* Oriented: q2 = q1 or q1^{-1} (mod P); unoriented additionally -q1, -q1^{-1}. */
inline bool lens_equivalent(long long P, long long q1, long long q2, bool oriented)
{
    if (P < 0)
        P = -P;
    if (P == 0) {
        if (std::llabs(q1) != 1 || std::llabs(q2) != 1)
            throw std::invalid_argument("lens_equivalent: gcd(q, 0) != 1");
        return true;
    }
    if (gcd_ll(q1, P) != 1 || gcd_ll(q2, P) != 1)
        throw std::invalid_argument("lens_equivalent: q not coprime to P");
    if (P == 1)
        return true;
    long long a = mod_nonneg(q1, P), b = mod_nonneg(q2, P);
    long long abar = mod_inverse(a, P);
    if (b == a || b == abar)
        return true;
    if (!oriented && (b == mod_nonneg(-a, P) || b == mod_nonneg(-abar, P)))
        return true;
    return false;
}

struct TorsionSequence {
    long long N = 0;    // torsion defined for every divisor d >= 2 of N
    Residue value;      // modulus nu_N
    std::string label;  // representation / generator / variable bookkeeping
};

namespace torsion_detail {

/* (t^k - 1)^{-1} mod nu_N; invertible exactly when gcd(k, N) = 1. */
inline Residue inv_tk_minus_1(const Modulus& mod, long long k)
{
    long long kk = mod_nonneg(k, mod.cycle());
    if (gcd_ll(kk, mod.cycle()) != 1)
        throw std::domain_error("factor t^" + std::to_string(kk) + "-1 not invertible mod " +
                                mod.name() + " (gcd(" + std::to_string(kk) + "," +
                                std::to_string(mod.cycle()) + ") != 1)");
    return Residue(mod, LaurentPoly::tn_minus_1(kk)).inverse();
}

inline void check_surgery_coeff(long long alpha, long long beta)
{
    if (beta < 1 || gcd_ll(alpha, beta) != 1)
        throw std::invalid_argument("surgery coefficient must be a reduced fraction with beta >= 1");
}

} // namespace torsion_detail

/* R(m,n) as a residue mod nu_{m+n}.
 * Form 1: (zeta-1) sum k_i zeta^i           (the defining expression)
 * Form 2: mn + (1/2) sum (k_{i-1}-k_i) <zeta^i>
 * Form 3: m(n+1) + sum (m-s_j) <zeta^{w_j}>
 * Form 4: m(n+1) + sum (m-j) <xi^j>         (variable xi = zeta^{mbar})
 */
inline Residue r_value(long long m, long long n, int form)
{
    CutSequence cs = cut_sequence(m, n);
    const long long N = m + n;
    const Modulus mod = Modulus::aug_cycle(N);
    LaurentPoly p;
    switch (form) {
    case 1: {
        LaurentPoly sum;
        for (long long i = 0; i < N; ++i)
            sum.add_term(i, to_rational(cs.k[i]));
        p = LaurentPoly::tn_minus_1(1) * sum;
        break;
    }
    case 2: {
        p.add_term(0, to_rational(m * n));
        for (long long i = 1; i <= N - 1; ++i) {
            Rational c = to_rational(cs.k[i - 1] - cs.k[i]) / 2;
            p.add_term(i, c);
            p.add_term(-i, c);
        }
        break;
    }
    case 3: {
        p.add_term(0, to_rational(m * (n + 1)));
        for (long long j = 1; j <= m - 1; ++j) {
            Rational c = to_rational(m - cs.s[j]);
            p.add_term(cs.w[j], c);
            p.add_term(-cs.w[j], c);
        }
        break;
    }
    case 4: {
        p.add_term(0, to_rational(m * (n + 1)));
        for (long long j = 1; j <= m - 1; ++j) {
            Rational c = to_rational(m - j);
            p.add_term(j, c);
            p.add_term(-j, c);
        }
        break;
    }
    default:
        throw std::invalid_argument("r_value: form must be 1..4");
    }
    return Residue(mod, p);
}

/* xi^{-(m-1)} ((xi^m-1)/(xi-1))^2 + mn, the closed form behind form 4. */
inline Residue r_value_closed_form(long long m, long long n)
{
    check_A_params(m, n);
    const Modulus mod = Modulus::aug_cycle(m + n);
    Residue nu_m(mod, qp::nu(m));
    Residue shift(mod, LaurentPoly::monomial(mod_nonneg(-(m - 1), m + n)));
    return shift * nu_m * nu_m + Residue(mod, to_rational(m * n));
}

/* tau^{psi'_d}((A_{m,n}; alpha/beta, 0)) = xi^{-m} {beta R - alpha} (xi^m-1)^{-2}
 * as a residue mod nu_{m+n}; requires cyclic first homology. */
inline TorsionSequence torsion_A_r0(long long m, long long n, long long alpha,
                                    long long beta)
{
    check_A_params(m, n);
    torsion_detail::check_surgery_coeff(alpha, beta);
    const long long N = m + n;
    if (gcd_ll(mod_nonneg(alpha, N), N) != 1)
        throw std::domain_error("H_1 not cyclic; torsion representation undefined here");
    const Modulus mod = Modulus::aug_cycle(N);
    Residue R = r_value(m, n, 4);
    Residue num = R * to_rational(beta) - Residue(mod, to_rational(alpha));
    Residue inv_m = torsion_detail::inv_tk_minus_1(mod, m);
    Residue xim(mod, LaurentPoly::monomial(mod_nonneg(-m, N)));
    return {N, xim * num * inv_m * inv_m, "psi'_d (T -> zeta^{-alpha_bar}), variable xi = zeta^{m_bar}"};
}

/* Lens torsion (zeta-1)^{-1}(zeta^{q_bar}-1)^{-1} of L(P, q), restricted to
 * the divisors d >= 2 of N (N | P). */
inline TorsionSequence torsion_lens(long long P, long long q, long long N)
{
    if (N < 2 || P < N || P % N != 0)
        throw std::invalid_argument("torsion_lens: need N >= 2 and N | P");
    if (gcd_ll(q, P) != 1)
        throw std::invalid_argument("torsion_lens: gcd(q, P) != 1");
    const Modulus mod = Modulus::aug_cycle(N);
    long long qbar = mod_nonneg(mod_inverse(q, P), N);
    Residue v = torsion_detail::inv_tk_minus_1(mod, 1) * torsion_detail::inv_tk_minus_1(mod, qbar);
    return {N, v, "psi_d (T -> zeta), lens L(" + std::to_string(P) + "," + std::to_string(q) + ")"};
}

/* tau^{psi_d}((B_{p,q}; alpha/beta, 0)) = (alpha - pq beta)(zeta^alpha - 1)^{-2}
 * mod nu_p. */
inline TorsionSequence torsion_B_r0(long long p, long long q, long long alpha,
                                    long long beta)
{
    check_B_params(p, q);
    torsion_detail::check_surgery_coeff(alpha, beta);
    if (gcd_ll(mod_nonneg(alpha, p), p) != 1)
        throw std::domain_error("H_1 not cyclic; torsion representation undefined here");
    const Modulus mod = Modulus::aug_cycle(p);
    Residue inv_a = torsion_detail::inv_tk_minus_1(mod, mod_nonneg(alpha, p));
    Residue v = inv_a * inv_a * to_rational(alpha - p * q * beta);
    return {p, v, "psi_d (T -> zeta)"};
}

/* A pair (gamma, delta) with alpha*delta - beta*gamma = -1. */
inline std::pair<long long, long long> continuant_pair(long long alpha, long long beta)
{
    long long u, v;
    long long g = xgcd_ll(beta, alpha, u, v); // u*beta + v*alpha = 1
    if (g != 1)
        throw std::invalid_argument("continuant_pair: alpha, beta not coprime");
    return {u, -v};
}

/* tau^{psi_d}((A_{m,n}; mn, alpha/beta)) per the closed form
 * (t^{mn}-1) (t^m-1)^{-1} (t^n-1)^{-1} (t^E-1)^{-1} mod nu_P with
 * P = (m+n)^2 beta - mn alpha and E = (m+n)^2 delta - mn gamma. */
inline TorsionSequence torsion_A_mn_r(long long m, long long n, long long alpha,
                                      long long beta, long long gamma, long long delta)
{
    check_A_params(m, n);
    torsion_detail::check_surgery_coeff(alpha, beta);
    if (alpha * delta - beta * gamma != -1)
        throw std::invalid_argument("torsion_A_mn_r: need alpha*delta - beta*gamma = -1");
    const long long P = (m + n) * (m + n) * beta - m * n * alpha;
    if (P < 2)
        throw std::domain_error("torsion_A_mn_r: order P = " + std::to_string(P) + " < 2");
    const Modulus mod = Modulus::aug_cycle(P);
    const long long E = mod_nonneg((m + n) * (m + n) * delta - m * n * gamma, P);
    Residue num(mod, LaurentPoly::tn_minus_1(mod_nonneg(m * n, P)));
    Residue v = num * torsion_detail::inv_tk_minus_1(mod, m) *
                torsion_detail::inv_tk_minus_1(mod, n) *
                torsion_detail::inv_tk_minus_1(mod, E);
    return {P, v, "psi_d (T with (m+n)u - mn v = 1), E = " + std::to_string(E)};
}

inline TorsionSequence torsion_A_mn_r(long long m, long long n, long long alpha,
                                      long long beta)
{
    auto [gamma, delta] = continuant_pair(alpha, beta);
    return torsion_A_mn_r(m, n, alpha, beta, gamma, delta);
}

/* tau^{psi_d}((A_{2,3}; 7, alpha/beta)) = (t-1)^{-1}(t^{7 gamma - 25 delta}-1)^{-1}
 * mod nu_P with P = 25 beta - 7 alpha. */
inline TorsionSequence torsion_A_23_7_r(long long alpha, long long beta,
                                        long long gamma, long long delta)
{
    torsion_detail::check_surgery_coeff(alpha, beta);
    if (alpha * delta - beta * gamma != -1)
        throw std::invalid_argument("torsion_A_23_7_r: need alpha*delta - beta*gamma = -1");
    const long long P = 25 * beta - 7 * alpha;
    if (P < 2)
        throw std::domain_error("torsion_A_23_7_r: order P = " + std::to_string(P) + " < 2");
    const Modulus mod = Modulus::aug_cycle(P);
    const long long E = mod_nonneg(7 * gamma - 25 * delta, P);
    Residue v = torsion_detail::inv_tk_minus_1(mod, 1) * torsion_detail::inv_tk_minus_1(mod, E);
    return {P, v, "psi_d, E = " + std::to_string(E)};
}

inline TorsionSequence torsion_A_23_7_r(long long alpha, long long beta)
{
    auto [gamma, delta] = continuant_pair(alpha, beta);
    return torsion_A_23_7_r(alpha, beta, gamma, delta);
}

/* d-norm N_d(x(zeta_d)) computed exactly as Res(Phi_d, x). Laurent input is
 * pre-shifted to nonnegative exponents; the shift contributes 1 for d >= 3
 * and the sign (-1)^k for d = 2. */
inline Rational dnorm(const LaurentPoly& x, long long d)
{
    if (d < 2)
        throw std::invalid_argument("dnorm: d must be >= 2");
    if (x.is_zero())
        return Rational(0);
    long long shift = std::min<long long>(0, x.min_exp());
    Rational r = qp::resultant(qp::cyclotomic(d), x.shifted(-shift).to_dense());
    if (d == 2 && mod_nonneg(shift, 2) == 1)
        r = -r;
    return r;
}

struct DNormReport {
    bool passes = false;
    long long alpha_prime = 0;
    std::vector<std::pair<long long, Rational>> values; // (d, N_d(beta R - alpha))
};

/* Lemma-level necessary condition: |N_d(beta R(m,n) - alpha)| = 1 for every
 * divisor d >= 2 of m+n, together with alpha' = alpha - mn beta >= 0. */
inline DNormReport dnorm_condition_A(long long m, long long n, long long alpha,
                                     long long beta)
{
    check_A_params(m, n);
    torsion_detail::check_surgery_coeff(alpha, beta);
    const long long N = m + n;
    Residue num = r_value(m, n, 4) * to_rational(beta) -
                  Residue(Modulus::aug_cycle(N), to_rational(alpha));
    DNormReport report;
    report.alpha_prime = alpha - m * n * beta;
    report.passes = report.alpha_prime >= 0;
    LaurentPoly rep = num.to_laurent();
    for (long long d : divisors(N)) {
        if (d < 2)
            continue;
        Rational v = dnorm(rep, d);
        if (v != 1 && v != -1)
            report.passes = false;
        report.values.emplace_back(d, v);
    }
    return report;
}

/* Franz: {±a_i mod p} = {±b_i mod p} as multisets; entries must be units. */
inline bool franz_equal(const std::vector<long long>& a, const std::vector<long long>& b,
                        long long p)
{
    if (p < 2)
        throw std::invalid_argument("franz_equal: p must be >= 2");
    auto normalize = [&](const std::vector<long long>& xs) {
        std::vector<long long> out;
        out.reserve(xs.size());
        for (long long x : xs) {
            long long r = mod_nonneg(x, p);
            if (gcd_ll(r, p) != 1)
                throw std::invalid_argument("franz_equal: entry " + std::to_string(x) +
                                            " not coprime to " + std::to_string(p));
            out.push_back(std::min(r, p - r));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return normalize(a) == normalize(b);
}

/* Solutions of {±(m-1), ±(m+1), ±i, ±j} = {±1, ±1, ±m, ±m} (mod m+n) over
 * coprime 2 <= m < n with m+n <= bound and (i,j) in the standard range
 * 1 <= i <= j, i+j even, i+j <= m+n-1, all entries units mod m+n. */
inline std::vector<std::array<long long, 4>> franz_solve_mnplus1(long long bound)
{
    if (bound < 5)
        throw std::invalid_argument("franz_solve_mnplus1: bound must be >= 5");
    std::vector<std::array<long long, 4>> solutions;
    for (long long m = 2; 2 * m + 1 <= bound; ++m) {
        for (long long n = m + 1; m + n <= bound; ++n) {
            if (gcd_ll(m, n) != 1)
                continue;
            const long long p = m + n;
            if (gcd_ll(m - 1, p) != 1 || gcd_ll(m + 1, p) != 1 || gcd_ll(m, p) != 1)
                continue;
            for (long long i = 1; i <= p - 1; ++i) {
                if (gcd_ll(i, p) != 1)
                    continue;
                for (long long j = i; i + j <= p - 1; ++j) {
                    if ((i + j) % 2 != 0 || gcd_ll(j, p) != 1)
                        continue;
                    if (franz_equal({m - 1, m + 1, i, j}, {1, 1, m, m}, p))
                        solutions.push_back({m, n, i, j});
                }
            }
        }
    }
    return solutions;
}

/* Type of the lens space (A_{m,n}; mn, 0): L((m+n)^2, m nbar). The sign
 * choice +m nbar is forced: -m nbar would give pq = nbar(n-m) mod p^2 whose
 * gcd with p^2 = (m+n)^2 cannot equal m+n. */
inline LensType lens_type_A_mn(long long m, long long n)
{
    check_A_params(m, n);
    const long long P = (m + n) * (m + n);
    return {P, mod_nonneg(m * mod_inverse(n, P), P), true};
}

} // namespace lenstor

#endif
