#ifndef LENSTOR_CUTSEQ_HPP
#define LENSTOR_CUTSEQ_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lenstor/rational.hpp"

/* The cut set I(m,n): multiples of m or n in [0, mn], sorted as
 * 0 = k_0 < k_1 < ... < k_{m+n-1} = mn, together with the index sequences
 * u_j (positions of multiples of m), w_j (multiples of n), the permutation
 * sigma(i) = [i*mbar]_n, its companion rho, and s_j = [jn]_m. */

namespace lenstor {

struct CutSequence {
    long long m = 0, n = 0;
    std::vector<long long> k;     // size m+n
    std::vector<long long> u;     // size n+1, k[u[j]] == j*m
    std::vector<long long> w;     // size m+1, k[w[j]] == j*n
    std::vector<long long> sigma; // size n, sigma[i] = [i*mbar]_n
    std::vector<long long> rho;   // size m, entries 1..m-1 used; rho[i] = (sigma[i]*m - i)/n
    std::vector<long long> s;     // size m+1, s[j] = [j*n]_m
};

inline void check_A_params(long long m, long long n)
{
    if (!(2 <= m && m < n && gcd_ll(m, n) == 1))
        throw std::invalid_argument("need coprime 2 <= m < n, got (" + std::to_string(m) +
                                    ", " + std::to_string(n) + ")");
}

inline CutSequence cut_sequence(long long m, long long n)
{
    check_A_params(m, n);
    CutSequence cs;
    cs.m = m;
    cs.n = n;

    std::set<long long> cuts;
    for (long long j = 0; j <= n; ++j)
        cuts.insert(j * m);
    for (long long j = 0; j <= m; ++j)
        cuts.insert(j * n);
    cs.k.assign(cuts.begin(), cuts.end());

    auto fail = [&](const std::string& what) {
        throw std::logic_error("cut_sequence(" + std::to_string(m) + "," +
                               std::to_string(n) + "): invariant failed: " + what);
    };

    const long long sz = m + n;
    if (static_cast<long long>(cs.k.size()) != sz)
        fail("|I(m,n)| == m+n");
    if (cs.k.front() != 0 || cs.k.back() != m * n)
        fail("k_0 == 0 and k_last == mn");
    for (long long i = 0; i < sz; ++i)
        if (cs.k[i] + cs.k[sz - 1 - i] != m * n)
            fail("k_i + k_{m+n-1-i} == mn");

    auto position = [&](long long value) {
        auto it = std::lower_bound(cs.k.begin(), cs.k.end(), value);
        return static_cast<long long>(it - cs.k.begin());
    };
    cs.u.resize(n + 1);
    for (long long j = 0; j <= n; ++j)
        cs.u[j] = position(j * m);
    cs.w.resize(m + 1);
    for (long long j = 0; j <= m; ++j)
        cs.w[j] = position(j * n);

    for (long long j = 1; j <= n - 1; ++j)
        if (cs.u[j] != (j * m) / n + j)
            fail("u_j == [jm/n] + j");
    for (long long j = 1; j <= m - 1; ++j)
        if (cs.w[j] != (j * n) / m + j)
            fail("w_j == [jn/m] + j");
    for (long long j = 0; j < n; ++j)
        if (cs.u[j] >= cs.u[j + 1])
            fail("u strictly increasing");
    for (long long j = 0; j < m; ++j)
        if (cs.w[j] >= cs.w[j + 1])
            fail("w strictly increasing");
    for (long long j = 0; j <= n; ++j)
        if (cs.u[j] + cs.u[n - j] != sz - 1)
            fail("u_j + u_{n-j} == m+n-1");
    for (long long j = 0; j <= m; ++j)
        if (cs.w[j] + cs.w[m - j] != sz - 1)
            fail("w_j + w_{m-j} == m+n-1");

    const long long mbar = mod_inverse(m, n);
    cs.sigma.resize(n);
    for (long long i = 0; i < n; ++i)
        cs.sigma[i] = mod_nonneg(i * mbar, n);
    {
        std::set<long long> image(cs.sigma.begin(), cs.sigma.end());
        if (static_cast<long long>(image.size()) != n)
            fail("sigma bijective");
    }

    cs.rho.assign(m, 0);
    const long long nbar = mod_inverse(n, m);
    for (long long i = 1; i <= m - 1; ++i) {
        long long num = cs.sigma[i] * m - i;
        if (num % n != 0)
            fail("rho integral");
        cs.rho[i] = num / n;
        if (cs.rho[i] != mod_nonneg((m - i) * nbar, m))
            fail("rho(i) == [(m-i)*nbar]_m");
    }
    {
        std::set<long long> image(cs.rho.begin() + 1, cs.rho.end());
        if (static_cast<long long>(image.size()) != m - 1 || *image.begin() < 1 ||
            *image.rbegin() > m - 1)
            fail("rho bijective on {1..m-1}");
    }
    for (long long i = 1; i <= m - 1; ++i)
        if (cs.w[cs.rho[i]] != cs.u[cs.sigma[i]] - 1)
            fail("w_{rho(i)} == u_{sigma(i)} - 1");

    cs.s.resize(m + 1);
    for (long long j = 0; j <= m; ++j)
        cs.s[j] = mod_nonneg(j * n, m);

    return cs;
}

} // namespace lenstor

#endif
