#ifndef LENSTOR_SELFCHECK_HPP
#define LENSTOR_SELFCHECK_HPP

#include <functional>
#include <string>
#include <vector>

#include "lenstor/cutseq.hpp"
#include "lenstor/linkalg.hpp"
#include "lenstor/torsion.hpp"

/* Desk-scale invariant suites behind the `selfcheck` command: cut-sequence
 * laws, agreement of the closed forms of R(m,n), the d-norm tables, and the
 * Franz multiset solve. */

namespace lenstor {

struct SuiteResult {
    std::string suite;
    long long checks = 0;
    bool pass = true;
    std::string failure; // first failing instance
};

namespace selfcheck_detail {

inline void expect(SuiteResult& r, bool ok, const std::string& instance)
{
    ++r.checks;
    if (!ok && r.pass) {
        r.pass = false;
        r.failure = instance;
    }
}

template <typename Fn>
inline void for_coprime_pairs(long long max_mn, Fn&& fn)
{
    for (long long s = 5; s <= max_mn; ++s)
        for (long long m = 2; 2 * m < s; ++m)
            if (gcd_ll(m, s - m) == 1)
                fn(m, s - m);
}

} // namespace selfcheck_detail

inline SuiteResult check_cut_sequence_laws(long long max_mn)
{
    SuiteResult r{"cut-sequence-laws"};
    selfcheck_detail::for_coprime_pairs(max_mn, [&](long long m, long long n) {
        std::string inst = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
        try {
            CutSequence cs = cut_sequence(m, n); // type invariants verified on construction
            selfcheck_detail::expect(r, cs.sigma[0] == 0, inst + " sigma(0)=0");
            selfcheck_detail::expect(r, cs.sigma[m] == 1, inst + " sigma(m)=1");
            selfcheck_detail::expect(r, cs.sigma[n - m] == n - 1, inst + " sigma(n-m)=n-1");
            for (long long i = 1; i <= n - 1; ++i) {
                if (i == n - m)
                    continue;
                long long diff = cs.u[cs.sigma[i] + 1] - cs.u[cs.sigma[i]];
                bool two = (n - m + 1 <= i && i <= n - 1);
                selfcheck_detail::expect(r, diff == (two ? 2 : 1),
                                         inst + " u-increment at i=" + std::to_string(i));
            }
            for (long long i = 1; i <= n - m - 1; ++i)
                selfcheck_detail::expect(r, cs.sigma[m + i] == cs.sigma[i] + 1,
                                         inst + " sigma(m+i)=sigma(i)+1");
            for (long long i = 1; i <= m - 1; ++i)
                selfcheck_detail::expect(r, cs.sigma[n - m + i] == cs.sigma[i] - 1,
                                         inst + " sigma(n-m+i)=sigma(i)-1");
            for (long long i = 1; i <= m - 1; ++i)
                selfcheck_detail::expect(r, cs.w[cs.rho[i]] == cs.u[cs.sigma[i]] - 1,
                                         inst + " w_rho=u_sigma-1");
        } catch (const std::exception& ex) {
            selfcheck_detail::expect(r, false, inst + " threw: " + ex.what());
        }
    });
    return r;
}

inline SuiteResult check_r_form_agreement(long long max_mn)
{
    SuiteResult r{"r-form-agreement"};
    selfcheck_detail::for_coprime_pairs(max_mn, [&](long long m, long long n) {
        std::string inst = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
        try {
            Residue f1 = r_value(m, n, 1);
            Residue f2 = r_value(m, n, 2);
            Residue f3 = r_value(m, n, 3);
            Residue f4 = r_value(m, n, 4);
            selfcheck_detail::expect(r, f1 == f2, inst + " form1=form2");
            selfcheck_detail::expect(r, f2 == f3, inst + " form2=form3");
            long long mbar = mod_inverse(m, m + n);
            selfcheck_detail::expect(r, f4.subst_exponents(mbar) == f3,
                                     inst + " form4(xi=zeta^mbar)=form3");
            selfcheck_detail::expect(r, r_value_closed_form(m, n) == f4,
                                     inst + " closed form=form4");
            selfcheck_detail::expect(r, f1.conjugate() == f1, inst + " conjugation-invariant");
        } catch (const std::exception& ex) {
            selfcheck_detail::expect(r, false, inst + " threw: " + ex.what());
        }
    });
    return r;
}

inline SuiteResult check_norm_tables(long long max_d = 60)
{
    SuiteResult r{"norm-tables"};
    auto prime_power_base = [](long long d) -> long long {
        for (long long p = 2; p * p <= d; ++p)
            if (d % p == 0) {
                while (d % p == 0)
                    d /= p;
                return d == 1 ? p : 0;
            }
        return d; // d is prime (or 1)
    };
    LaurentPoly one_minus_t = LaurentPoly::constant(1) - LaurentPoly::monomial(1);
    for (long long d = 2; d <= max_d; ++d) {
        std::string inst = "d=" + std::to_string(d);
        long long ell = prime_power_base(d);
        Rational expected = ell > 0 ? to_rational(ell) : Rational(1);
        selfcheck_detail::expect(r, dnorm(one_minus_t, d) == expected, inst + " N_d(1-t)");
        Rational nt = dnorm(LaurentPoly::monomial(1), d);
        selfcheck_detail::expect(r, nt == (d == 2 ? Rational(-1) : Rational(1)),
                                 inst + " N_d(t)");
    }
    return r;
}

inline SuiteResult check_franz_solve(long long bound = 16)
{
    SuiteResult r{"franz-solve"};
    auto sols = franz_solve_mnplus1(bound);
    selfcheck_detail::expect(r, sols.size() == 1, "solution count");
    if (!sols.empty())
        selfcheck_detail::expect(r, sols[0] == std::array<long long, 4>{2, 3, 1, 3},
                                 "solution value");
    return r;
}

inline std::vector<SuiteResult> run_selfcheck(long long max_mn = 16)
{
    return {check_cut_sequence_laws(std::max<long long>(40, max_mn)),
            check_r_form_agreement(max_mn),
            check_norm_tables(),
            check_franz_solve()};
}

} // namespace lenstor

#endif
