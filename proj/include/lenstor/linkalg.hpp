#ifndef LENSTOR_LINKALG_HPP
#define LENSTOR_LINKALG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lenstor/bilaurent.hpp"
#include "lenstor/cutseq.hpp"
#include "lenstor/laurent.hpp"

/* Exact Alexander polynomials of the two link families: the closed form
 * over the cut set, the Alexander-matrix determinant oracle, and the
 * structural identities (Torres specialization, self-symmetry, eigenvector
 * identity) used to certify them. */

namespace lenstor {

/* Delta_{A_{m,n}}(t, x) = sum_i t^{k_i} x^i over the cut sequence. */
inline BiLaurentPoly alexander_A(long long m, long long n)
{
    CutSequence cs = cut_sequence(m, n);
    BiLaurentPoly p;
    for (long long i = 0; i < m + n; ++i)
        p.add_term(cs.k[i], i, 1);
    return p;
}

inline void check_B_params(long long p, long long q)
{
    if (!(p >= 2 && q >= 1 && gcd_ll(p, q) == 1))
        throw std::invalid_argument("need coprime p >= 2, q >= 1, got (" +
                                    std::to_string(p) + ", " + std::to_string(q) + ")");
}

/* Delta_{B_{p,q}}(t, x) = (t^{pq} x^p - 1)/(t^q x - 1) = sum_k t^{qk} x^k. */
inline BiLaurentPoly alexander_B(long long p, long long q)
{
    check_B_params(p, q);
    BiLaurentPoly r;
    for (long long k = 0; k < p; ++k)
        r.add_term(q * k, k, 1);
    return r;
}

struct AlexMatrix {
    long long size = 0;
    std::vector<std::vector<LaurentPoly>> entries;
};

/* M(m,n), the (m+n-1)-square matrix whose block form is
 *   [ O          -(t,..,t^{n-1})^T   I_{n-1} ]
 *   [ o          -t^n                o       ]
 *   [ t^n I_{m-1} -t^n (1,..,1)^T    O       ]
 */
inline AlexMatrix alexander_A_matrix(long long m, long long n)
{
    check_A_params(m, n);
    AlexMatrix M;
    M.size = m + n - 1;
    M.entries.assign(M.size, std::vector<LaurentPoly>(M.size));
    const long long mid = m - 1; // 0-based index of the special column
    for (long long i = 0; i < n - 1; ++i) {
        M.entries[i][mid] = LaurentPoly::monomial(i + 1, -1);
        M.entries[i][m + i] = LaurentPoly::constant(1);
    }
    M.entries[n - 1][mid] = LaurentPoly::monomial(n, -1);
    for (long long j = 0; j < m - 1; ++j) {
        M.entries[n + j][j] = LaurentPoly::monomial(n, 1);
        M.entries[n + j][mid] = LaurentPoly::monomial(n, -1);
    }
    return M;
}

namespace linkalg_detail {

/* Fraction-free (Bareiss) determinant over Q[t^-1, t, x]; row swaps on zero
 * pivots, every division exact. */
inline BiLaurentPoly bareiss_det(std::vector<std::vector<BiLaurentPoly>> a)
{
    const size_t sz = a.size();
    int sign = 1;
    BiLaurentPoly prev = BiLaurentPoly::constant(1);
    for (size_t k = 0; k + 1 < sz; ++k) {
        size_t pivot = k;
        while (pivot < sz && a[pivot][k].is_zero())
            ++pivot;
        if (pivot == sz)
            return {};
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < sz; ++i) {
            for (size_t j = k + 1; j < sz; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).div_exact(prev);
            a[i][k] = BiLaurentPoly();
        }
        prev = a[k][k];
    }
    BiLaurentPoly det = a[sz - 1][sz - 1];
    return sign < 0 ? -det : det;
}

} // namespace linkalg_detail

/* det(I - x M(m,n)), computed independently of the closed form and returned
 * unit-normalized. Intended for m+n up to ~14. */
inline BiLaurentPoly alexander_A_det_oracle(long long m, long long n)
{
    AlexMatrix M = alexander_A_matrix(m, n);
    std::vector<std::vector<BiLaurentPoly>> a(
        M.size, std::vector<BiLaurentPoly>(M.size));
    for (long long i = 0; i < M.size; ++i)
        for (long long j = 0; j < M.size; ++j) {
            for (const auto& [e, c] : M.entries[i][j].terms())
                a[i][j].add_term(e, 1, -c); // -x * M
            if (i == j)
                a[i][j].add_term(0, 0, 1);
        }
    BiLaurentPoly det = linkalg_detail::bareiss_det(std::move(a));
    return normalize_unit_bi(det);
}

namespace linkalg_detail {

/* Rewrites x^{m+n-1} -> -sum_{i<m+n-1} t^{k_i - mn} x^i until every
 * x-exponent is below m+n-1. */
inline BiLaurentPoly reduce_by_cut_relation(BiLaurentPoly p, const CutSequence& cs)
{
    const long long top = cs.m + cs.n - 1;
    const long long mn = cs.m * cs.n;
    while (!p.is_zero() && p.max_x_exp() >= top) {
        const long long K = p.max_x_exp();
        BiLaurentPoly rest, expanded;
        for (const auto& [e, c] : p.terms()) {
            if (e.second != K) {
                rest.add_term(e.first, e.second, c);
                continue;
            }
            for (long long i = 0; i < top; ++i)
                expanded.add_term(e.first + cs.k[i] - mn, K - top + i, -c);
        }
        p = rest + expanded;
    }
    return p;
}

} // namespace linkalg_detail

/* Lemma-level identity v M(m,n) = x^{-1} v for the row vector built from
 * e_i = t^{sigma(i)m - i} x^{u_{sigma(i)}}, f = x e_{n-m}, g_i = t^{-n} x^{-1} e_i,
 * verified symbolically modulo the relation sum_i t^{k_i} x^i = 0. */
inline bool eigen_identity_check(long long m, long long n)
{
    CutSequence cs = cut_sequence(m, n);
    const long long sz = m + n - 1;

    std::vector<BiLaurentPoly> v(sz);
    auto e = [&](long long i) {
        return BiLaurentPoly::monomial(cs.sigma[i] * m - i, cs.u[cs.sigma[i]]);
    };
    for (long long i = 1; i <= n - 1; ++i)
        v[i - 1] = e(i);
    v[n - 1] = e(n - m).shifted(0, 1);
    for (long long i = 1; i <= m - 1; ++i)
        v[n - 1 + i] = e(i).shifted(-n, -1);

    AlexMatrix M = alexander_A_matrix(m, n);
    for (long long col = 0; col < sz; ++col) {
        BiLaurentPoly w; // (v . M)_col
        for (long long row = 0; row < sz; ++row) {
            for (const auto& [te, c] : M.entries[row][col].terms())
                w += v[row].shifted(te, 0) * Rational(c);
        }
        BiLaurentPoly delta = w.shifted(0, 1) - v[col]; // x*(vM)_col - v_col
        if (!linkalg_detail::reduce_by_cut_relation(delta, cs).is_zero())
            return false;
    }
    return true;
}

/* Torres specialization: Delta_A(t,1) equals, up to unit,
 * (t^{m+n}-1)(t^{mn}-1) / ((t^m-1)(t^n-1)), computed by exact division. */
inline bool torres_check_A(long long m, long long n)
{
    LaurentPoly lhs = normalize_unit(alexander_A(m, n).at_x_one());
    LaurentPoly num = LaurentPoly::tn_minus_1(m + n) * LaurentPoly::tn_minus_1(m * n);
    LaurentPoly rhs = num.div_exact(LaurentPoly::tn_minus_1(m))
                          .div_exact(LaurentPoly::tn_minus_1(n));
    return lhs == normalize_unit(rhs);
}

/* Self-symmetry: Delta_A(T^{m+n}, T^{-mn}) = sum T^{k'_i} with
 * k'_i = k_i(m+n) - i mn; its exponent set must be I(m,n) itself. */
inline bool selfsym_check_A(long long m, long long n)
{
    CutSequence cs = cut_sequence(m, n);
    LaurentPoly sub = alexander_A(m, n).subst_powers(m + n, -(m * n));
    if (sub.coeff(0) != 1 || sub.coeff(m * n) != 1)
        return false;
    std::vector<long long> exps;
    for (const auto& [e, c] : sub.terms()) {
        if (c != 1)
            return false;
        exps.push_back(e);
    }
    return exps == cs.k;
}

} // namespace lenstor

#endif
