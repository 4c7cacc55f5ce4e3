#ifndef LENSTOR_SYMPOLY_HPP
#define LENSTOR_SYMPOLY_HPP

#include <map>
#include <optional>
#include <stdexcept>

#include "lenstor/laurent.hpp"
#include "lenstor/rational.hpp"
#include "lenstor/residue.hpp"

/* Symmetric Laurent polynomials a_0 + sum a_i <t^i> in the basis
 * <t^i> = t^i + t^{-i}, with the reduction red(.) modulo t^N - 1 and
 * control-equivalence testing of the induced value sequences. */

namespace lenstor {

class SymPoly {
public:
    SymPoly() = default;

    explicit SymPoly(const Rational& a0) : a0_(a0) {}

    static SymPoly bracket(long long i, const Rational& c = Rational(1))
    {
        SymPoly p;
        p.add_bracket(i, c);
        return p;
    }

    const Rational& a0() const { return a0_; }
    const std::map<long long, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(long long i) const
    {
        if (i == 0)
            return a0_;
        auto it = coeffs_.find(i < 0 ? -i : i);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return a0_ == 0 && coeffs_.empty(); }

    std::optional<long long> context() const { return context_; }
    SymPoly with_context(long long N) const
    {
        SymPoly p = *this;
        p.context_ = N;
        return p;
    }

    /* add c * <t^i>; <t^0> = 2 and <t^-i> = <t^i> */
    void add_bracket(long long i, const Rational& c)
    {
        if (c == 0)
            return;
        if (i < 0)
            i = -i;
        if (i == 0) {
            a0_ += 2 * c;
            return;
        }
        auto [it, fresh] = coeffs_.emplace(i, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                coeffs_.erase(it);
        }
    }

    void add_constant(const Rational& c) { a0_ += c; }

    SymPoly operator-() const
    {
        SymPoly r = *this;
        r.a0_ = -r.a0_;
        for (auto& [i, c] : r.coeffs_)
            c = -c;
        return r;
    }

    SymPoly& operator+=(const SymPoly& o)
    {
        a0_ += o.a0_;
        for (const auto& [i, c] : o.coeffs_) {
            auto [it, fresh] = coeffs_.emplace(i, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0)
                    coeffs_.erase(it);
            }
        }
        return *this;
    }

    SymPoly& operator-=(const SymPoly& o) { return *this += -o; }

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }

    friend SymPoly operator*(const SymPoly& a, const Rational& c)
    {
        SymPoly r;
        if (c == 0)
            return r;
        r.a0_ = a.a0_ * c;
        for (const auto& [i, x] : a.coeffs_)
            r.coeffs_.emplace(i, x * c);
        r.context_ = a.context_;
        return r;
    }

    friend SymPoly operator*(const Rational& c, const SymPoly& a) { return a * c; }

    /* products stay symmetric: <a><b> = <a+b> + <a-b> */
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b)
    {
        return from_laurent(a.to_laurent() * b.to_laurent());
    }

    /* structural equality of coefficients (context ignored) */
    friend bool operator==(const SymPoly& a, const SymPoly& b)
    {
        return a.a0_ == b.a0_ && a.coeffs_ == b.coeffs_;
    }

    Rational eval_at_one() const
    {
        Rational s = a0_;
        for (const auto& [i, c] : coeffs_)
            s += 2 * c;
        return s;
    }

    LaurentPoly to_laurent() const
    {
        LaurentPoly p;
        p.add_term(0, a0_);
        for (const auto& [i, c] : coeffs_) {
            p.add_term(i, c);
            p.add_term(-i, c);
        }
        return p;
    }

    /* inverse of to_laurent; throws if p is not symmetric */
    static SymPoly from_laurent(const LaurentPoly& p)
    {
        SymPoly r;
        r.a0_ = p.coeff(0);
        for (const auto& [e, c] : p.terms()) {
            if (e <= 0)
                continue;
            if (p.coeff(-e) != c)
                throw std::domain_error("from_laurent: polynomial is not symmetric");
            r.coeffs_.emplace(e, c);
        }
        for (const auto& [e, c] : p.terms())
            if (e < 0 && p.coeff(-e) != c)
                throw std::domain_error("from_laurent: polynomial is not symmetric");
        return r;
    }

private:
    Rational a0_;
    std::map<long long, Rational> coeffs_;
    std::optional<long long> context_;
};

/* red(F): the canonical representative modulo t^N - 1 with indices <= [N/2].
 * Index i folds to min(i mod N, N - (i mod N)); a fold to 0 contributes twice
 * the coefficient to the constant term since <t^0> = 2. */
inline SymPoly sym_reduce(const SymPoly& f, long long N)
{
    if (N < 2)
        throw std::invalid_argument("sym_reduce: N must be >= 2");
    SymPoly r(f.a0());
    for (const auto& [i, c] : f.coeffs()) {
        long long m = mod_nonneg(i, N);
        long long fold = std::min(m, N - m);
        if (fold == 0)
            r.add_constant(2 * c);
        else
            r.add_bracket(fold, c);
    }
    return r.with_context(N);
}

inline bool sym_is_reduced(const SymPoly& f, long long N)
{
    return f.coeffs().empty() || f.coeffs().rbegin()->first <= N / 2;
}

/* 2 * (largest index with nonzero coefficient); 0 for constants. */
inline long long sym_span(const SymPoly& f)
{
    if (f.is_zero())
        throw std::domain_error("span of zero polynomial");
    if (f.coeffs().empty())
        return 0;
    return 2 * f.coeffs().rbegin()->first;
}

/* red(t^{N/2} F) for even N and F reduced: b_0 = 2 a_{N/2}, b_{N/2} = a_0 / 2,
 * b_j = a_{N/2-j}. */
inline SymPoly sym_shift_half(const SymPoly& f, long long N)
{
    if (N % 2 != 0)
        throw std::invalid_argument("sym_shift_half: N must be even");
    if (!sym_is_reduced(f, N))
        throw std::invalid_argument("sym_shift_half: input not reduced");
    const long long h = N / 2;
    SymPoly r(2 * f.coeff(h));
    r.add_bracket(h, f.a0() / 2);
    for (long long j = 1; j <= h - 1; ++j)
        r.add_bracket(j, f.coeff(h - j));
    return r.with_context(N);
}

inline Residue sym_to_residue(const SymPoly& f, long long N)
{
    return Residue(Modulus::aug_cycle(N), f.to_laurent());
}

/* Equality of the induced value sequences {F(zeta_d)}_{d|N, d>=2}, decided
 * symbolically as congruence modulo nu_N. */
inline bool value_seq_equal(const SymPoly& f, const SymPoly& g, long long N)
{
    return sym_to_residue(f, N) == sym_to_residue(g, N);
}

/* The unit search of the real-value-sequence case: candidates are exactly
 * +1, -1, +t^{N/2}, -t^{N/2} (the last two only for even N), tried in this
 * order; returns the first u with u*F and G inducing equal value sequences. */
inline std::optional<TrivialUnit> control_equivalent(const SymPoly& f, const SymPoly& g,
                                                     long long N)
{
    const Residue rf = sym_to_residue(f, N);
    const Residue rg = sym_to_residue(g, N);
    std::vector<TrivialUnit> candidates = {{+1, 0}, {-1, 0}};
    if (N % 2 == 0) {
        candidates.push_back({+1, N / 2});
        candidates.push_back({-1, N / 2});
    }
    for (const TrivialUnit& u : candidates) {
        Residue uf = rf * Residue(rf.modulus(), LaurentPoly::monomial(u.shift, u.sign));
        if (uf == rg)
            return u;
    }
    return std::nullopt;
}

} // namespace lenstor

#endif
