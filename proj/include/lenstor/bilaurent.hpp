#ifndef LENSTOR_BILAURENT_HPP
#define LENSTOR_BILAURENT_HPP

#include <map>
#include <stdexcept>
#include <utility>

#include "lenstor/laurent.hpp"
#include "lenstor/rational.hpp"

/* Sparse Laurent polynomials in two variables t, x over Q. Keys are
 * (t-exponent, x-exponent) pairs in lexicographic order. */

namespace lenstor {

class BiLaurentPoly {
public:
    using Exp = std::pair<long long, long long>; // (t-exp, x-exp)
    using TermMap = std::map<Exp, Rational>;

    BiLaurentPoly() = default;

    static BiLaurentPoly constant(const Rational& c)
    {
        BiLaurentPoly p;
        p.add_term(0, 0, c);
        return p;
    }

    static BiLaurentPoly monomial(long long te, long long xe, const Rational& c = Rational(1))
    {
        BiLaurentPoly p;
        p.add_term(te, xe, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(long long te, long long xe) const
    {
        auto it = terms_.find({te, xe});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(long long te, long long xe, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, fresh] = terms_.emplace(Exp{te, xe}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    BiLaurentPoly operator-() const
    {
        BiLaurentPoly r = *this;
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }

    BiLaurentPoly& operator+=(const BiLaurentPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e.first, e.second, c);
        return *this;
    }

    BiLaurentPoly& operator-=(const BiLaurentPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e.first, e.second, -c);
        return *this;
    }

    friend BiLaurentPoly operator+(BiLaurentPoly a, const BiLaurentPoly& b) { return a += b; }
    friend BiLaurentPoly operator-(BiLaurentPoly a, const BiLaurentPoly& b) { return a -= b; }

    friend BiLaurentPoly operator*(const BiLaurentPoly& a, const BiLaurentPoly& b)
    {
        BiLaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }

    friend BiLaurentPoly operator*(const BiLaurentPoly& a, const Rational& c)
    {
        BiLaurentPoly r;
        for (const auto& [e, x] : a.terms_)
            r.add_term(e.first, e.second, x * c);
        return r;
    }

    friend bool operator==(const BiLaurentPoly& a, const BiLaurentPoly& b)
    {
        return a.terms_ == b.terms_;
    }

    long long min_t_exp() const { return min_exp(&Exp::first); }
    long long min_x_exp() const { return min_exp(&Exp::second); }
    long long max_x_exp() const
    {
        require_nonzero();
        long long m = terms_.begin()->first.second;
        for (const auto& [e, c] : terms_)
            m = std::max(m, e.second);
        return m;
    }

    /* substitute x = 1 */
    LaurentPoly at_x_one() const
    {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            r.add_term(e.first, c);
        return r;
    }

    /* t -> T^a, x -> T^b (one-variable image) */
    LaurentPoly subst_powers(long long a, long long b) const
    {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            r.add_term(e.first * a + e.second * b, c);
        return r;
    }

    BiLaurentPoly shifted(long long dt, long long dx) const
    {
        BiLaurentPoly r;
        for (const auto& [e, c] : terms_)
            r.add_term(e.first + dt, e.second + dx, c);
        return r;
    }

    /* Exact division in Q[t^-1, t, x^-1, x]; throws if not exact. Reduction is
     * by leading-term elimination in the lexicographic (t,x) order after both
     * operands are shifted to nonnegative exponents, which makes the order a
     * well-order and guarantees termination. */
    BiLaurentPoly div_exact(const BiLaurentPoly& d) const
    {
        if (d.is_zero())
            throw std::invalid_argument("div_exact: division by zero");
        if (is_zero())
            return {};
        BiLaurentPoly num = shifted(-min_t_exp(), -min_x_exp());
        BiLaurentPoly den = d.shifted(-d.min_t_exp(), -d.min_x_exp());
        BiLaurentPoly q;
        const auto& dlead = *den.terms_.rbegin();
        while (!num.is_zero()) {
            const auto& nlead = *num.terms_.rbegin();
            long long dt = nlead.first.first - dlead.first.first;
            long long dx = nlead.first.second - dlead.first.second;
            if (dt < 0 || dx < 0)
                throw std::domain_error("div_exact: division not exact");
            Rational c = nlead.second / dlead.second;
            q.add_term(dt, dx, c);
            for (const auto& [e, dc] : den.terms_)
                num.add_term(e.first + dt, e.second + dx, -c * dc);
        }
        return q.shifted(min_t_exp() - d.min_t_exp(), min_x_exp() - d.min_x_exp());
    }

private:
    long long min_exp(long long Exp::* coord) const
    {
        require_nonzero();
        long long m = terms_.begin()->first.*coord;
        for (const auto& [e, c] : terms_)
            m = std::min(m, e.*coord);
        return m;
    }

    void require_nonzero() const
    {
        if (terms_.empty())
            throw std::domain_error("operation on zero polynomial");
    }

    TermMap terms_;
};

/* Canonical representative up to ± t^a x^b: both exponent minima shifted to 0,
 * sign fixed so the lexicographically least exponent has positive coefficient. */
inline BiLaurentPoly normalize_unit_bi(const BiLaurentPoly& p)
{
    if (p.is_zero())
        throw std::domain_error("zero has no unit normalization");
    BiLaurentPoly r = p.shifted(-p.min_t_exp(), -p.min_x_exp());
    if (r.terms().begin()->second < 0)
        r = -r;
    return r;
}

} // namespace lenstor

#endif
