#ifndef LENSTOR_LAURENT_HPP
#define LENSTOR_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "lenstor/qpoly.hpp"
#include "lenstor/rational.hpp"

/* Sparse Laurent polynomials in one variable t over Q: a finite map from
 * integer exponents to nonzero coefficients. */

namespace lenstor {

class LaurentPoly {
public:
    using TermMap = std::map<long long, Rational>;

    LaurentPoly() = default;

    static LaurentPoly constant(const Rational& c)
    {
        LaurentPoly p;
        p.add_term(0, c);
        return p;
    }

    static LaurentPoly monomial(long long e, const Rational& c = Rational(1))
    {
        LaurentPoly p;
        p.add_term(e, c);
        return p;
    }

    /* t^n - 1 */
    static LaurentPoly tn_minus_1(long long n)
    {
        LaurentPoly p;
        p.add_term(n, 1);
        p.add_term(0, -1);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(long long e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(long long e, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    long long min_exp() const
    {
        require_nonzero("min_exp");
        return terms_.begin()->first;
    }

    long long max_exp() const
    {
        require_nonzero("max_exp");
        return terms_.rbegin()->first;
    }

    /* max exponent - min exponent (Laurent span) */
    long long span() const { return max_exp() - min_exp(); }

    LaurentPoly operator-() const
    {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const Rational& c)
    {
        LaurentPoly r;
        for (const auto& [e, x] : a.terms_)
            r.add_term(e, x * c);
        return r;
    }

    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a) { return a * c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.terms_ == b.terms_;
    }

    Rational operator()(const Rational& x) const
    {
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            if (e < 0 && x == 0)
                throw std::domain_error("evaluation of t^negative at 0");
            Rational p(1);
            for (long long i = 0; i < (e < 0 ? -e : e); ++i)
                p *= x;
            if (e < 0)
                acc += c / p;
            else
                acc += c * p;
        }
        return acc;
    }

    /* t -> t^k (k may be negative, must be nonzero) */
    LaurentPoly subst_power(long long k) const
    {
        if (k == 0)
            throw std::invalid_argument("subst_power: k must be nonzero");
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            r.add_term(e * k, c);
        return r;
    }

    /* shift by t^k */
    LaurentPoly shifted(long long k) const
    {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            r.add_term(e + k, c);
        return r;
    }

    /* Conversion to a dense polynomial; requires nonnegative exponents. */
    qp::Poly to_dense() const
    {
        if (is_zero())
            return {};
        if (min_exp() < 0)
            throw std::domain_error("to_dense: negative exponent present");
        qp::Poly p(static_cast<size_t>(max_exp()) + 1, Rational(0));
        for (const auto& [e, c] : terms_)
            p[static_cast<size_t>(e)] = c;
        return p;
    }

    static LaurentPoly from_dense(const qp::Poly& p, long long shift = 0)
    {
        LaurentPoly r;
        for (size_t i = 0; i < p.size(); ++i)
            r.add_term(static_cast<long long>(i) + shift, p[i]);
        return r;
    }

    /* Exact division in Q[t, t^-1]; throws if the quotient does not exist. */
    LaurentPoly div_exact(const LaurentPoly& d) const
    {
        if (d.is_zero())
            throw std::invalid_argument("div_exact: division by zero");
        if (is_zero())
            return {};
        qp::Poly q = qp::div_exact(shifted(-min_exp()).to_dense(),
                                   d.shifted(-d.min_exp()).to_dense());
        return from_dense(q, min_exp() - d.min_exp());
    }

private:
    void require_nonzero(const char* what) const
    {
        if (terms_.empty())
            throw std::domain_error(std::string(what) + " of zero polynomial");
    }

    TermMap terms_;
};

/* Canonical representative of the unit class {± t^k P}: minimum exponent
 * shifted to 0 and the lowest-degree coefficient made positive. */
inline LaurentPoly normalize_unit(const LaurentPoly& p)
{
    if (p.is_zero())
        throw std::domain_error("zero has no unit normalization");
    LaurentPoly r = p.shifted(-p.min_exp());
    if (r.coeff(0) < 0)
        r = -r;
    return r;
}

/* Phi_d as a polynomial in t: monic, integer coefficients, degree phi(d). */
inline LaurentPoly cyclotomic_poly(long long d)
{
    return LaurentPoly::from_dense(qp::cyclotomic(d));
}

/* Res(f, g) for nonzero polynomials with nonnegative exponents. */
inline Rational resultant(const LaurentPoly& f, const LaurentPoly& g)
{
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant of zero polynomial");
    if (f.min_exp() < 0 || g.min_exp() < 0)
        throw std::invalid_argument("resultant: negative exponent present");
    return qp::resultant(f.to_dense(), g.to_dense());
}

} // namespace lenstor

#endif
