#ifndef LENSTOR_RESIDUE_HPP
#define LENSTOR_RESIDUE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "lenstor/laurent.hpp"
#include "lenstor/qpoly.hpp"
#include "lenstor/rational.hpp"

/* Elements of Q[t]/(modulus) for the three moduli the torsion machinery
 * needs: t^N - 1, nu_N = t^{N-1} + ... + 1, and Phi_d. In each quotient
 * t^cycle = 1 holds (cycle = N resp. d), so Laurent input is folded by
 * exponent reduction before canonical remainder division. */

namespace lenstor {

enum class ModulusKind { full_cycle, aug_cycle, cyclotomic };

class Modulus {
public:
    static Modulus full_cycle(long long N)
    {
        check(N, 1, "full_cycle");
        return Modulus(ModulusKind::full_cycle, N, qp::tn_minus_1(N), N);
    }

    static Modulus aug_cycle(long long N)
    {
        check(N, 2, "aug_cycle");
        return Modulus(ModulusKind::aug_cycle, N, qp::nu(N), N);
    }

    static Modulus cyclotomic(long long d)
    {
        check(d, 1, "cyclotomic");
        return Modulus(ModulusKind::cyclotomic, d, qp::cyclotomic(d), d);
    }

    ModulusKind kind() const { return kind_; }
    long long param() const { return param_; }
    const qp::Poly& poly() const { return poly_; }
    long long cycle() const { return cycle_; }

    std::string name() const
    {
        switch (kind_) {
        case ModulusKind::full_cycle: return "t^" + std::to_string(param_) + "-1";
        case ModulusKind::aug_cycle: return "nu_" + std::to_string(param_);
        case ModulusKind::cyclotomic: return "Phi_" + std::to_string(param_);
        }
        return "?";
    }

    friend bool operator==(const Modulus& a, const Modulus& b)
    {
        return a.kind_ == b.kind_ && a.param_ == b.param_;
    }

private:
    Modulus(ModulusKind k, long long p, qp::Poly poly, long long cycle)
        : kind_(k), param_(p), poly_(std::move(poly)), cycle_(cycle)
    {
    }

    static void check(long long n, long long lo, const char* what)
    {
        if (n < lo)
            throw std::invalid_argument(std::string(what) + ": parameter must be >= " +
                                        std::to_string(lo));
    }

    ModulusKind kind_;
    long long param_;
    qp::Poly poly_;
    long long cycle_;
};

class Residue {
public:
    Residue(Modulus mod, const LaurentPoly& value) : mod_(std::move(mod))
    {
        LaurentPoly folded;
        for (const auto& [e, c] : value.terms())
            folded.add_term(mod_nonneg(e, mod_.cycle()), c);
        rep_ = qp::rem(folded.to_dense(), mod_.poly());
    }

    Residue(Modulus mod, const qp::Poly& value) : mod_(std::move(mod))
    {
        rep_ = qp::rem(value, mod_.poly());
    }

    Residue(Modulus mod, const Rational& value)
        : Residue(std::move(mod), qp::constant(value))
    {
    }

    static Residue zero(const Modulus& m) { return Residue(m, Rational(0)); }
    static Residue one(const Modulus& m) { return Residue(m, Rational(1)); }

    const Modulus& modulus() const { return mod_; }
    const qp::Poly& rep() const { return rep_; }
    bool is_zero() const { return rep_.empty(); }

    LaurentPoly to_laurent() const { return LaurentPoly::from_dense(rep_); }

    friend bool operator==(const Residue& a, const Residue& b)
    {
        return a.mod_ == b.mod_ && a.rep_ == b.rep_;
    }

    friend Residue operator+(const Residue& a, const Residue& b)
    {
        a.require_same(b);
        return Residue(a.mod_, qp::add(a.rep_, b.rep_));
    }

    friend Residue operator-(const Residue& a, const Residue& b)
    {
        a.require_same(b);
        return Residue(a.mod_, qp::sub(a.rep_, b.rep_));
    }

    friend Residue operator*(const Residue& a, const Residue& b)
    {
        a.require_same(b);
        return Residue(a.mod_, qp::mul(a.rep_, b.rep_));
    }

    friend Residue operator*(const Residue& a, const Rational& c)
    {
        return Residue(a.mod_, qp::scale(a.rep_, c));
    }

    Residue operator-() const { return Residue(mod_, qp::scale(rep_, Rational(-1))); }

    Residue pow(long long n) const
    {
        if (n < 0)
            return inverse().pow(-n);
        Residue acc = one(mod_), base = *this;
        while (n > 0) {
            if (n & 1)
                acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    /* Extended-Euclidean inverse in Q[t]/(modulus); reports the common factor
     * on failure. */
    Residue inverse() const
    {
        qp::Poly u, v;
        qp::Poly g = qp::xgcd(rep_, mod_.poly(), u, v);
        if (qp::deg(g) != 0) {
            std::string fac;
            for (long long i = qp::deg(g); i >= 0; --i) {
                if (g[static_cast<size_t>(i)] == 0)
                    continue;
                if (!fac.empty())
                    fac += " + ";
                fac += rat_str(g[static_cast<size_t>(i)]) + "*t^" + std::to_string(i);
            }
            throw std::domain_error("not invertible modulo " + mod_.name() +
                                    "; common factor: " + fac);
        }
        return Residue(mod_, u);
    }

    /* The exponent-permutation map t -> t^k; a ring automorphism of the
     * quotient when gcd(k, cycle) = 1. */
    Residue subst_exponents(long long k) const
    {
        if (gcd_ll(mod_nonneg(k, mod_.cycle()), mod_.cycle()) != 1)
            throw std::invalid_argument("subst_exponents: exponent not coprime to cycle");
        LaurentPoly image;
        for (size_t i = 0; i < rep_.size(); ++i)
            if (rep_[i] != 0)
                image.add_term(mod_nonneg(static_cast<long long>(i) * k, mod_.cycle()),
                               rep_[i]);
        return Residue(mod_, image);
    }

    /* complex conjugation t -> t^{-1} */
    Residue conjugate() const { return subst_exponents(mod_.cycle() - 1); }

private:
    void require_same(const Residue& o) const
    {
        if (!(mod_ == o.mod_))
            throw std::invalid_argument("residues with different moduli: " + mod_.name() +
                                        " vs " + o.mod_.name());
    }

    Modulus mod_;
    qp::Poly rep_;
};

inline Residue quot_inverse(const Residue& x) { return x.inverse(); }

/* Trivial unit eta * t^shift acting on value sequences. */
struct TrivialUnit {
    int sign = 1;
    long long shift = 0;

    friend bool operator==(const TrivialUnit& a, const TrivialUnit& b)
    {
        return a.sign == b.sign && a.shift == b.shift;
    }
};

/* a =dot= b: search for a trivial unit eta*t^j with a * eta t^j == b. */
inline std::optional<TrivialUnit> doteq_unit(const Residue& a, const Residue& b)
{
    const long long cycle = a.modulus().cycle();
    for (long long j = 0; j < cycle; ++j) {
        Residue shifted = a * Residue(a.modulus(), LaurentPoly::monomial(j));
        if (shifted == b)
            return TrivialUnit{+1, j};
        if (-shifted == b)
            return TrivialUnit{-1, j};
    }
    return std::nullopt;
}

} // namespace lenstor

#endif
