#ifndef LENSTOR_HOMOLOGY_HPP
#define LENSTOR_HOMOLOGY_HPP

#include <stdexcept>

#include "lenstor/rational.hpp"

/* First homology of a surgered 2-component link exterior with linking number
 * l and coefficients a1/b1, a2/b2: the presentation matrix is
 *   [ a1    b1*l ]
 *   [ b2*l  a2   ]
 * and only its 2x2 Smith normal form is ever needed. */

namespace lenstor {

struct PresentationMatrix2 {
    Integer a, b, c, d; // rows (a b), (c d)

    Integer det() const { return a * d - b * c; }

    /* Smith normal form diag(d1, d2), d1 | d2, d1 >= 0. */
    void smith(Integer& d1, Integer& d2) const
    {
        Integer g(0);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        d1 = g;
        Integer dt = det();
        if (dt < 0)
            dt = -dt;
        if (d1 == 0) {
            d2 = 0;
            return;
        }
        d2 = dt / d1;
        if (d2 != 0 && d2 % d1 != 0)
            throw std::logic_error("smith: d1 does not divide d2");
    }
};

struct H1Result {
    Integer order;  // |det|; 0 means infinite H_1
    bool cyclic;    // first elementary divisor is 1
};

inline H1Result h1_of_surgery(long long l, long long a1, long long b1, long long a2,
                              long long b2)
{
    if (gcd_ll(a1, b1) != 1 || gcd_ll(a2, b2) != 1)
        throw std::invalid_argument("h1_of_surgery: surgery coefficients must be reduced");
    PresentationMatrix2 m{to_integer(a1), to_integer(b1 * l), to_integer(b2 * l),
                          to_integer(a2)};
    Integer d1, d2;
    m.smith(d1, d2);
    Integer order = m.det();
    if (order < 0)
        order = -order;
    return {order, d1 == 1};
}

} // namespace lenstor

#endif
