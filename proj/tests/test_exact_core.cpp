#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lenstor/homology.hpp"
#include "lenstor/laurent.hpp"
#include "lenstor/qpoly.hpp"
#include "lenstor/residue.hpp"
#include "lenstor/textio.hpp"

using namespace lenstor;

namespace {

std::mt19937_64 rng(20240517);

long long rand_int(long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

LaurentPoly random_laurent(int max_terms, long long max_exp, long long max_coeff)
{
    LaurentPoly p;
    int terms = static_cast<int>(rand_int(1, max_terms));
    for (int i = 0; i < terms; ++i)
        p.add_term(rand_int(-max_exp, max_exp), to_rational(rand_int(-max_coeff, max_coeff)));
    return p;
}

qp::Poly random_int_poly(long long max_deg, long long max_coeff)
{
    qp::Poly p(static_cast<size_t>(rand_int(1, max_deg)) + 1, Rational(0));
    for (auto& c : p)
        c = to_rational(rand_int(-max_coeff, max_coeff));
    p.back() = to_rational(rand_int(1, max_coeff));
    return p;
}

} // namespace

TEST_CASE("rationals are kept canonical")
{
    Rational q = rat_parse("6/-4");
    CHECK(rat_str(q) == "-3/2");
    CHECK(q.get_den() == 2);
    Rational sum = rat_parse("1/3") + rat_parse("1/6");
    CHECK(rat_str(sum) == "1/2");
    CHECK(rat_str(rat_parse("10/5")) == "2");
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
}

TEST_CASE("normalize_unit picks the canonical unit representative")
{
    CHECK(print_poly(normalize_unit(parse_laurent("-t^3 + t^5"))) == "1 - t^2");
    CHECK(print_poly(normalize_unit(parse_laurent("7"))) == "7");
    CHECK(print_poly(normalize_unit(parse_laurent("t^-2 + t"))) == "1 + t^3");
    CHECK_THROWS_AS(normalize_unit(LaurentPoly()), std::domain_error);

    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly p = random_laurent(5, 8, 6);
        if (p.is_zero())
            continue;
        long long k = rand_int(-5, 5);
        int s = rand_int(0, 1) ? 1 : -1;
        LaurentPoly q = p.shifted(k) * Rational(s);
        CHECK(normalize_unit(q) == normalize_unit(p));
    }
}

TEST_CASE("normalize_unit_bi")
{
    CHECK(normalize_unit_bi(parse_poly("t^2*x - t^3*x^2")) == parse_poly("1 - t*x"));
    BiLaurentPoly a35 = parse_poly(
        "t^15*x^7 + t^12*x^6 + t^10*x^5 + t^9*x^4 + t^6*x^3 + t^5*x^2 + t^3*x + 1");
    CHECK(normalize_unit_bi(a35) == a35);
    CHECK(normalize_unit_bi(parse_poly("-1 - t*x")) == parse_poly("1 + t*x"));
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_poly(1) == parse_laurent("t - 1"));
    CHECK(cyclotomic_poly(4) == parse_laurent("t^2 + 1"));
    CHECK(cyclotomic_poly(6) == parse_laurent("t^2 - t + 1"));

    // product over divisors reconstructs t^d - 1
    for (long long d = 1; d <= 60; ++d) {
        qp::Poly prod = qp::constant(1);
        for (long long e : divisors(d))
            prod = qp::mul(prod, qp::cyclotomic(e));
        CHECK(prod == qp::tn_minus_1(d));
    }
}

TEST_CASE("resultants")
{
    CHECK(resultant(parse_laurent("t^2+1"), parse_laurent("t-1")) == 2);
    CHECK(resultant(cyclotomic_poly(5), parse_laurent("t")) == 1);
    // single-root case Res(t-a, t-b) = g(a) = a-b for the product-over-roots-of-f convention
    for (int trial = 0; trial < 20; ++trial) {
        long long a = rand_int(-9, 9), b = rand_int(-9, 9);
        qp::Poly fa = {to_rational(-a), Rational(1)};
        qp::Poly fb = {to_rational(-b), Rational(1)};
        CHECK(qp::resultant(fa, fb) == to_rational(a - b));
    }
    CHECK_THROWS_AS(qp::resultant({}, qp::constant(1)), std::invalid_argument);
    CHECK_THROWS_AS(resultant(parse_laurent("t^-1"), parse_laurent("t")), std::invalid_argument);

    SECTION("multiplicativity in the second argument")
    {
        for (int trial = 0; trial < 60; ++trial) {
            qp::Poly f = random_int_poly(4, 5);
            qp::Poly g = random_int_poly(4, 5);
            qp::Poly h = random_int_poly(4, 5);
            CHECK(qp::resultant(f, qp::mul(g, h)) ==
                  qp::resultant(f, g) * qp::resultant(f, h));
        }
    }
}

TEST_CASE("quotient ring inversion")
{
    SECTION("spec instances")
    {
        Modulus nu5 = Modulus::aug_cycle(5);
        Residue x(nu5, parse_laurent("t - 1"));
        CHECK(quot_inverse(x) * x == Residue::one(nu5));

        CHECK(quot_inverse(Residue::one(nu5)) == Residue::one(nu5));

        for (long long N : {3, 5, 8}) {
            Modulus full = Modulus::full_cycle(N);
            Residue t(full, LaurentPoly::monomial(1));
            CHECK(quot_inverse(t) == Residue(full, LaurentPoly::monomial(N - 1)));
        }
    }

    SECTION("non-invertible elements report the common factor")
    {
        Modulus full5 = Modulus::full_cycle(5);
        Residue bad(full5, parse_laurent("t - 1"));
        CHECK_THROWS_AS(quot_inverse(bad), std::domain_error);
        CHECK_THROWS_WITH(quot_inverse(bad), Catch::Matchers::ContainsSubstring("common factor"));
    }

    SECTION("inverse times element is one, randomized")
    {
        for (int trial = 0; trial < 120; ++trial) {
            long long which = rand_int(0, 2);
            long long param = rand_int(2, 12);
            Modulus mod = which == 0   ? Modulus::full_cycle(param)
                          : which == 1 ? Modulus::aug_cycle(param)
                                       : Modulus::cyclotomic(param);
            Residue x(mod, random_laurent(4, 10, 4));
            try {
                Residue y = quot_inverse(x);
                CHECK(y * x == Residue::one(mod));
            } catch (const std::domain_error&) {
                // shares a factor with the modulus; nothing to check
            }
        }
    }
}

TEST_CASE("modular inverse")
{
    CHECK(mod_inverse(5, 64) == 13);
    CHECK(mod_inverse(3, 25) == 17);
    for (long long N : {2, 7, 30})
        CHECK(mod_inverse(1, N) == 1);
    CHECK_THROWS_AS(mod_inverse(6, 9), std::invalid_argument);

    for (int trial = 0; trial < 200; ++trial) {
        long long N = rand_int(2, 500);
        long long x = rand_int(1, N - 1);
        if (gcd_ll(x, N) != 1)
            continue;
        long long xbar = mod_inverse(x, N);
        CHECK(mod_nonneg(x * xbar, N) == 1);
        CHECK(mod_inverse(xbar, N) == mod_nonneg(x, N));
    }
}

TEST_CASE("first homology of surgeries")
{
    auto a23 = h1_of_surgery(5, 7, 1, 0, 1);
    CHECK(a23.order == 25);
    CHECK(a23.cyclic);

    auto b83 = h1_of_surgery(8, 23, 1, 0, 1);
    CHECK(b83.order == 64);
    CHECK(b83.cyclic);

    auto bad = h1_of_surgery(5, 5, 1, 0, 1);
    CHECK(bad.order == 25);
    CHECK_FALSE(bad.cyclic);

    for (int trial = 0; trial < 200; ++trial) {
        long long l = rand_int(-10, 10);
        long long a1 = rand_int(-20, 20), b1 = rand_int(1, 9);
        long long a2 = rand_int(-20, 20), b2 = rand_int(1, 9);
        if (gcd_ll(a1, b1) != 1 || gcd_ll(a2, b2) != 1)
            continue;
        auto h = h1_of_surgery(l, a1, b1, a2, b2);
        CHECK(h.order == to_integer(std::llabs(a1 * a2 - b1 * b2 * l * l)));
    }
}

TEST_CASE("polynomial text format round trips")
{
    CHECK(print_poly(parse_poly("3*t^-2*x^5")) == "3*t^-2*x^5");
    CHECK(parse_poly("1 + t*x - 2*x^2") == parse_poly("-2*x^2 + t*x + 1"));
    CHECK(print_poly(parse_laurent("1/2 - 1/2*t")) == "1/2 - 1/2*t");
    CHECK(parse_laurent("0").is_zero());
    CHECK_THROWS_AS(parse_poly("t^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_laurent("t*x"), std::invalid_argument);

    for (int trial = 0; trial < 200; ++trial) {
        BiLaurentPoly p;
        int terms = static_cast<int>(rand_int(0, 6));
        for (int i = 0; i < terms; ++i)
            p.add_term(rand_int(-6, 6), rand_int(-6, 6),
                       to_rational(rand_int(-9, 9)) / to_rational(rand_int(1, 9)));
        CHECK(parse_poly(print_poly(p)) == p);
    }
}

TEST_CASE("smith form shape")
{
    PresentationMatrix2 m{Integer(4), Integer(6), Integer(2), Integer(8)};
    Integer d1, d2;
    m.smith(d1, d2);
    CHECK(d1 == 2);
    CHECK(d2 == 10);
    CHECK(d1 * d2 == 20);
}
