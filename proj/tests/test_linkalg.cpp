#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "lenstor/linkalg.hpp"
#include "lenstor/selfcheck.hpp"
#include "lenstor/textio.hpp"

using namespace lenstor;

namespace {

std::vector<std::pair<long long, long long>> coprime_pairs(long long max_mn)
{
    std::vector<std::pair<long long, long long>> out;
    for (long long s = 5; s <= max_mn; ++s)
        for (long long m = 2; 2 * m < s; ++m)
            if (gcd_ll(m, s - m) == 1)
                out.push_back({m, s - m});
    return out;
}

} // namespace

TEST_CASE("cut sequences")
{
    CutSequence c35 = cut_sequence(3, 5);
    CHECK(c35.k == std::vector<long long>{0, 3, 5, 6, 9, 10, 12, 15});
    CHECK(c35.u == std::vector<long long>{0, 1, 3, 4, 6, 7});
    CHECK(c35.w == std::vector<long long>{0, 2, 5, 7});

    CutSequence c23 = cut_sequence(2, 3);
    CHECK(c23.k == std::vector<long long>{0, 2, 3, 4, 6});

    CHECK_THROWS_AS(cut_sequence(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(cut_sequence(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(cut_sequence(5, 3), std::invalid_argument);

    SECTION("construction invariants and index laws, exhaustive to m+n = 60")
    {
        SuiteResult laws = check_cut_sequence_laws(60);
        INFO(laws.failure);
        CHECK(laws.pass);
        CHECK(laws.checks > 1000);
    }
}

TEST_CASE("Alexander polynomial of the A family")
{
    CHECK(alexander_A(3, 5) ==
          parse_poly("t^15*x^7 + t^12*x^6 + t^10*x^5 + t^9*x^4 + t^6*x^3 + t^5*x^2 + t^3*x + 1"));
    CHECK(alexander_A(2, 3) == parse_poly("1 + t^2*x + t^3*x^2 + t^4*x^3 + t^6*x^4"));
    CHECK(alexander_A(2, 3).at_x_one() == parse_laurent("1 + t^2 + t^3 + t^4 + t^6"));
    CHECK_THROWS_AS(alexander_A(2, 4), std::invalid_argument);
}

TEST_CASE("Alexander polynomial values at (1,1) count monomials")
{
    for (auto [m, n] : coprime_pairs(20))
        CHECK(alexander_A(m, n).at_x_one()(Rational(1)) == to_rational(m + n));
    for (long long p = 2; p <= 9; ++p)
        for (long long q = 1; q <= 5; ++q)
            if (gcd_ll(p, q) == 1)
                CHECK(alexander_B(p, q).at_x_one()(Rational(1)) == to_rational(p));
}

TEST_CASE("Alexander matrix blocks")
{
    AlexMatrix M = alexander_A_matrix(3, 5);
    REQUIRE(M.size == 7);
    const char* expected[7][7] = {
        {"0", "0", "-t", "1", "0", "0", "0"},
        {"0", "0", "-t^2", "0", "1", "0", "0"},
        {"0", "0", "-t^3", "0", "0", "1", "0"},
        {"0", "0", "-t^4", "0", "0", "0", "1"},
        {"0", "0", "-t^5", "0", "0", "0", "0"},
        {"t^5", "0", "-t^5", "0", "0", "0", "0"},
        {"0", "t^5", "-t^5", "0", "0", "0", "0"},
    };
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            INFO("entry (" << i << "," << j << ")");
            CHECK(M.entries[i][j] == parse_laurent(expected[i][j]));
        }

    AlexMatrix M23 = alexander_A_matrix(2, 3);
    REQUIRE(M23.size == 4);
    CHECK(M23.entries[0][1] == parse_laurent("-t"));
    CHECK(M23.entries[1][1] == parse_laurent("-t^2"));
    CHECK(M23.entries[0][2] == parse_laurent("1"));
    CHECK(M23.entries[1][3] == parse_laurent("1"));
    CHECK(M23.entries[2][1] == parse_laurent("-t^3"));
    CHECK(M23.entries[3][0] == parse_laurent("t^3"));
    CHECK(M23.entries[3][1] == parse_laurent("-t^3"));

    for (auto [m, n] : coprime_pairs(14))
        CHECK(alexander_A_matrix(m, n).size == m + n - 1);
}

TEST_CASE("determinant oracle agrees with the closed form")
{
    for (auto [m, n] : coprime_pairs(10)) {
        INFO("(m,n) = (" << m << "," << n << ")");
        CHECK(alexander_A_det_oracle(m, n) == normalize_unit_bi(alexander_A(m, n)));
    }
}

TEST_CASE("eigenvector identity")
{
    CHECK(eigen_identity_check(2, 3));
    CHECK(eigen_identity_check(3, 5));
    CHECK(eigen_identity_check(3, 4));
}

TEST_CASE("Alexander polynomial of the B family")
{
    CHECK(alexander_B(2, 1) == parse_poly("1 + t*x"));
    CHECK(alexander_B(3, 2) == parse_poly("1 + t^2*x + t^4*x^2"));

    BiLaurentPoly b83 = alexander_B(8, 3);
    CHECK(b83.terms().size() == 8);
    CHECK(b83.coeff(21, 7) == 1);

    CHECK_THROWS_AS(alexander_B(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(alexander_B(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(alexander_B(3, 0), std::invalid_argument);

    SECTION("multiplying back gives t^{pq} x^p - 1")
    {
        for (long long p = 2; p <= 9; ++p)
            for (long long q = 1; q <= 5; ++q) {
                if (gcd_ll(p, q) != 1)
                    continue;
                BiLaurentPoly lhs = alexander_B(p, q) *
                                    (BiLaurentPoly::monomial(q, 1) - BiLaurentPoly::constant(1));
                BiLaurentPoly rhs =
                    BiLaurentPoly::monomial(p * q, p) - BiLaurentPoly::constant(1);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("Torres specialization and self-symmetry")
{
    for (auto [m, n] : coprime_pairs(16)) {
        INFO("(m,n) = (" << m << "," << n << ")");
        CHECK(torres_check_A(m, n));
        CHECK(selfsym_check_A(m, n));
    }

    SECTION("substituted exponent sets")
    {
        LaurentPoly s23 = alexander_A(2, 3).subst_powers(5, -6);
        CHECK(normalize_unit(s23) == parse_laurent("1 + t^2 + t^3 + t^4 + t^6"));
        LaurentPoly s35 = alexander_A(3, 5).subst_powers(8, -15);
        CHECK(normalize_unit(s35) == parse_laurent("1 + t^3 + t^5 + t^6 + t^9 + t^10 + t^12 + t^15"));
    }
}

TEST_CASE("x-degree and squarefree discriminant surrogate")
{
    for (auto [m, n] : coprime_pairs(14)) {
        BiLaurentPoly d = alexander_A(m, n);
        CHECK(d.max_x_exp() == m + n - 1);
        // sum of x^i at t = 1 is squarefree
        qp::Poly at1(static_cast<size_t>(m + n), Rational(1));
        qp::Poly deriv;
        for (size_t i = 1; i < at1.size(); ++i)
            deriv.push_back(to_rational(static_cast<long long>(i)) * at1[i]);
        CHECK(qp::deg(qp::gcd(at1, deriv)) == 0);
    }
}
