#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "lenstor/decider.hpp"
#include "lenstor/report.hpp"

using namespace lenstor;

TEST_CASE("F and G construction")
{
    SECTION("G merges the m-1 and 1 indices at m = 2")
    {
        auto [F, G] = build_FG(2, 3, 7, 1, 0, 1);
        SymPoly expect(Rational(4));
        expect.add_bracket(3, 1);
        expect.add_bracket(2, -2);
        expect.add_bracket(1, -1);
        CHECK(G == expect);
    }

    SECTION("alpha' = 0 factors as {<t^m> - 2}{<t> - 2}")
    {
        auto [F, G] = build_FG(2, 3, 6, 1, 0, 1);
        SymPoly first(Rational(-2));
        first.add_bracket(2, 1);
        SymPoly second(Rational(-2));
        second.add_bracket(1, 1);
        CHECK(F == first * second);
        CHECK(F == G); // beta = 1, alpha' = 0
    }

    SECTION("F(1) = 0 always")
    {
        for (long long m = 2; m <= 5; ++m)
            for (long long n = m + 1; m + n <= 14; ++n) {
                if (gcd_ll(m, n) != 1)
                    continue;
                for (long long alpha = m * n; alpha <= m * n + 9; ++alpha) {
                    if (gcd_ll(alpha, m + n) != 1)
                        continue;
                    auto [F, G] = build_FG(m, n, alpha, 1, 1, 2);
                    CHECK(F.eval_at_one() == 0);
                    CHECK(G.eval_at_one() == 0);
                }
            }
    }

    CHECK_THROWS_AS(build_FG(2, 3, 7, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_FG(2, 3, 7, 1, 0, 3), std::invalid_argument);
}

TEST_CASE("ef witness scan")
{
    SECTION("(2,3,7,1) has the (1,2)-witness, i.e. (i,j) = (1,3)")
    {
        auto ws = ef_solutions(2, 3, 7, 1);
        REQUIRE(ws.size() == 1);
        CHECK(ws[0].e == 1);
        CHECK(ws[0].f == 2);
        CHECK(ws[0].i == 1);
        CHECK(ws[0].j == 3);
        CHECK(ws[0].unit.sign == 1);
        CHECK(ws[0].alpha_prime == 1);
    }

    SECTION("alpha' = 0 yields the analytic witness (0,1)")
    {
        auto ws = ef_solutions(3, 5, 15, 1);
        REQUIRE(ws.size() == 1);
        CHECK(ws[0].e == 0);
        CHECK(ws[0].f == 1);
    }

    SECTION("(3,4,13,1) has no witness")
    {
        CHECK(ef_solutions(3, 4, 13, 1).empty());
    }

    CHECK_THROWS_AS(ef_solutions(2, 3, 5, 1), std::domain_error); // alpha' < 0
    CHECK_THROWS_AS(ef_solutions(2, 3, 10, 1), std::domain_error); // non-cyclic
}

TEST_CASE("half-shift symmetry of the witness equation")
{
    // For even N, a solution (e,f) of red(F) = eta G transforms to a solution
    // (N/2-f, N/2-e) of red(t^{N/2} F') = -eta G.
    for (auto [m, n, alpha] : {std::array<long long, 3>{3, 5, 15}, {3, 7, 21}, {5, 7, 35}}) {
        const long long N = m + n;
        REQUIRE(N % 2 == 0);
        auto ws = ef_solutions(m, n, alpha, 1);
        REQUIRE_FALSE(ws.empty());
        for (const auto& w : ws) {
            long long ep = N / 2 - w.f, fp = N / 2 - w.e;
            SymPoly first(to_rational(2 * (w.alpha_prime - 1)));
            first.add_bracket(m, 1);
            first.add_bracket(1, to_rational(-w.alpha_prime));
            SymPoly second;
            second.add_bracket(fp, 1);
            second.add_bracket(ep, -1);
            SymPoly Fp = sym_reduce(first * second, N);
            SymPoly shifted = sym_shift_half(Fp, N);
            auto [F, G] = build_FG(m, n, alpha, 1, w.e, w.f);
            SymPoly target = sym_reduce(G, N) * to_rational(-w.unit.sign);
            CHECK(shifted == target);
        }
    }
}

TEST_CASE("decide_A")
{
    Verdict v1 = decide_A(2, 3, 7, 1);
    CHECK(v1.kind == VerdictKind::lens);
    CHECK(v1.lens.P == 25);
    CHECK(v1.lens.Q == 7);

    Verdict v2 = decide_A(3, 5, 15, 1);
    CHECK(v2.kind == VerdictKind::lens);
    CHECK(v2.lens.P == 64);
    CHECK(v2.lens.Q == 39);

    Verdict v3 = decide_A(2, 3, 8, 1);
    CHECK(v3.kind == VerdictKind::not_lens);
    CHECK_THAT(v3.reason, Catch::Matchers::ContainsSubstring("no (e,f) witness"));

    Verdict v4 = decide_A(2, 3, 6, 1);
    CHECK(v4.kind == VerdictKind::lens);
    CHECK(v4.lens.P == 25);
    CHECK(v4.lens.Q == 9);

    SECTION("alpha < mn beta side is closed by the norm gate")
    {
        for (long long alpha : {5, 1, -7}) {
            if (gcd_ll(alpha, 5) != 1)
                continue;
            Verdict v = decide_A(2, 3, alpha, 1);
            CHECK(v.kind == VerdictKind::not_lens);
            CHECK_THAT(v.reason, Catch::Matchers::ContainsSubstring("norm"));
        }
    }

    SECTION("non-cyclic homology reported")
    {
        Verdict v = decide_A(2, 3, 10, 1);
        CHECK(v.kind == VerdictKind::not_lens);
        CHECK_THAT(v.reason, Catch::Matchers::ContainsSubstring("homology"));
    }

    CHECK_THROWS_AS(decide_A(2, 4, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(decide_A(2, 3, 4, 2), std::invalid_argument);
}

TEST_CASE("decide_B")
{
    Verdict v1 = decide_B(8, 3, 23, 1);
    CHECK(v1.kind == VerdictKind::lens);
    CHECK(v1.lens.P == 64);
    CHECK(v1.lens.Q == 23);

    Verdict v2 = decide_B(8, 3, 22, 1);
    CHECK(v2.kind == VerdictKind::not_lens);
    CHECK_THAT(v2.reason, Catch::Matchers::ContainsSubstring("norm"));

    Verdict v3 = decide_B(2, 1, 5, 2);
    CHECK(v3.kind == VerdictKind::lens);
    CHECK(v3.lens.P == 8);
    CHECK(v3.lens.Q == 5);
}

TEST_CASE("classify_B_full")
{
    SECTION("(8,3; 23/1, 0/1) is the closed-form lens space, up to orientation")
    {
        Verdict v = classify_B_full(8, 3, 23, 1, 0, 1);
        REQUIRE(v.kind == VerdictKind::lens);
        CHECK(v.lens.P == 64);
        // pre-normalization parameter was L(-64, 25)
        CHECK(v.lens.Q == mod_nonneg(-25, 64));
        CHECK_FALSE(v.orientation_note.empty());
        Verdict direct = decide_B(8, 3, 23, 1);
        CHECK(lens_equivalent(64, v.lens.Q, direct.lens.Q, false));
    }

    SECTION("(8,3; 24/1, 1/1) is a connected sum")
    {
        Verdict v = classify_B_full(8, 3, 24, 1, 1, 1);
        REQUIRE(v.kind == VerdictKind::connected_sum);
        CHECK(v.sum_first.P == 5);
        CHECK(v.sum_first.Q == 2);
        CHECK(v.sum_second.P == 8);
        CHECK(v.sum_second.Q == mod_nonneg(-3, 8));
    }

    SECTION("(8,3; 25/1, 0/1) has eps1 = +1, a lens space")
    {
        Verdict v = classify_B_full(8, 3, 25, 1, 0, 1);
        REQUIRE(v.kind == VerdictKind::lens);
        Verdict direct = decide_B(8, 3, 25, 1);
        CHECK(v.lens.P == direct.lens.P);
        CHECK(lens_equivalent(64, v.lens.Q, direct.lens.Q, false));
    }

    SECTION("generic coefficients give a small Seifert space")
    {
        Verdict v = classify_B_full(5, 2, 3, 1, 7, 2);
        REQUIRE(v.kind == VerdictKind::small_seifert);
        CHECK(std::llabs(v.seifert[0].den) == std::llabs(3 - 1 * 5 * 2));
        CHECK(std::llabs(v.seifert[1].den) == std::llabs(7 * 2 - 2 * 5));
        CHECK(v.seifert[2].den == 5);
    }
}

TEST_CASE("classify_A_mn_r")
{
    Verdict v1 = classify_A_mn_r(2, 3, 1, 1);
    REQUIRE(v1.kind == VerdictKind::lens);
    CHECK(v1.lens.P == 19);
    CHECK(v1.lens.Q == 7);

    Verdict v2 = classify_A_mn_r(2, 3, 0, 1);
    REQUIRE(v2.kind == VerdictKind::lens);
    CHECK(v2.lens.P == 25);
    CHECK(v2.lens.Q == 9);

    Verdict v3 = classify_A_mn_r(3, 5, 1, 2);
    REQUIRE(v3.kind == VerdictKind::small_seifert);
    CHECK(v3.seifert_base == -2);
    CHECK(v3.seifert[0].num == 5);
    CHECK(v3.seifert[0].den == 3);
    CHECK(v3.seifert[1].num == 3);
    CHECK(v3.seifert[1].den == 5);
    CHECK(v3.seifert[2].num == -1);
    CHECK(v3.seifert[2].den == 2);

    SECTION("degenerate orders")
    {
        // (m,n) = (2,3): P = 25 - 6 alpha2; alpha2 = 4 -> P = 1
        Verdict s3 = classify_A_mn_r(2, 3, 4, 1);
        REQUIRE(s3.kind == VerdictKind::lens);
        CHECK(s3.lens.P == 1);
    }

    SECTION("negative order reverses orientation exactly once")
    {
        // alpha2 = 5: P = -5, Q = 2*3bar = 4 mod 5; L(-5,4) = L(5,-4) = L(5,1)
        Verdict neg = classify_A_mn_r(2, 3, 5, 1);
        REQUIRE(neg.kind == VerdictKind::lens);
        CHECK(neg.lens.P == 5);
        CHECK(neg.lens.Q == 1);
        CHECK_FALSE(neg.orientation_note.empty());
        // alpha2 = 6: P = -11, Q = 2*mod_inverse(3,11) = 8; L(-11,8) = L(11,3)
        Verdict neg2 = classify_A_mn_r(2, 3, 6, 1);
        REQUIRE(neg2.kind == VerdictKind::lens);
        CHECK(neg2.lens.P == 11);
        CHECK(neg2.lens.Q == 3);
    }

    SECTION("torsion consistency holds across a window")
    {
        for (long long alpha2 = -3; alpha2 <= 3; ++alpha2)
            CHECK_NOTHROW(classify_A_mn_r(2, 3, alpha2, 1));
        for (long long alpha2 = -2; alpha2 <= 2; ++alpha2)
            CHECK_NOTHROW(classify_A_mn_r(3, 5, alpha2, 1));
    }
}

TEST_CASE("classify_A_23_7_r")
{
    Verdict v1 = classify_A_23_7_r(0, 1);
    REQUIRE(v1.kind == VerdictKind::lens);
    CHECK(v1.lens.P == 25);
    CHECK(v1.lens.Q == 18);
    CHECK(lens_equivalent(25, 18, 7, true));

    Verdict v2 = classify_A_23_7_r(1, 1);
    REQUIRE(v2.kind == VerdictKind::lens);
    CHECK(v2.lens.P == 18);
    CHECK(v2.lens.Q == 13);

    Verdict v3 = classify_A_23_7_r(4, 3);
    REQUIRE(v3.kind == VerdictKind::lens);
    CHECK(v3.lens.P == 47);
    CHECK(v3.lens.Q == 34);

    // decide_A(2,3,7,1) and the (0,1) classification agree up to equivalence
    Verdict base = decide_A(2, 3, 7, 1);
    CHECK(lens_equivalent(25, base.lens.Q, v1.lens.Q, false));
}

TEST_CASE("scan_A on a small window")
{
    ScanReport rep = scan_A(10, 1, 60);
    CHECK(rep.inconclusive_count == 0);
    std::set<std::array<long long, 4>> lens_hits;
    for (const auto& row : rep.rows)
        if (row.verdict.kind == VerdictKind::lens)
            lens_hits.insert({row.spec.p1, row.spec.p2, row.spec.a1, row.spec.b1});
    std::set<std::array<long long, 4>> expected = {
        {2, 3, 6, 1},  {2, 3, 7, 1},  {2, 5, 10, 1}, {2, 7, 14, 1},
        {3, 4, 12, 1}, {3, 5, 15, 1}, {3, 7, 21, 1}, {4, 5, 20, 1},
    };
    CHECK(lens_hits == expected);

    SECTION("parallel scan gives the identical report")
    {
        ScanReport rep4 = scan_A(10, 1, 60, 4);
        REQUIRE(rep4.rows.size() == rep.rows.size());
        for (size_t i = 0; i < rep.rows.size(); ++i) {
            CHECK(rep4.rows[i].spec.a1 == rep.rows[i].spec.a1);
            CHECK(rep4.rows[i].verdict.kind == rep.rows[i].verdict.kind);
        }
    }
}

TEST_CASE("scan_B on small windows")
{
    ScanReport r1 = scan_B(2, 1, 1, 10);
    CHECK(r1.mismatch_count == 0);
    std::set<long long> alphas;
    for (const auto& row : r1.rows)
        if (row.verdict.kind == VerdictKind::lens)
            alphas.insert(row.spec.a1);
    CHECK(alphas == std::set<long long>{1, 3});

    ScanReport r2 = scan_B(3, 2, 1, 20);
    CHECK(r2.mismatch_count == 0);
    std::set<long long> alphas_q2;
    for (const auto& row : r2.rows)
        if (row.verdict.kind == VerdictKind::lens && row.spec.p2 == 2)
            alphas_q2.insert(row.spec.a1);
    CHECK(alphas_q2 == std::set<long long>{5, 7});
}

TEST_CASE("verdict JSON carries exact decimal strings and round-trips text formats")
{
    Verdict v = decide_A(2, 3, 7, 1);
    SurgerySpec spec{Family::A, 2, 3, 7, 1, 0, 1};
    json row = scan_row_to_json(ScanRow{spec, v, false, ""});
    CHECK(row["family"] == "A");
    CHECK(row["params"]["m"] == "2");
    CHECK(row["params"]["alpha"] == "7");
    CHECK(row["verdict"]["kind"] == "lens");
    CHECK(row["verdict"]["lens"]["P"] == "25");
    CHECK(row["verdict"]["lens"]["Q"] == "7");
    CHECK(row["certificates"].is_array());

    // polynomials embedded in JSON output parse back to the same object
    BiLaurentPoly delta = alexander_A(3, 5);
    CHECK(parse_poly(print_poly(delta)) == delta);
    TorsionSequence ts = torsion_A_r0(2, 3, 7, 1);
    CHECK(parse_laurent(print_poly(ts.value.to_laurent())) == ts.value.to_laurent());
    CHECK(verdict_headline(v) == "LENS L(25,7)");
}
