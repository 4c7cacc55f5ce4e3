#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lenstor/lenstor.hpp"

/* Command-line frontend. Exit codes: 0 success, 1 invalid input, 2 internal
 * invariant failure. All numeric output is exact decimal. */

namespace {

using namespace lenstor;

struct Options {
    bool json = false;
    bool oriented = false;
    int jobs = 1;
};

void print_verdict(const Options& opt, const SurgerySpec& spec, const Verdict& v)
{
    if (opt.json) {
        ScanRow row{spec, v, false, ""};
        std::cout << scan_row_to_json(row).dump() << "\n";
        return;
    }
    std::cout << spec_text(spec) << ": " << verdict_headline(v) << "\n";
    if (!v.orientation_note.empty())
        std::cout << "  note: " << v.orientation_note << "\n";
    for (const auto& c : v.certificates)
        std::cout << "  [" << c.check << "] " << c.detail << "\n";
}

void print_torsion(const Options& opt, const TorsionSequence& ts)
{
    if (opt.json) {
        json out{{"N", std::to_string(ts.N)},
                 {"modulus", ts.value.modulus().name()},
                 {"value", print_poly(ts.value.to_laurent())},
                 {"label", ts.label}};
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << print_poly(ts.value.to_laurent()) << "  (mod " << ts.value.modulus().name()
              << ")\n";
    std::cout << "  representation: " << ts.label << "\n";
}

int run_scan(const Options& opt, const ScanReport& report, bool summary)
{
    if (!summary) {
        for (const auto& row : report.rows)
            std::cout << scan_row_to_json(row).dump() << "\n";
    }
    std::vector<std::string> hits;
    for (const auto& row : report.rows) {
        if (row.verdict.kind == VerdictKind::lens)
            hits.push_back(spec_text(row.spec) + " = " + lens_text(row.verdict.lens));
        else if (row.verdict.kind == VerdictKind::inconclusive)
            hits.push_back(spec_text(row.spec) + " INCONCLUSIVE");
        if (row.mismatch)
            hits.push_back(spec_text(row.spec) + " MISMATCH: " + row.mismatch_note);
    }
    if (summary) {
        if (opt.json) {
            json out{{"instances", std::to_string(report.rows.size())},
                     {"lens", std::to_string(report.lens_count)},
                     {"inconclusive", std::to_string(report.inconclusive_count)},
                     {"mismatches", std::to_string(report.mismatch_count)},
                     {"hits", hits}};
            std::cout << out.dump() << "\n";
        } else {
            for (const auto& h : hits)
                std::cout << h << "\n";
            std::cout << report.rows.size() << " instances, " << report.lens_count
                      << " lens, " << report.inconclusive_count << " inconclusive, "
                      << report.mismatch_count << " mismatches\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact lens-space surgery calculator for the link families A_{m,n} and B_{p,q}"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "emit JSON instead of text");
    app.add_flag("--oriented", opt.oriented, "strict oriented lens comparisons");
    app.add_option("--jobs", opt.jobs, "worker threads for scans")->check(CLI::PositiveNumber);

    // alexander
    std::string alex_family;
    long long alex_p1 = 0, alex_p2 = 0;
    bool alex_oracle = false;
    auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of A_{m,n} or B_{p,q}");
    alexander->add_option("family", alex_family, "A or B")->required();
    alexander->add_option("p1", alex_p1, "m (family A) or p (family B)")->required();
    alexander->add_option("p2", alex_p2, "n (family A) or q (family B)")->required();
    alexander->add_flag("--oracle", alex_oracle,
                        "also run the determinant oracle (family A) and report MATCH/MISMATCH");

    // decide
    std::string dec_family;
    long long dec_p1 = 0, dec_p2 = 0, dec_a = 0, dec_b = 1;
    auto* decide = app.add_subcommand("decide", "decide (L; alpha/beta, 0) lens-ness");
    decide->add_option("family", dec_family, "A or B")->required();
    decide->add_option("p1", dec_p1)->required();
    decide->add_option("p2", dec_p2)->required();
    decide->add_option("alpha", dec_a)->required();
    decide->add_option("beta", dec_b)->required();

    // classify
    auto* classify = app.add_subcommand("classify", "closed-form classifiers");
    classify->require_subcommand(1);
    long long cb_p = 0, cb_q = 0, cb_a1 = 0, cb_b1 = 1, cb_a2 = 0, cb_b2 = 1;
    auto* cls_bfull = classify->add_subcommand("b-full", "(B_{p,q}; a1/b1, a2/b2)");
    cls_bfull->add_option("p", cb_p)->required();
    cls_bfull->add_option("q", cb_q)->required();
    cls_bfull->add_option("a1", cb_a1)->required();
    cls_bfull->add_option("b1", cb_b1)->required();
    cls_bfull->add_option("a2", cb_a2)->required();
    cls_bfull->add_option("b2", cb_b2)->required();
    long long cm_m = 0, cm_n = 0, cm_a2 = 0, cm_b2 = 1;
    auto* cls_amnr = classify->add_subcommand("a-mn-r", "(A_{m,n}; mn, alpha2/beta2)");
    cls_amnr->add_option("m", cm_m)->required();
    cls_amnr->add_option("n", cm_n)->required();
    cls_amnr->add_option("alpha2", cm_a2)->required();
    cls_amnr->add_option("beta2", cm_b2)->required();
    long long c7_a2 = 0, c7_b2 = 1;
    auto* cls_237 = classify->add_subcommand("a-23-7-r", "(A_{2,3}; 7, alpha2/beta2)");
    cls_237->add_option("alpha2", c7_a2)->required();
    cls_237->add_option("beta2", c7_b2)->required();

    // torsion
    auto* torsion = app.add_subcommand("torsion", "Reidemeister-Turaev torsion value sequences");
    torsion->require_subcommand(1);
    long long ta_m = 0, ta_n = 0, ta_a = 0, ta_b = 1;
    auto* tor_ar0 = torsion->add_subcommand("a-r0", "(A_{m,n}; alpha/beta, 0)");
    tor_ar0->add_option("m", ta_m)->required();
    tor_ar0->add_option("n", ta_n)->required();
    tor_ar0->add_option("alpha", ta_a)->required();
    tor_ar0->add_option("beta", ta_b)->required();
    long long tl_P = 0, tl_q = 0, tl_N = 0;
    auto* tor_lens = torsion->add_subcommand("lens", "lens space L(P, q) restricted to divisors of N");
    tor_lens->add_option("P", tl_P)->required();
    tor_lens->add_option("q", tl_q)->required();
    tor_lens->add_option("N", tl_N)->required();
    long long tb_p = 0, tb_q = 0, tb_a = 0, tb_b = 1;
    auto* tor_br0 = torsion->add_subcommand("b-r0", "(B_{p,q}; alpha/beta, 0)");
    tor_br0->add_option("p", tb_p)->required();
    tor_br0->add_option("q", tb_q)->required();
    tor_br0->add_option("alpha", tb_a)->required();
    tor_br0->add_option("beta", tb_b)->required();
    long long tm_m = 0, tm_n = 0, tm_a = 0, tm_b = 1;
    auto* tor_amnr = torsion->add_subcommand("a-mn-r", "(A_{m,n}; mn, alpha/beta)");
    tor_amnr->add_option("m", tm_m)->required();
    tor_amnr->add_option("n", tm_n)->required();
    tor_amnr->add_option("alpha", tm_a)->required();
    tor_amnr->add_option("beta", tm_b)->required();
    long long t7_a = 0, t7_b = 1;
    auto* tor_237 = torsion->add_subcommand("a-23-7-r", "(A_{2,3}; 7, alpha/beta)");
    tor_237->add_option("alpha", t7_a)->required();
    tor_237->add_option("beta", t7_b)->required();

    // norm
    long long norm_d = 0;
    std::string norm_poly;
    auto* norm = app.add_subcommand("norm", "d-norm of a polynomial value at zeta_d");
    norm->add_option("d", norm_d)->required();
    norm->add_option("poly", norm_poly, "polynomial in t, shared text format")->required();

    // lens-eq
    long long le_P = 0, le_q1 = 0, le_q2 = 0;
    auto* lenseq = app.add_subcommand("lens-eq", "lens space equivalence L(P,q1) ~ L(P,q2)");
    lenseq->add_option("P", le_P)->required();
    lenseq->add_option("q1", le_q1)->required();
    lenseq->add_option("q2", le_q2)->required();

    // franz-solve
    long long franz_bound = 16;
    auto* franz = app.add_subcommand("franz-solve", "solve the multiset equation over m+n <= bound");
    franz->add_option("--bound", franz_bound, "search bound on m+n (default 16)");

    // scan
    std::string scan_family;
    long long sc_max_mn = 16, sc_beta_max = 4, sc_alpha_window = 120;
    long long sc_p_max = 8, sc_q_max = 7;
    bool sc_summary = false;
    auto* scan = app.add_subcommand("scan", "exhaustive desk-scale verification scans");
    scan->add_option("family", scan_family, "A or B")->required();
    scan->add_option("--max-mn", sc_max_mn, "A: bound on m+n (default 16)");
    scan->add_option("--beta-max", sc_beta_max, "bound on beta (default 4; B default 3)");
    scan->add_option("--alpha-window", sc_alpha_window, "alpha window width (default 120; B default 60)");
    scan->add_option("--p-max", sc_p_max, "B: bound on p (default 8)");
    scan->add_option("--q-max", sc_q_max, "B: bound on q (default 7)");
    scan->add_flag("--summary", sc_summary, "print the hit list only");

    // selfcheck
    long long self_max_mn = 16;
    auto* selfcheck = app.add_subcommand("selfcheck", "run the invariant suites");
    selfcheck->add_option("--max-mn", self_max_mn, "bound on m+n for the pair suites (default 16)");

    // let the global --json/--oriented/--jobs flags appear after any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*alexander) {
            if (alex_family == "A") {
                BiLaurentPoly delta = alexander_A(alex_p1, alex_p2);
                std::string oracle_result;
                if (alex_oracle)
                    oracle_result = alexander_A_det_oracle(alex_p1, alex_p2) ==
                                            normalize_unit_bi(delta)
                                        ? "MATCH"
                                        : "MISMATCH";
                if (opt.json) {
                    json out{{"family", "A"},
                             {"m", std::to_string(alex_p1)},
                             {"n", std::to_string(alex_p2)},
                             {"polynomial", print_poly(delta)}};
                    if (alex_oracle)
                        out["oracle"] = oracle_result;
                    std::cout << out.dump() << "\n";
                } else {
                    std::cout << print_poly(delta) << "\n";
                    if (alex_oracle)
                        std::cout << "oracle: " << oracle_result << "\n";
                }
                if (alex_oracle && oracle_result != "MATCH")
                    return 2;
            } else if (alex_family == "B") {
                if (alex_oracle)
                    throw std::invalid_argument("--oracle applies to family A only");
                BiLaurentPoly delta = alexander_B(alex_p1, alex_p2);
                if (opt.json) {
                    std::cout << json{{"family", "B"},
                                      {"p", std::to_string(alex_p1)},
                                      {"q", std::to_string(alex_p2)},
                                      {"polynomial", print_poly(delta)}}
                                     .dump()
                              << "\n";
                } else {
                    std::cout << print_poly(delta) << "\n";
                }
            } else {
                throw std::invalid_argument("family must be A or B");
            }
        } else if (*decide) {
            if (dec_family == "A") {
                SurgerySpec spec{Family::A, dec_p1, dec_p2, dec_a, dec_b, 0, 1};
                print_verdict(opt, spec, decide_A(dec_p1, dec_p2, dec_a, dec_b));
            } else if (dec_family == "B") {
                SurgerySpec spec{Family::B, dec_p1, dec_p2, dec_a, dec_b, 0, 1};
                print_verdict(opt, spec, decide_B(dec_p1, dec_p2, dec_a, dec_b));
            } else {
                throw std::invalid_argument("family must be A or B");
            }
        } else if (*cls_bfull) {
            SurgerySpec spec{Family::B, cb_p, cb_q, cb_a1, cb_b1, cb_a2, cb_b2};
            print_verdict(opt, spec, classify_B_full(cb_p, cb_q, cb_a1, cb_b1, cb_a2, cb_b2));
        } else if (*cls_amnr) {
            SurgerySpec spec{Family::A, cm_m, cm_n, cm_m * cm_n, 1, cm_a2, cm_b2};
            print_verdict(opt, spec, classify_A_mn_r(cm_m, cm_n, cm_a2, cm_b2));
        } else if (*cls_237) {
            SurgerySpec spec{Family::A, 2, 3, 7, 1, c7_a2, c7_b2};
            print_verdict(opt, spec, classify_A_23_7_r(c7_a2, c7_b2, opt.oriented));
        } else if (*tor_ar0) {
            print_torsion(opt, torsion_A_r0(ta_m, ta_n, ta_a, ta_b));
        } else if (*tor_lens) {
            print_torsion(opt, torsion_lens(tl_P, tl_q, tl_N));
        } else if (*tor_br0) {
            print_torsion(opt, torsion_B_r0(tb_p, tb_q, tb_a, tb_b));
        } else if (*tor_amnr) {
            print_torsion(opt, torsion_A_mn_r(tm_m, tm_n, tm_a, tm_b));
        } else if (*tor_237) {
            print_torsion(opt, torsion_A_23_7_r(t7_a, t7_b));
        } else if (*norm) {
            Rational v = dnorm(parse_laurent(norm_poly), norm_d);
            if (opt.json)
                std::cout << json{{"d", std::to_string(norm_d)}, {"value", rat_str(v)}}.dump()
                          << "\n";
            else
                std::cout << rat_str(v) << "\n";
        } else if (*lenseq) {
            bool eq = lens_equivalent(le_P, le_q1, le_q2, opt.oriented);
            if (opt.json)
                std::cout << json{{"P", std::to_string(le_P)},
                                  {"q1", std::to_string(le_q1)},
                                  {"q2", std::to_string(le_q2)},
                                  {"oriented", opt.oriented},
                                  {"equivalent", eq}}
                                 .dump()
                          << "\n";
            else
                std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
        } else if (*franz) {
            auto sols = franz_solve_mnplus1(franz_bound);
            if (opt.json) {
                json arr = json::array();
                for (const auto& s : sols)
                    arr.push_back(json::array({std::to_string(s[0]), std::to_string(s[1]),
                                               std::to_string(s[2]), std::to_string(s[3])}));
                std::cout << json{{"bound", std::to_string(franz_bound)}, {"solutions", arr}}.dump()
                          << "\n";
            } else {
                for (const auto& s : sols)
                    std::cout << "(m,n,i,j) = (" << s[0] << "," << s[1] << "," << s[2] << ","
                              << s[3] << ")\n";
                std::cout << sols.size() << " solution(s)\n";
            }
        } else if (*scan) {
            ScanReport report;
            if (scan_family == "A") {
                report = scan_A(sc_max_mn, sc_beta_max, sc_alpha_window, opt.jobs);
            } else if (scan_family == "B") {
                if (!scan->count("--beta-max"))
                    sc_beta_max = 3;
                if (!scan->count("--alpha-window"))
                    sc_alpha_window = 60;
                report = scan_B(sc_p_max, sc_q_max, sc_beta_max, sc_alpha_window, opt.jobs, opt.oriented);
            } else {
                throw std::invalid_argument("family must be A or B");
            }
            run_scan(opt, report, sc_summary);
            if (report.mismatch_count > 0)
                return 2;
        } else if (*selfcheck) {
            auto results = run_selfcheck(self_max_mn);
            bool all_pass = true;
            if (opt.json) {
                json arr = json::array();
                for (const auto& r : results) {
                    arr.push_back(json{{"suite", r.suite},
                                       {"checks", std::to_string(r.checks)},
                                       {"pass", r.pass},
                                       {"failure", r.failure}});
                    all_pass = all_pass && r.pass;
                }
                std::cout << arr.dump() << "\n";
            } else {
                for (const auto& r : results) {
                    std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << " (" << r.checks
                              << " checks)";
                    if (!r.pass)
                        std::cout << " first failure: " << r.failure;
                    std::cout << "\n";
                    all_pass = all_pass && r.pass;
                }
            }
            if (!all_pass)
                return 2;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
