#ifndef LENSTOR_REPORT_HPP
#define LENSTOR_REPORT_HPP

#include <string>

#include <json.hpp>

#include "lenstor/decider.hpp"

/* Text and JSON rendering of verdicts and scan reports. All numbers are
 * emitted as decimal strings; no value ever passes through floating point. */

namespace lenstor {

using json = nlohmann::json;

inline std::string seifert_fraction_str(const SeifertFraction& f)
{
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

inline json lens_to_json(const LensType& t)
{
    return json{{"P", std::to_string(t.P)},
                {"Q", std::to_string(t.Q)},
                {"oriented", t.oriented}};
}

inline json witness_to_json(const ObstructionWitness& w)
{
    return json{{"e", std::to_string(w.e)},
                {"f", std::to_string(w.f)},
                {"i", std::to_string(w.i)},
                {"j", std::to_string(w.j)},
                {"eta", w.unit.sign > 0 ? "+1" : "-1"},
                {"shift", std::to_string(w.unit.shift)},
                {"alpha_prime", std::to_string(w.alpha_prime)}};
}

inline json verdict_to_json(const Verdict& v)
{
    json out;
    switch (v.kind) {
    case VerdictKind::lens:
        out["kind"] = "lens";
        out["lens"] = lens_to_json(v.lens);
        break;
    case VerdictKind::connected_sum:
        out["kind"] = "connected-sum";
        out["summands"] = json::array({lens_to_json(v.sum_first), lens_to_json(v.sum_second)});
        break;
    case VerdictKind::small_seifert:
        out["kind"] = "small-seifert";
        out["seifert"] = json{{"base", std::to_string(v.seifert_base)},
                              {"fractions",
                               json::array({seifert_fraction_str(v.seifert[0]),
                                            seifert_fraction_str(v.seifert[1]),
                                            seifert_fraction_str(v.seifert[2])})}};
        break;
    case VerdictKind::not_lens:
        out["kind"] = "not-lens";
        out["reason"] = v.reason;
        break;
    case VerdictKind::inconclusive:
        out["kind"] = "inconclusive";
        out["reason"] = v.reason;
        break;
    }
    if (!v.witnesses.empty()) {
        json ws = json::array();
        for (const auto& w : v.witnesses)
            ws.push_back(witness_to_json(w));
        out["witnesses"] = ws;
    }
    if (!v.orientation_note.empty())
        out["orientation_note"] = v.orientation_note;
    return out;
}

inline json certificates_to_json(const Verdict& v)
{
    json certs = json::array();
    for (const auto& c : v.certificates)
        certs.push_back(json{{"check", c.check}, {"detail", c.detail}});
    return certs;
}

inline json params_to_json(const SurgerySpec& s)
{
    json p;
    if (s.family == Family::A) {
        p["m"] = std::to_string(s.p1);
        p["n"] = std::to_string(s.p2);
    } else {
        p["p"] = std::to_string(s.p1);
        p["q"] = std::to_string(s.p2);
    }
    p["alpha"] = std::to_string(s.a1);
    p["beta"] = std::to_string(s.b1);
    if (!(s.a2 == 0 && s.b2 == 1)) {
        p["alpha2"] = std::to_string(s.a2);
        p["beta2"] = std::to_string(s.b2);
    }
    return p;
}

/* One JSON object per scanned instance. */
inline json scan_row_to_json(const ScanRow& row)
{
    json out;
    out["family"] = row.spec.family == Family::A ? "A" : "B";
    out["params"] = params_to_json(row.spec);
    out["verdict"] = verdict_to_json(row.verdict);
    out["certificates"] = certificates_to_json(row.verdict);
    if (row.mismatch)
        out["mismatch"] = row.mismatch_note;
    return out;
}

inline std::string lens_text(const LensType& t)
{
    return "L(" + std::to_string(t.P) + "," + std::to_string(t.Q) + ")";
}

inline std::string verdict_headline(const Verdict& v)
{
    switch (v.kind) {
    case VerdictKind::lens:
        return "LENS " + lens_text(v.lens);
    case VerdictKind::connected_sum:
        return "CONNECTED-SUM " + lens_text(v.sum_first) + " # " + lens_text(v.sum_second);
    case VerdictKind::small_seifert:
        return "SMALL-SEIFERT (" + std::to_string(v.seifert_base) + "; " +
               seifert_fraction_str(v.seifert[0]) + ", " + seifert_fraction_str(v.seifert[1]) +
               ", " + seifert_fraction_str(v.seifert[2]) + ")";
    case VerdictKind::not_lens:
        return "NOT-LENS (" + v.reason + ")";
    case VerdictKind::inconclusive:
        return "INCONCLUSIVE (" + v.reason + ")";
    }
    return "?";
}

inline std::string spec_text(const SurgerySpec& s)
{
    std::string name = s.family == Family::A ? "A" : "B";
    std::string out = "(" + name + "_{" + std::to_string(s.p1) + "," + std::to_string(s.p2) +
                      "}; " + std::to_string(s.a1) + "/" + std::to_string(s.b1) + ", " +
                      std::to_string(s.a2) + "/" + std::to_string(s.b2) + ")";
    return out;
}

} // namespace lenstor

#endif
