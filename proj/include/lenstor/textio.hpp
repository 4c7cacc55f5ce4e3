#ifndef LENSTOR_TEXTIO_HPP
#define LENSTOR_TEXTIO_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "lenstor/bilaurent.hpp"
#include "lenstor/laurent.hpp"
#include "lenstor/rational.hpp"
#include "lenstor/sympoly.hpp"

/* Shared text formats.
 *
 * Polynomials: terms like `3*t^-2*x^5` joined by `+`/`-`; variables are
 * exactly `t` and `x`; coefficients are integers or `p/q` rationals.
 * Symmetric polynomials: `4 - 2<1> + <2>` where `<i>` denotes t^i + t^-i. */

namespace lenstor {

namespace textio_detail {

class Scanner {
public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool done()
    {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    long long integer()
    {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == digits)
            fail("expected integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    /* unsigned integer or p/q rational */
    Rational coefficient()
    {
        Rational num = to_rational(integer());
        skip_ws();
        if (accept('/')) {
            Rational den = to_rational(integer());
            if (den == 0)
                fail("zero denominator");
            num /= den;
        }
        return num;
    }

    bool at_digit()
    {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    [[noreturn]] void fail(const std::string& msg)
    {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) +
                                    ": " + msg + " in '" + s_ + "'");
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace textio_detail

/* Parses the shared format into a (t, x)-polynomial. */
inline BiLaurentPoly parse_poly(const std::string& text)
{
    textio_detail::Scanner sc(text);
    BiLaurentPoly result;
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.accept('-'))
            sign = -1;
        else if (sc.accept('+')) {
        } else if (!first) {
            sc.fail("expected '+' or '-'");
        }
        first = false;

        Rational c(1);
        bool saw_coeff = false;
        if (sc.at_digit()) {
            c = sc.coefficient();
            saw_coeff = true;
        }
        long long te = 0, xe = 0;
        bool saw_var = false;
        while (true) {
            if (saw_coeff || saw_var)
                sc.accept('*');
            char v = sc.peek();
            if (v != 't' && v != 'x')
                break;
            sc.accept(v);
            long long e = 1;
            if (sc.accept('^'))
                e = sc.integer();
            (v == 't' ? te : xe) += e;
            saw_var = true;
        }
        if (!saw_coeff && !saw_var)
            sc.fail("expected term");
        result.add_term(te, xe, sign * c);
    }
    return result;
}

inline LaurentPoly parse_laurent(const std::string& text)
{
    BiLaurentPoly p = parse_poly(text);
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e.second != 0)
            throw std::invalid_argument("variable x not allowed here: '" + text + "'");
        r.add_term(e.first, c);
    }
    return r;
}

namespace textio_detail {

inline void append_term(std::string& out, bool first, const Rational& c,
                        const std::string& monomial)
{
    Rational a = c < 0 ? Rational(-c) : c;
    if (first)
        out += c < 0 ? "-" : "";
    else
        out += c < 0 ? " - " : " + ";
    if (monomial.empty()) {
        out += rat_str(a);
    } else {
        if (a != 1)
            out += rat_str(a) + "*";
        out += monomial;
    }
}

inline std::string power(const char* var, long long e)
{
    if (e == 0)
        return "";
    std::string s = var;
    if (e != 1)
        s += "^" + std::to_string(e);
    return s;
}

} // namespace textio_detail

/* Terms in ascending (x-exponent, t-exponent) order. */
inline std::string print_poly(const BiLaurentPoly& p)
{
    if (p.is_zero())
        return "0";
    std::vector<std::pair<std::pair<long long, long long>, Rational>> terms;
    for (const auto& [e, c] : p.terms())
        terms.push_back({{e.second, e.first}, c});
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        std::string mono = textio_detail::power("t", e.second);
        std::string xm = textio_detail::power("x", e.first);
        if (!mono.empty() && !xm.empty())
            mono += "*" + xm;
        else
            mono += xm;
        textio_detail::append_term(out, first, c, mono);
        first = false;
    }
    return out;
}

inline std::string print_poly(const LaurentPoly& p)
{
    BiLaurentPoly b;
    for (const auto& [e, c] : p.terms())
        b.add_term(e, 0, c);
    return print_poly(b);
}

inline SymPoly parse_sympoly(const std::string& text)
{
    textio_detail::Scanner sc(text);
    SymPoly result;
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.accept('-'))
            sign = -1;
        else if (sc.accept('+')) {
        } else if (!first) {
            sc.fail("expected '+' or '-'");
        }
        first = false;

        Rational c(1);
        bool saw_coeff = false;
        if (sc.at_digit()) {
            c = sc.coefficient();
            saw_coeff = true;
            sc.accept('*');
        }
        if (sc.accept('<')) {
            long long i = sc.integer();
            sc.expect('>');
            result.add_bracket(i, sign * c);
        } else if (saw_coeff) {
            result.add_constant(sign * c);
        } else {
            sc.fail("expected term");
        }
    }
    return result;
}

/* Constant first, then ascending bracket index: `4 - 2<1> + <2>`. */
inline std::string print_sympoly(const SymPoly& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    if (f.a0() != 0) {
        textio_detail::append_term(out, first, f.a0(), "");
        first = false;
    }
    for (const auto& [i, c] : f.coeffs()) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (a != 1)
            out += rat_str(a);
        out += "<" + std::to_string(i) + ">";
        first = false;
    }
    return out;
}

} // namespace lenstor

#endif
