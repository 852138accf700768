#include "qes/scalar.hpp"

#include <charconv>
#include <cctype>
#include <cstdio>

#include "qes/errors.hpp"

namespace qes {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw DomainError("empty number");
    if (s.find('/') != std::string::npos) {
        Rational r;
        if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw DomainError("cannot parse rational '" + text + "'");
        r.canonicalize();
        return r;
    }
    // decimal with optional exponent, parsed exactly
    std::size_t epos = s.find_first_of("eE");
    std::string mant = s.substr(0, epos);
    long exp10 = 0;
    if (epos != std::string::npos) {
        const char* b = s.data() + epos + 1;
        const char* e = s.data() + s.size();
        if (*b == '+') ++b;
        auto [ptr, ec] = std::from_chars(b, e, exp10);
        if (ec != std::errc() || ptr != e) throw DomainError("cannot parse number '" + text + "'");
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        neg = mant[0] == '-';
        mant.erase(0, 1);
    }
    std::size_t dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty()) throw DomainError("cannot parse number '" + text + "'");
    for (char ch : digits)
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw DomainError("cannot parse number '" + text + "'");
    mpz_class num(digits, 10);
    mpz_class scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    Rational r = exp10 < 0 ? Rational(num, scale) : Rational(num * scale, 1);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

Rational exact(double v) {
    if (!std::isfinite(v)) throw DomainError("non-finite value");
    return Rational(v);
}

std::string to_string(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    return c.get_str(10);
}

std::string to_string(double v) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace qes
