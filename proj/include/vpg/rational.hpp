#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "vpg/errors.hpp"

namespace vpg {

// Arithmetic results are canonical; the two-argument mpq_class constructor is
// not, so fractions are built through make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw ValidationError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational");
    const auto slash = s.find('/');
    auto digits_ok = [](std::string_view d, bool allow_sign) {
        if (d.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (d[0] == '-' || d[0] == '+')) i = 1;
        if (i == d.size()) return false;
        for (; i < d.size(); ++i)
            if (d[i] < '0' || d[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw ParseError("bad rational '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    BigInt n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Round half away from zero to `digits` fractional digits, trailing zeros stripped.
inline std::string to_decimal(const Rational& r, int digits = 6) {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const bool neg = sgn(r) < 0;
    Rational a = abs(r) * scale + make_rational(1, 2);
    BigInt q = a.get_num() / a.get_den();
    BigInt ip = q / scale, fp = q % scale;
    std::string out = neg && q != 0 ? "-" : "";
    out += ip.get_str();
    if (fp != 0) {
        std::string f = fp.get_str();
        f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

}  // namespace vpg
