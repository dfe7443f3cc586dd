#include "pentaloss/rational.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace pentaloss {

namespace {

BigInt pow10(int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
}

// floor(log10(a/b)) for positive a/b.
int floor_log10(const BigInt& a, const BigInt& b) {
    long da = static_cast<long>(a.str().size());
    long db = static_cast<long>(b.str().size());
    int e = static_cast<int>(da - db);
    // candidate satisfies b*10^e <= a < b*10^(e+1); adjust by comparison
    auto le = [&](int ee) {
        if (ee >= 0) return b * pow10(ee) <= a;
        return b <= a * pow10(-ee);
    };
    while (!le(e)) --e;
    while (le(e + 1)) ++e;
    return e;
}

}  // namespace

std::string to_scientific(const Rational& v, int sig_digits) {
    if (sig_digits < 1) throw std::invalid_argument("sig_digits must be positive");
    if (v == 0) return "0";
    bool neg = v < 0;
    BigInt a = boost::multiprecision::numerator(v);
    BigInt b = boost::multiprecision::denominator(v);
    if (a < 0) a = -a;
    int e = floor_log10(a, b);
    // mantissa = round(a/b * 10^(sig-1-e)), half up
    int shift = sig_digits - 1 - e;
    BigInt num = a, den = b;
    if (shift >= 0) num *= pow10(shift); else den *= pow10(-shift);
    BigInt m = (2 * num + den) / (2 * den);
    if (m >= pow10(sig_digits)) {
        m /= 10;
        ++e;
    }
    std::string digits = m.str();
    std::string out = neg ? "-" : "";
    out += digits.substr(0, 1);
    if (sig_digits > 1) {
        out += ".";
        out += digits.substr(1);
    }
    out += "e" + std::to_string(e);
    return out;
}

double to_double_safe(const Rational& v) {
    if (v == 0) return 0.0;
    return std::strtod(to_scientific(v, 17).c_str(), nullptr);
}

std::string format_table(const Rational& v) {
    if (v == 0) return "0";
    if (v < 0) return "-" + format_table(Rational(-v));
    if (v >= Rational(1, 1000)) {
        // fixed, three decimals, half up
        BigInt a = boost::multiprecision::numerator(v);
        BigInt b = boost::multiprecision::denominator(v);
        BigInt milli = (2 * a * 1000 + b) / (2 * b);
        BigInt ip = milli / 1000;
        BigInt fp = milli % 1000;
        char buf[8];
        std::snprintf(buf, sizeof buf, "%03d", static_cast<int>(fp));
        return ip.str() + "." + buf;
    }
    return to_scientific(v, 2);
}

std::string format_display(double v) {
    if (v == 0) return "0";
    if (!std::isfinite(v)) return "nan";
    if (std::abs(v) >= 1e-3) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3g", v);
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    std::string s = buf;
    auto epos = s.find('e');
    std::string mant = s.substr(0, epos);
    int exp = std::atoi(s.c_str() + epos + 1);
    return mant + "e" + std::to_string(exp);
}

}  // namespace pentaloss
