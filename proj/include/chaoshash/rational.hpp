#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chaoshash {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow10(std::size_t k) {
    return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k));
}

// 10^-k as an exact rational.
inline Rational inv_pow10(std::size_t k) { return Rational(1, pow10(k)); }

// Decimal rendering truncated toward zero: 9/4 with 3 digits -> "2.250".
inline std::string to_decimal_string(const Rational& r, std::size_t digits = 12) {
    BigInt num = numerator(r);
    const BigInt den = denominator(r);
    std::string out;
    if (num < 0) {
        out += '-';
        num = -num;
    }
    out += BigInt(num / den).str();
    if (digits == 0) return out;
    out += '.';
    BigInt rem = num % den;
    for (std::size_t i = 0; i < digits; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + BigInt(rem / den).convert_to<int>());
        rem %= den;
    }
    return out;
}

// "p/q" in lowest terms; integers render with denominator 1 ("3/1").
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Decimal rendering of sqrt(value), truncated: exactly
// floor(sqrt(value) * 10^digits) / 10^digits printed with a decimal point.
inline std::string sqrt_decimal_string(const Rational& value, std::size_t digits = 6) {
    if (value < 0) throw std::invalid_argument("sqrt_decimal_string: negative value");
    const BigInt vn = numerator(value), vd = denominator(value);
    const BigInt scaled = boost::multiprecision::sqrt(pow10(2 * digits) * vn * vd) / vd;
    const BigInt unit = pow10(digits);
    std::string frac = BigInt(scaled % unit).str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return BigInt(scaled / unit).str() + "." + frac;
}

// Accepts "p/q", plain integers, decimals, and scientific notation
// ("1/1000000", "42", "-0.25", "1e-6", "2.5E-3"). Exact in every form.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> void {
        throw std::invalid_argument("parse_rational: bad number '" + std::string(text) + "'");
    };

    std::size_t begin = 0, end = text.size();
    while (begin < end && text[begin] == ' ') ++begin;
    while (end > begin && text[end - 1] == ' ') --end;
    std::string_view body = text.substr(begin, end - begin);
    if (body.empty()) fail();

    auto parse_int = [&](std::string_view digits, bool allow_sign) -> BigInt {
        bool negative = false;
        std::size_t pos = 0;
        if (allow_sign && pos < digits.size() && (digits[pos] == '+' || digits[pos] == '-')) {
            negative = digits[pos] == '-';
            ++pos;
        }
        if (pos == digits.size()) fail();
        BigInt value = 0;
        for (; pos < digits.size(); ++pos) {
            if (digits[pos] < '0' || digits[pos] > '9') fail();
            value = value * 10 + (digits[pos] - '0');
        }
        return negative ? BigInt(-value) : value;
    };

    const std::size_t slash = body.find('/');
    if (slash != std::string_view::npos) {
        const BigInt num = parse_int(body.substr(0, slash), true);
        const BigInt den = parse_int(body.substr(slash + 1), false);
        if (den == 0) fail();
        return Rational(num, den);
    }

    bool negative = false;
    std::size_t pos = 0;
    if (pos < body.size() && (body[pos] == '+' || body[pos] == '-')) {
        negative = body[pos] == '-';
        ++pos;
    }
    std::string digits;
    std::size_t frac_len = 0;
    bool seen_digit = false, seen_dot = false;
    long exponent = 0;
    for (; pos < body.size(); ++pos) {
        const char c = body[pos];
        if (c >= '0' && c <= '9') {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            const BigInt e = parse_int(body.substr(pos + 1), true);
            if (e < -100000 || e > 100000) fail();
            exponent = e.convert_to<long>();
            pos = body.size() - 1;
        } else {
            fail();
        }
    }
    if (!seen_digit) fail();

    BigInt mantissa = digits.empty() ? BigInt(0) : parse_int(digits, false);
    if (negative) mantissa = -mantissa;
    Rational value(mantissa, pow10(frac_len));
    if (exponent > 0)
        value *= Rational(pow10(static_cast<std::size_t>(exponent)));
    else if (exponent < 0)
        value /= Rational(pow10(static_cast<std::size_t>(-exponent)));
    return value;
}

}  // namespace chaoshash
