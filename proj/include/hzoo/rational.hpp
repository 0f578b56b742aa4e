#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hzoo {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored reduced with positive denominator;
/// zero is 0/1. Arbitrary precision throughout, no fixed-width fallback.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den with sign normalization. Throws on den == 0.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

/// Decimal digit string -> Integer. Strips leading zeros first: cpp_int's
/// string constructor would otherwise read "09" as malformed octal.
inline Integer integer_from_digits(std::string_view digits) {
    std::size_t first = 0;
    while (first + 1 < digits.size() && digits[first] == '0') ++first;
    return Integer(std::string(digits.substr(first)));
}

/// Parses "3", "-3", "3/4" or "-3/4". Whitespace is not accepted.
inline Rational rational_from_string(std::string_view s) {
    const auto bad = [&] {
        throw std::invalid_argument("rational_from_string: malformed rational '" +
                                    std::string(s) + "'");
    };
    if (s.empty()) bad();
    bool neg = false;
    std::size_t pos = 0;
    if (s[pos] == '-' || s[pos] == '+') {
        neg = (s[pos] == '-');
        ++pos;
    }
    const auto digits = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
        if (p == start) bad();
        return std::string(s.substr(start, p - start));
    };
    Integer num = integer_from_digits(digits(pos));
    Integer den(1);
    if (pos < s.size()) {
        if (s[pos] != '/') bad();
        ++pos;
        den = integer_from_digits(digits(pos));
        if (pos != s.size()) bad();
    }
    if (neg) num = -num;
    return make_rational(num, den);
}

/// Gaussian rational a + b*i with exact components. Equality is
/// component-wise; components stay individually reduced.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussRational(int r) : re(r) {}                  // NOLINT(google-explicit-constructor)
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational unit_imaginary() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const GaussRational&, const GaussRational&) = default;

    GaussRational operator-() const { return {-re, -im}; }

    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        if (o.is_zero()) throw std::invalid_argument("GaussRational: division by zero");
        Rational norm = o.re * o.re + o.im * o.im;
        Rational r = (re * o.re + im * o.im) / norm;
        Rational i = (im * o.re - re * o.im) / norm;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    GaussRational conjugate() const { return {re, -im}; }
};

inline std::string to_string(const GaussRational& z) {
    if (z.im == 0) return to_string(z.re);
    std::string im = (z.im == 1) ? "i" : (z.im == -1) ? "-i" : to_string(z.im) + "i";
    if (z.re == 0) return im;
    if (z.im > 0 && !(z.im == 1)) return to_string(z.re) + "+" + im;
    if (z.im == 1) return to_string(z.re) + "+i";
    return to_string(z.re) + im;  // negative imaginary part carries its own sign
}

namespace detail {

template <typename F>
inline bool is_zero_coeff(const F& c) {
    if constexpr (std::is_same_v<F, GaussRational>) {
        return c.is_zero();
    } else {
        return c == 0;
    }
}

}  // namespace detail

}  // namespace hzoo
