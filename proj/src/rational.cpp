#include "bintab/rational.hpp"

#include "bintab/errors.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace bintab {

namespace {

Integer pow10(unsigned exponent) {
    Integer result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = s.substr(e + 1);
        const char* first = exp_text.data();
        if (!exp_text.empty() && exp_text.front() == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, exp_text.data() + exp_text.size(), exponent);
        if (ec != std::errc() || ptr != exp_text.data() + exp_text.size())
            throw ParseError("malformed exponent in '" + std::string(text) + "'");
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw ParseError("malformed number '" + std::string(text) + "'");
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
        digits = std::string(s);
    }
    Rational value{Integer(digits, 10)};
    if (exponent > 0)
        value *= pow10(static_cast<unsigned>(exponent));
    else if (exponent < 0)
        value /= pow10(static_cast<unsigned>(-exponent));
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_decimal(text.substr(0, slash));
        Rational den = parse_decimal(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Rational r = num / den;
        r.canonicalize();
        return r;
    }
    return parse_decimal(text);
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("non-finite value cannot be made exact");
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc()) throw DomainError("cannot format double");
    return parse_decimal(std::string_view(buf.data(), static_cast<std::size_t>(ptr - buf.data())));
}

Rational round_to_digits(long double value, int digits) {
    if (digits < 0 || digits > 18) throw DomainError("rounding digits must lie in [0, 18]");
    if (!std::isfinite(value)) throw DomainError("cannot round a non-finite value");
    const long double scale = std::pow(10.0L, digits);
    const long long scaled = std::llround(value * scale);
    Rational r{Integer(std::to_string(scaled), 10), pow10(static_cast<unsigned>(digits))};
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
    const Integer scale = pow10(static_cast<unsigned>(digits));
    Rational scaled = abs(value) * scale;
    // round half away from zero
    Integer q = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (value < 0 && q != 0) s.insert(0, "-");
    return s;
}

bool exact_sqrt(const Rational& value, Rational& root) {
    if (value < 0) return false;
    const Integer& n = value.get_num();
    const Integer& d = value.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Integer rn = sqrt(n);
    Integer rd = sqrt(d);
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

Integer gcd_of(const std::vector<Integer>& values) {
    Integer g = 0;
    for (const auto& v : values) {
        if (v == 0) continue;
        g = gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) l = lcm(l, v.get_den());
    return l;
}

}  // namespace bintab
