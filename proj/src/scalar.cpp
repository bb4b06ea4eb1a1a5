#include "nilcohom/scalar.hpp"

#include <cctype>
#include <ostream>

namespace nilcohom {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// leading zeros would be read as an octal prefix by the bignum constructor
Integer parse_digits(std::string_view digits) {
    size_t nz = 0;
    while (nz + 1 < digits.size() && digits[nz] == '0') ++nz;
    return Integer(std::string(digits.substr(nz)));
}

// Consumes `[-]p[/q]` starting at pos; advances pos past the token.
Rational consume_rational(std::string_view text, size_t& pos) {
    size_t start = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    size_t digits_begin = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == digits_begin)
        throw ParseError("expected digits, got '" +
                             std::string(text.substr(start, pos - start + 1)) + "'",
                         "scalar");
    Integer num = parse_digits(text.substr(digits_begin, pos - digits_begin));
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t den_begin = pos;
        while (pos < text.size() && is_digit(text[pos])) ++pos;
        if (pos == den_begin)
            throw ParseError("expected denominator digits after '/'", "scalar");
        den = parse_digits(text.substr(den_begin, pos - den_begin));
        if (den == 0) throw DivisionByZero();
    }
    if (neg) num = -num;
    return Rational(num, den);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    size_t pos = 0;
    Rational r = consume_rational(text, pos);
    if (pos != text.size())
        throw ParseError("trailing characters '" + std::string(text.substr(pos)) + "'",
                         "scalar");
    return r;
}

GaussianRational parse_scalar(std::string_view text) {
    std::string_view trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.remove_prefix(1);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.remove_suffix(1);
    if (trimmed.empty()) throw ParseError("empty scalar", "scalar");

    size_t pos = 0;
    Rational first = consume_rational(trimmed, pos);
    if (pos == trimmed.size()) return {first};                      // R
    if (trimmed[pos] == 'i') {
        if (pos + 1 != trimmed.size())
            throw ParseError("trailing characters '" +
                                 std::string(trimmed.substr(pos + 1)) + "'",
                             "scalar");
        return {Rational(0), first};                                // R i
    }
    if (trimmed[pos] != '+' && trimmed[pos] != '-')
        throw ParseError("unexpected token '" + std::string(1, trimmed[pos]) + "'",
                         "scalar");
    Rational second = consume_rational(trimmed, pos);               // sign is part of R
    if (pos == trimmed.size() || trimmed[pos] != 'i')
        throw ParseError("expected 'i' after imaginary part", "scalar");
    if (pos + 1 != trimmed.size())
        throw ParseError("trailing characters '" +
                             std::string(trimmed.substr(pos + 1)) + "'",
                         "scalar");
    return {first, second};                                         // R +- R i
}

std::string format_rational(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

std::string format_scalar(const GaussianRational& z) {
    if (z.im() == 0) return format_rational(z.re());
    if (z.re() == 0) return format_rational(z.im()) + "i";
    std::string s = format_rational(z.re());
    if (z.im() > 0) s += "+";
    return s + format_rational(z.im()) + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << format_scalar(z);
}

}  // namespace nilcohom
