#include "nielsen/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nielsen {

Integer floor_to_integer(const Rational& r) {
    Integer num = numerator(r);
    Integer den = denominator(r);
    Integer q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) {
        --q;
    }
    return q;
}

Integer ceil_to_integer(const Rational& r) {
    return -floor_to_integer(-r);
}

bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

Rational mod_one(const Rational& r) {
    return r - Rational(floor_to_integer(r));
}

namespace {

Integer parse_integer_token(std::string_view text, std::string_view whole) {
    bool negative = false;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) {
        throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
    }
    Integer value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
        }
        value = value * 10 + (text[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer_token(text, text));
    }
    Integer num = parse_integer_token(text.substr(0, slash), text);
    Integer den = parse_integer_token(text.substr(slash + 1), text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace nielsen
