#include "cotanhom/rational.hpp"

#include "cotanhom/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace cotanhom {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational::Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw InputError("not an integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Rational::Integer(std::string(s));
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    if (denominator < 0) {
        value_ = Backend(-boost::multiprecision::cpp_int(numerator), -boost::multiprecision::cpp_int(denominator));
    } else {
        value_ = Backend(numerator, denominator);
    }
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    Rational r;
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        r.value_ = Backend(parse_integer(text));
        return r;
    }
    const auto den = parse_integer(text.substr(slash + 1));
    if (den.is_zero()) throw InputError("zero denominator in '" + std::string(text) + "'");
    r.value_ = Backend(parse_integer(text.substr(0, slash)), den);
    return r;
}

std::string Rational::to_string() const {
    const auto den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

}  // namespace cotanhom
