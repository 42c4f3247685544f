#include "nclkit/rational.hpp"

#include <charconv>
#include <string>

#include "nclkit/error.hpp"

namespace nclkit {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw parse_error("not a rational number: '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_int(text.substr(0, slash), text);
        const auto den = parse_int(text.substr(slash + 1), text);
        if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto frac = text.substr(dot + 1);
        if (frac.size() > 15) throw parse_error("too many decimal digits in '" + std::string(text) + "'");
        std::string digits(text.substr(0, dot));
        const bool negative = !digits.empty() && digits[0] == '-';
        std::int64_t whole = digits.empty() || digits == "-" ? 0 : parse_int(digits, text);
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        std::int64_t part = frac.empty() ? 0 : parse_int(frac, text);
        if (part < 0) throw parse_error("not a rational number: '" + std::string(text) + "'");
        Rational r(whole);
        r += Rational(negative ? -part : part, scale);
        return r;
    }
    return Rational(parse_int(text, text));
}

}  // namespace nclkit
