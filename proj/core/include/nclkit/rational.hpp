#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace nclkit {

using Rational = boost::rational<std::int64_t>;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

// Accepts "p/q", an integer, or a finite decimal such as "0.25". Throws parse_error.
Rational parse_rational(std::string_view text);

}  // namespace nclkit
