#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace gel {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", "p" and a leading sign.
Rational parse_rational(std::string_view text);

// Always "p/q" (q = 1 for integers), the certificate form.
std::string format_rational(const Rational& r);

// "p" for integers, "p/q" otherwise.
std::string short_rational(const Rational& r);

Rational floor_of(const Rational& r);
Rational ceil_of(const Rational& r);

}  // namespace gel
