#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace tropical {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

// Accepts "p/q" or a bare integer "p". Returns nullopt on malformed text or q == 0.
std::optional<Rational> parse_rational(std::string_view text);

} // namespace tropical
