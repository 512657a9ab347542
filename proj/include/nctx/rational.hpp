#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace nctx {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RVector = std::vector<Rational>;
using RMatrix = std::vector<std::vector<Rational>>;

/// Parse "p/q", "p", or a plain decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

/// Render as "p" or "p/q".
std::string to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace nctx
