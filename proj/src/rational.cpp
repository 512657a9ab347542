#include "nctx/rational.hpp"

#include <cctype>
#include <sstream>

#include "nctx/errors.hpp"

namespace nctx {

Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> ValidationError {
    return ValidationError("BadRational", "cannot parse rational '" + text + "'");
  };
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  if (!s.empty()) s.erase(s.find_last_not_of(" \t") + 1);
  if (s.empty()) throw bad();

  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Integer num(s.substr(0, slash));
      Integer den(s.substr(slash + 1));
      if (den == 0) throw bad();
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(Integer(s));
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
      throw bad();
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r = Rational(Integer(whole)) +
                 (negative ? -1 : 1) * Rational(Integer(frac), scale);
    return r;
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace nctx
