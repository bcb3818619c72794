#include "knotres/rational.hpp"

#include <cctype>

#include "knotres/error.hpp"

namespace knotres {

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
  auto bad = [&] { fail("MalformedSyntax", "bad rational '" + s + "'"); };
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) bad();
      return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) bad();
    Integer d(den);
    if (d == 0) bad();
    return Rational(Integer(num), d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    // fall through to the failure below
  }
  fail("MalformedSyntax", "bad rational '" + s + "'");
}

}  // namespace knotres
