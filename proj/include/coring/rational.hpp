#pragma once

// Ground scalars: arbitrary-precision rationals, always in reduced form.
// Every verdict downstream is an exact equality of these numbers; there is
// deliberately no tolerance knob anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace coring {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Text form used by fixtures and reports: "p/q", with "/q" omitted when the
// denominator is 1.  E.g. "-3/2", "7", "0".
inline Rat rat_from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0)
      throw std::invalid_argument("zero denominator");
    if (den < 0) {  // the two-argument constructor insists on a positive denominator
      num = -num;
      den = -den;
    }
    return Rat(num, den);  // constructor reduces the fraction
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational literal: \"" + text + "\"");
  }
}

inline std::string rat_to_string(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace coring
