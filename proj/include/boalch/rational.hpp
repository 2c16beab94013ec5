#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace boalch {

using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", "-p/q" or "p". Throws std::invalid_argument on garbage.
inline Rational parse_rational(const std::string& s) {
  try {
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rational r(s);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
}

inline std::string rational_str(const Rational& r) { return r.str(); }

inline Rational half() { return Rational(1, 2); }

}  // namespace boalch
