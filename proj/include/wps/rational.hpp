#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace wps {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;

// All values on the certification path are exact rationals.
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(Int num, Int den) {
  return Rat(BigInt(num), BigInt(den));
}

// Always renders "p/q", integers included ("2/1"), never a decimal.
inline std::string rat_str(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::optional<Rat> parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rat(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace wps
