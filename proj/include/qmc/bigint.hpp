#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmc {

using BigInt = boost::multiprecision::cpp_int;
// Always stored reduced with a positive denominator; zero is 0/1.
using ExactRational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline BigInt ipow(std::int64_t base, std::uint64_t exp) { return ipow(BigInt(base), exp); }

inline BigInt numerator_of(const ExactRational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const ExactRational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const ExactRational& r) { return denominator_of(r) == 1; }

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const ExactRational& r);

BigInt factorial(unsigned n);

}  // namespace qmc
