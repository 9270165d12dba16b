#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace alexobs {

// Exact coefficient arithmetic for the ring Q[t,t^-1]. cpp_rational keeps
// the canonical form we rely on: gcd(|num|, den) = 1, den > 0, zero = 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den with any sign of den (den == 0 is a domain error).
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long long num, long long den = 1);

std::string rational_str(const Rational& q);

}  // namespace alexobs
