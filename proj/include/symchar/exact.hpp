#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace symchar {

// All formula evaluation is exact; floating point appears only in the
// Monte Carlo sampler and in human-readable bound summaries.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);

// (n)_l = n (n-1) ... (n-l+1); (n)_0 = 1.
Int falling_factorial(const Int& n, int l);

Int int_pow(const Int& base, int exp);
Rat rat_pow(const Rat& base, int exp);

Rat rat_abs(const Rat& x);

// "p/q", or plain "p" when the denominator is one.
std::string rat_to_string(const Rat& x);

Rat parse_rational(const std::string& text);

} // namespace symchar
