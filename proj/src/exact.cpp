#include "symchar/exact.hpp"

#include <stdexcept>

namespace symchar {

Int factorial(int n)
{
  if (n < 0)
    throw std::invalid_argument("factorial: n must be nonnegative");
  Int f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

Int falling_factorial(const Int& n, int l)
{
  if (l < 0)
    throw std::invalid_argument("falling_factorial: l must be nonnegative");
  Int f = 1;
  for (int i = 0; i < l; ++i)
    f *= n - i;
  return f;
}

Int int_pow(const Int& base, int exp)
{
  if (exp < 0)
    throw std::invalid_argument("int_pow: exponent must be nonnegative");
  Int r = 1;
  Int b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1)
      r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rat rat_pow(const Rat& base, int exp)
{
  if (exp < 0) {
    if (base == 0)
      throw std::invalid_argument("rat_pow: zero base with negative exponent");
    return Rat(1) / rat_pow(base, -exp);
  }
  Rat r = 1;
  Rat b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1)
      r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rat rat_abs(const Rat& x)
{
  return x < 0 ? Rat(-x) : x;
}

std::string rat_to_string(const Rat& x)
{
  const Int num = numerator(x);
  const Int den = denominator(x);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

Rat parse_rational(const std::string& text)
{
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rat(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0)
      throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  }
}

} // namespace symchar
