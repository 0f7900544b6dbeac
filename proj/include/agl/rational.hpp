#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace agl {

/// Exact rational scalar. Always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text)
{
  std::string s(text);
  if (s.empty())
    throw std::invalid_argument("empty rational literal");
  if (s.front() == '+')
    s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational pow(const Rational& base, unsigned exponent)
{
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U)
      result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace agl

namespace agl::modp {

/// Arithmetic modulo the Mersenne prime 2^61 - 1, used for fast nonvanishing tests.
inline constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b)
{
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & prime) + static_cast<std::uint64_t>(p >> 61);
  return r >= prime ? r - prime : r;
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b)
{
  const std::uint64_t r = a + b;
  return r >= prime ? r - prime : r;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + prime - b; }
inline std::uint64_t pow(std::uint64_t b, std::uint64_t e)
{
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1U)
      r = mul(r, b);
    b = mul(b, b);
    e >>= 1U;
  }
  return r;
}

/// q mod prime, or nullopt when the denominator is divisible by the prime.
inline std::optional<std::uint64_t> residue(const Rational& q)
{
  static_assert(sizeof(unsigned long) == 8);
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), prime);
  if (den == 0)
    return std::nullopt;
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), prime);
  return den == 1 ? num : mul(num, pow(den, prime - 2));
}

}  // namespace agl::modp
