#ifndef QHARMONIC_BIGRAT_HPP
#define QHARMONIC_BIGRAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qharmonic {

/// Arbitrary-precision rational. GMP keeps every mpq_class canonical
/// (coprime, positive denominator, zero as 0/1) after each operation.
using BigRat = mpq_class;
using BigInt = mpz_class;

/// Serializes as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const BigRat& r) { return r.get_str(); }

inline BigRat parse_bigrat(std::string_view text)
{
  if (text.empty())
    throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  const auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+'))
      s.remove_prefix(1);
    if (s.empty())
      return false;
    for (char c : s)
      if (c < '0' || c > '9')
        return false;
    return true;
  };
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!digits_ok(num, true) || (slash != std::string_view::npos && !digits_ok(den, false)))
    throw std::invalid_argument("malformed rational literal: " + std::string(text));

  BigInt p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  BigInt q = den.empty() ? BigInt(1) : BigInt(std::string(den), 10);
  if (q == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + std::string(text));
  BigRat r(p, q);
  r.canonicalize();
  return r;
}

/// Exact power with a signed exponent. Zero to a negative power throws.
inline BigRat pow(const BigRat& base, long exponent)
{
  if (exponent < 0) {
    if (base == 0)
      throw std::domain_error("zero raised to a negative power");
    return pow(BigRat(1) / base, -exponent);
  }
  BigRat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline BigRat binomial(long n, long k)
{
  if (n < 0 || k < 0 || k > n)
    return BigRat(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRat(r);
}

/// n choose 2 as a plain integer, used for q-exponents.
constexpr long choose2(long n) { return n * (n - 1) / 2; }

} // namespace qharmonic

#endif // QHARMONIC_BIGRAT_HPP
