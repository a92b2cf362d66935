#ifndef QHARMONIC_POLY_HPP
#define QHARMONIC_POLY_HPP

#include <qharmonic/bigrat.hpp>
#include <qharmonic/detail/zpoly.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qharmonic {

/// Dense univariate polynomial in q over the rationals.
///
/// Coefficients are stored in ascending degree with no trailing zeros; the
/// zero polynomial is the empty coefficient list. Every constructor enforces
/// this, so two polynomials are equal iff their coefficient lists are.
class Poly {
public:
  Poly() = default;

  explicit Poly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Poly(std::initializer_list<BigRat> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(const BigRat& c) { return c == 0 ? Poly{} : Poly(std::vector<BigRat>{c}); }

  /// c * q^degree
  static Poly monomial(const BigRat& c, std::size_t degree)
  {
    if (c == 0)
      return {};
    std::vector<BigRat> v(degree + 1, BigRat(0));
    v[degree] = c;
    return Poly(std::move(v));
  }

  static Poly q() { return monomial(BigRat(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<BigRat>& coeffs() const noexcept { return coeffs_; }

  BigRat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRat(0); }

  const BigRat& leading() const
  {
    if (is_zero())
      throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Lowest power of q with a nonzero coefficient.
  std::size_t valuation() const
  {
    std::size_t i = 0;
    while (i < coeffs_.size() && coeffs_[i] == 0)
      ++i;
    return i;
  }

  BigRat eval(const BigRat& x) const
  {
    BigRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Poly monic() const
  {
    if (is_zero())
      return {};
    return *this * (BigRat(1) / leading());
  }

  /// Multiplication by q^k.
  Poly shifted(std::size_t k) const
  {
    if (is_zero() || k == 0)
      return *this;
    std::vector<BigRat> v(k, BigRat(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
  }

  Poly operator-() const
  {
    Poly r = *this;
    for (auto& c : r.coeffs_)
      c = -c;
    return r;
  }

  Poly& operator+=(const Poly& rhs)
  {
    if (rhs.coeffs_.size() > coeffs_.size())
      coeffs_.resize(rhs.coeffs_.size(), BigRat(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
      coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& rhs)
  {
    if (rhs.coeffs_.size() > coeffs_.size())
      coeffs_.resize(rhs.coeffs_.size(), BigRat(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
      coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }

  friend Poly operator*(const Poly& lhs, const BigRat& s)
  {
    if (s == 0)
      return {};
    Poly r = lhs;
    for (auto& c : r.coeffs_)
      c *= s;
    return r;
  }
  friend Poly operator*(const BigRat& s, const Poly& rhs) { return rhs * s; }

  friend Poly operator*(const Poly& lhs, const Poly& rhs)
  {
    if (lhs.is_zero() || rhs.is_zero())
      return {};
    auto [ca, za] = lhs.primitive_parts();
    auto [cb, zb] = rhs.primitive_parts();
    return from_primitive(ca * cb, detail::mul(za, zb));
  }

  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Writes p = content * pp with pp a primitive integer polynomial with
  /// positive leading coefficient.
  std::pair<BigRat, detail::ZPoly> primitive_parts() const
  {
    if (is_zero())
      return {BigRat(0), {}};
    BigInt den = 1;
    for (const auto& c : coeffs_)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    detail::ZPoly z;
    z.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
      BigInt v;
      mpz_divexact(v.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      v *= c.get_num();
      z.push_back(std::move(v));
    }
    BigInt g = detail::content(z);
    if (z.back() < 0)
      g = -g;
    for (auto& v : z)
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    BigRat c(g, den);
    c.canonicalize();
    return {c, std::move(z)};
  }

  static Poly from_primitive(const BigRat& content, const detail::ZPoly& z)
  {
    std::vector<BigRat> v;
    v.reserve(z.size());
    for (const auto& c : z)
      v.emplace_back(content * c);
    return Poly(std::move(v));
  }

  /// Human-readable ascending form, e.g. "1-q-q^2+q^3".
  std::string to_string(char var = 'q') const
  {
    if (is_zero())
      return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const BigRat& c = coeffs_[i];
      if (c == 0)
        continue;
      const bool neg = c < 0;
      const BigRat mag = abs(c);
      if (neg)
        out << '-';
      else if (!first)
        out << '+';
      first = false;
      if (i == 0) {
        out << mag.get_str();
        continue;
      }
      if (mag != 1)
        out << mag.get_str() << '*';
      out << var;
      if (i > 1)
        out << '^' << i;
    }
    return out.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
  void trim()
  {
    while (!coeffs_.empty() && coeffs_.back() == 0)
      coeffs_.pop_back();
  }

  std::vector<BigRat> coeffs_;
};

inline Poly pow(const Poly& base, unsigned long e)
{
  Poly result = Poly::constant(BigRat(1));
  Poly b = base;
  while (e > 0) {
    if (e & 1U)
      result *= b;
    e >>= 1U;
    if (e > 0)
      b *= b;
  }
  return result;
}

/// Quotient and remainder of a / b over the rationals.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree())
    return {Poly{}, a};
  std::vector<BigRat> rem = a.coeffs();
  std::vector<BigRat> quo(rem.size() - b.coeffs().size() + 1, BigRat(0));
  const BigRat inv_lead = BigRat(1) / b.leading();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t i = quo.size(); i-- > 0;) {
    quo[i] = rem[i + db] * inv_lead;
    if (quo[i] == 0)
      continue;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i + j] -= quo[i] * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

/// a / b when b divides a; throws otherwise.
inline Poly divexact(const Poly& a, const Poly& b)
{
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  if (a.is_zero())
    return {};
  auto [ca, za] = a.primitive_parts();
  auto [cb, zb] = b.primitive_parts();
  // By Gauss's lemma pp(b) | pp(a) in Q[q] implies the quotient is in Z[q].
  auto z = detail::try_divexact(za, zb);
  if (!z)
    throw std::domain_error("polynomial division is not exact");
  return Poly::from_primitive(ca / cb, *z);
}

/// Monic greatest common divisor over the rationals.
inline Poly gcd(const Poly& a, const Poly& b)
{
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("gcd undefined");
  if (a.is_zero())
    return b.monic();
  if (b.is_zero())
    return a.monic();
  const auto za = a.primitive_parts().second;
  const auto zb = b.primitive_parts().second;
  return Poly::from_primitive(BigRat(1), detail::gcd(za, zb)).monic();
}

} // namespace qharmonic

#endif // QHARMONIC_POLY_HPP
