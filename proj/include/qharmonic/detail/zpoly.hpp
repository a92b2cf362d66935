#ifndef QHARMONIC_DETAIL_ZPOLY_HPP
#define QHARMONIC_DETAIL_ZPOLY_HPP

// Dense integer polynomial kernel behind Poly: multiplication, exact
// division and gcd all run over Z on primitive parts.

#include <qharmonic/bigrat.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qharmonic::detail {

using ZPoly = std::vector<BigInt>; // ascending degree, no trailing zeros

inline void trim(ZPoly& p)
{
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

inline BigInt content(const ZPoly& p)
{
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline void make_primitive(ZPoly& p)
{
  if (p.empty())
    return;
  BigInt g = content(p);
  if (p.back() < 0)
    g = -g;
  if (g != 1)
    for (auto& c : p)
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b)
{
  if (a.empty() || b.empty())
    return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

inline BigInt eval(const ZPoly& p, const BigInt& x)
{
  BigInt acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

/// Exact quotient a / b over Z, or nullopt when b does not divide a in Z[q].
inline std::optional<ZPoly> try_divexact(const ZPoly& a, const ZPoly& b)
{
  if (b.empty())
    throw std::domain_error("polynomial division by zero");
  if (a.empty())
    return ZPoly{};
  if (a.size() < b.size())
    return std::nullopt;
  ZPoly rem = a;
  ZPoly quo(a.size() - b.size() + 1, BigInt(0));
  const BigInt& lead = b.back();
  for (std::size_t i = quo.size(); i-- > 0;) {
    BigInt& top = rem[i + b.size() - 1];
    if (top == 0)
      continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      return std::nullopt;
    mpz_divexact(quo[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_submul(rem[i + j].get_mpz_t(), quo[i].get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t i = 0; i + 1 < b.size() && i < rem.size(); ++i)
    if (rem[i] != 0)
      return std::nullopt;
  trim(quo);
  return quo;
}

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b.
inline ZPoly pseudo_remainder(ZPoly a, const ZPoly& b)
{
  const std::size_t db = b.size() - 1;
  const BigInt& lead = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const BigInt top = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a)
      c *= lead;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_submul(a[shift + j].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
    trim(a);
  }
  return a;
}

/// Primitive polynomial remainder sequence; a and b primitive and nonzero.
inline ZPoly gcd_prs(ZPoly a, ZPoly b)
{
  if (a.size() < b.size())
    std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_remainder(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

inline BigInt max_norm(const ZPoly& p)
{
  BigInt m = 0;
  for (const auto& c : p)
    if (abs(c) > m)
      m = abs(c);
  return m;
}

/// Primitive gcd of two primitive nonzero integer polynomials, normalized to a
/// positive leading coefficient.
///
/// Heuristic gcd first: evaluate both at a large integer xi, take the integer
/// gcd, and rebuild a candidate from its balanced xi-adic digits. A candidate
/// that divides both inputs is the true gcd once xi > 2 min(|a|, |b|) + 1,
/// which the starting point guarantees. Falls back to the primitive PRS.
inline ZPoly gcd(const ZPoly& a, const ZPoly& b)
{
  if (a.size() == 1 || b.size() == 1)
    return ZPoly{BigInt(1)};

  // Shared powers of q come off first (the q^j denominators).
  std::size_t low_a = 0, low_b = 0;
  while (a[low_a] == 0)
    ++low_a;
  while (b[low_b] == 0)
    ++low_b;
  const std::size_t q_power = std::min(low_a, low_b);
  ZPoly ra(a.begin() + static_cast<long>(low_a), a.end());
  ZPoly rb(b.begin() + static_cast<long>(low_b), b.end());

  auto with_q_power = [q_power](ZPoly g) {
    g.insert(g.begin(), q_power, BigInt(0));
    return g;
  };
  if (ra.size() == 1 || rb.size() == 1)
    return with_q_power(ZPoly{BigInt(1)});

  BigInt xi = 2 * std::min(max_norm(ra), max_norm(rb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    BigInt h;
    const BigInt ea = eval(ra, xi);
    const BigInt eb = eval(rb, xi);
    mpz_gcd(h.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());

    ZPoly cand;
    const BigInt half = xi / 2;
    while (h != 0) {
      BigInt digit;
      mpz_fdiv_r(digit.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      if (digit > half)
        digit -= xi;
      cand.push_back(digit);
      h -= digit;
      mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    }
    trim(cand);
    make_primitive(cand);
    if (!cand.empty() && try_divexact(ra, cand) && try_divexact(rb, cand))
      return with_q_power(std::move(cand));
    xi = xi * 73794 / 27011;
  }
  return with_q_power(gcd_prs(std::move(ra), std::move(rb)));
}

} // namespace qharmonic::detail

#endif // QHARMONIC_DETAIL_ZPOLY_HPP
