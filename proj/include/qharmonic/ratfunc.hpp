#ifndef QHARMONIC_RATFUNC_HPP
#define QHARMONIC_RATFUNC_HPP

#include <qharmonic/poly.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qharmonic {

/// Canonical quotient num/den of polynomials in q.
///
/// Invariants: den is monic, gcd(num, den) = 1, zero is 0/1. Canonical
/// forms make equality structural.
class RatFunc {
public:
  RatFunc() : den_(Poly::constant(BigRat(1))) {}

  RatFunc(const BigRat& c) : num_(Poly::constant(c)), den_(Poly::constant(BigRat(1))) {}
  RatFunc(long c) : RatFunc(BigRat(c)) {}

  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(BigRat(1))) {}

  /// Reduces num/den to canonical form; den must be nonzero.
  RatFunc(const Poly& num, const Poly& den)
  {
    if (den.is_zero())
      throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
      den_ = Poly::constant(BigRat(1));
      return;
    }
    auto [cn, zn] = num.primitive_parts();
    auto [cd, zd] = den.primitive_parts();
    const detail::ZPoly g = detail::gcd(zn, zd);
    if (g.size() > 1) {
      zn = *detail::try_divexact(zn, g);
      zd = *detail::try_divexact(zd, g);
    }
    // zd has a positive leading coefficient; fold it into the scalar.
    const BigRat lead(zd.back());
    num_ = Poly::from_primitive(cn / (cd * lead), zn);
    den_ = Poly::from_primitive(BigRat(1) / lead, zd);
  }

  /// q^e for any integer e; negative powers live in the denominator.
  static RatFunc q_power(long e)
  {
    RatFunc r;
    if (e >= 0)
      r.num_ = Poly::monomial(BigRat(1), static_cast<std::size_t>(e));
    else {
      r.num_ = Poly::constant(BigRat(1));
      r.den_ = Poly::monomial(BigRat(1), static_cast<std::size_t>(-e));
    }
    return r;
  }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  BigRat eval(const BigRat& q0) const
  {
    const BigRat d = den_.eval(q0);
    if (d == 0)
      throw std::domain_error("pole at evaluation point");
    return num_.eval(q0) / d;
  }

  RatFunc operator-() const
  {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
  {
    if (a.is_zero() || b.is_zero())
      return {};
    if (a.is_polynomial() && b.is_polynomial())
      return RatFunc(a.num_ * b.num_);
    // Cross-cancel: with a, b canonical, the result is canonical once
    // gcd(a.num, b.den) and gcd(b.num, a.den) are removed.
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = divexact(a.num_, g1) * divexact(b.num_, g2);
    r.den_ = divexact(a.den_, g2) * divexact(b.den_, g1);
    return r;
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc inverse() const
  {
    if (is_zero())
      throw std::domain_error("division by the zero rational function");
    RatFunc r;
    const BigRat lead = num_.leading();
    r.num_ = den_ * (BigRat(1) / lead);
    r.den_ = num_ * (BigRat(1) / lead);
    return r;
  }

  RatFunc& operator+=(const RatFunc& rhs) { return *this = *this + rhs; }
  RatFunc& operator-=(const RatFunc& rhs) { return *this = *this - rhs; }
  RatFunc& operator*=(const RatFunc& rhs) { return *this = *this * rhs; }
  RatFunc& operator/=(const RatFunc& rhs) { return *this = *this / rhs; }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// Human-readable form such as "(2+q)/(1-q^2)". The sign is moved so the
  /// displayed denominator has a positive lowest-order coefficient.
  std::string to_string() const
  {
    if (is_polynomial())
      return num_.to_string();
    Poly n = num_, d = den_;
    if (d.coeff(d.valuation()) < 0) {
      n = -n;
      d = -d;
    }
    const auto wrap = [](const Poly& p) {
      const std::string s = p.to_string();
      const bool single_term = p.valuation() == static_cast<std::size_t>(p.degree());
      return single_term && s.find('/') == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(n) + "/" + wrap(d);
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

private:
  static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract)
  {
    if (b.is_zero())
      return a;
    if (a.is_zero())
      return subtract ? -b : b;
    const Poly bn = subtract ? -b.num_ : b.num_;
    if (a.den_ == b.den_)
      return RatFunc(a.num_ + bn, a.den_);
    // Henrici: only the shared part g of the denominators can cancel.
    const Poly g = gcd(a.den_, b.den_);
    RatFunc r;
    if (g.is_constant()) {
      r.num_ = a.num_ * b.den_ + bn * a.den_;
      r.den_ = a.den_ * b.den_;
      if (r.num_.is_zero())
        return {};
      return r;
    }
    const Poly ad = divexact(a.den_, g);
    const Poly bd = divexact(b.den_, g);
    const Poly t = a.num_ * bd + bn * ad;
    if (t.is_zero())
      return {};
    const Poly g2 = gcd(t, g);
    r.num_ = divexact(t, g2);
    r.den_ = ad * divexact(b.den_, g2);
    return r;
  }

  Poly num_;
  Poly den_;
};

/// Cross-multiplication equality, independent of the canonical form.
inline bool cross_equal(const RatFunc& a, const RatFunc& b)
{
  return a.num() * b.den() == b.num() * a.den();
}

} // namespace qharmonic

#endif // QHARMONIC_RATFUNC_HPP
