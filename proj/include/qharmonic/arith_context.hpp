#ifndef QHARMONIC_ARITH_CONTEXT_HPP
#define QHARMONIC_ARITH_CONTEXT_HPP

// Where the sums are evaluated. Every sum and identity algorithm is written
// once against this interface:
//
//   value_type                      field element
//   harmonic_factor(i)              1/i,   or q^i/(1-q^i)
//   power_term(k, m)                1/k^m, or q^{k(m-1)}/(1-q^k)^m
//   inverse_power(k, m)             1/k^m, or 1/(1-q^k)^m
//   q_power(e)                      1,     or q^e (e may be negative)
//   binom(n, k)                     C(n,k), or the Gaussian polynomial
//
// ClassicalArith is the q = 1 world over BigRat, SymbolicQ works over
// canonical RatFunc, and EvaluatedQ substitutes a rational q0 up front.

#include <qharmonic/qcombinatorics.hpp>

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

namespace qharmonic {

struct ClassicalArith {
  using value_type = BigRat;

  value_type zero() const { return BigRat(0); }
  value_type one() const { return BigRat(1); }
  value_type harmonic_factor(long i) const { return BigRat(1, static_cast<unsigned long>(i)); }
  value_type power_term(long k, long m) const { return pow(BigRat(k), -m); }
  value_type inverse_power(long k, long m) const { return pow(BigRat(k), -m); }
  value_type q_power(long) const { return BigRat(1); }
  value_type binom(long n, long k) const { return binomial(n, k); }
};

class SymbolicQ {
public:
  using value_type = RatFunc;

  explicit SymbolicQ(std::shared_ptr<const GaussianTable> table) : table_(std::move(table))
  {
    if (!table_)
      throw std::invalid_argument("SymbolicQ needs a Gaussian table");
  }
  explicit SymbolicQ(std::size_t n_max) : SymbolicQ(std::make_shared<const GaussianTable>(n_max)) {}

  value_type zero() const { return {}; }
  value_type one() const { return RatFunc(1); }

  value_type harmonic_factor(long i) const
  {
    return RatFunc(Poly::monomial(BigRat(1), static_cast<std::size_t>(i)), one_minus_q_pow(i));
  }

  value_type power_term(long k, long m) const
  {
    return RatFunc(Poly::monomial(BigRat(1), static_cast<std::size_t>(k * (m - 1))),
                   pow(one_minus_q_pow(k), static_cast<unsigned long>(m)));
  }

  value_type inverse_power(long k, long m) const
  {
    return RatFunc(Poly::constant(BigRat(1)), pow(one_minus_q_pow(k), static_cast<unsigned long>(m)));
  }

  value_type q_power(long e) const { return RatFunc::q_power(e); }
  value_type binom(long n, long k) const { return RatFunc((*table_)(n, k)); }

  const GaussianTable& table() const { return *table_; }

private:
  static Poly one_minus_q_pow(long i)
  {
    return Poly::constant(BigRat(1)) - Poly::monomial(BigRat(1), static_cast<std::size_t>(i));
  }

  std::shared_ptr<const GaussianTable> table_;
};

/// Arithmetic at a fixed rational point q = q0. Gaussian values come from
/// the scalar q-Pascal rule, not from the polynomial table.
class EvaluatedQ {
public:
  using value_type = BigRat;

  EvaluatedQ(BigRat q0, std::size_t n_max) : q0_(std::move(q0))
  {
    rows_.push_back({BigRat(1)});
    std::vector<BigRat> q_pows{BigRat(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
      q_pows.push_back(q_pows.back() * q0_);
      const auto& prev = rows_.back();
      std::vector<BigRat> row(n + 1, BigRat(1));
      for (std::size_t k = 1; k < n; ++k)
        row[k] = prev[k - 1] + q_pows[k] * prev[k];
      rows_.push_back(std::move(row));
    }
  }

  const BigRat& point() const noexcept { return q0_; }

  value_type zero() const { return BigRat(0); }
  value_type one() const { return BigRat(1); }

  value_type harmonic_factor(long i) const
  {
    const BigRat p = pow(q0_, i);
    return p / nonzero(BigRat(1) - p);
  }

  value_type power_term(long k, long m) const
  {
    const BigRat p = pow(q0_, k);
    return pow(q0_, k * (m - 1)) / nonzero(pow(BigRat(1) - p, m));
  }

  value_type inverse_power(long k, long m) const { return BigRat(1) / nonzero(pow(BigRat(1) - pow(q0_, k), m)); }

  value_type q_power(long e) const
  {
    if (e < 0 && q0_ == 0)
      throw std::domain_error("pole at evaluation point");
    return pow(q0_, e);
  }

  value_type binom(long n, long k) const
  {
    if (n < 0 || static_cast<std::size_t>(n) >= rows_.size())
      throw std::out_of_range("Gaussian values queried beyond n_max");
    if (k < 0 || k > n)
      return BigRat(0);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

private:
  static const BigRat& nonzero(const BigRat& d)
  {
    if (d == 0)
      throw std::domain_error("pole at evaluation point");
    return d;
  }

  BigRat q0_;
  std::vector<std::vector<BigRat>> rows_;
};

} // namespace qharmonic

#endif // QHARMONIC_ARITH_CONTEXT_HPP
