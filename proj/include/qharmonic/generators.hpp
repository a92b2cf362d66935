#ifndef QHARMONIC_GENERATORS_HPP
#define QHARMONIC_GENERATORS_HPP

// Seeded random values for the property checks.

#include <qharmonic/ratfunc.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace qharmonic::gen {

class Source {
public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  BigRat rational(long max_num = 9, long max_den = 9)
  {
    BigRat r(integer(-max_num, max_num), static_cast<unsigned long>(integer(1, max_den)));
    r.canonicalize();
    return r;
  }

  BigRat nonzero_rational(long max_num = 9, long max_den = 9)
  {
    BigRat r;
    do
      r = rational(max_num, max_den);
    while (r == 0);
    return r;
  }

  Poly poly(long max_degree = 3)
  {
    std::vector<BigRat> c;
    const long deg = integer(-1, max_degree);
    for (long i = 0; i <= deg; ++i)
      c.push_back(rational());
    return Poly(std::move(c));
  }

  Poly nonzero_poly(long max_degree = 3)
  {
    Poly p;
    do
      p = poly(max_degree);
    while (p.is_zero());
    return p;
  }

  RatFunc ratfunc(long max_degree = 3) { return RatFunc(poly(max_degree), nonzero_poly(max_degree)); }

  RatFunc nonzero_ratfunc(long max_degree = 3)
  {
    return RatFunc(nonzero_poly(max_degree), nonzero_poly(max_degree));
  }

  /// Rational sequence of the given length, as constant rational functions.
  std::vector<RatFunc> constant_sequence(std::size_t length)
  {
    std::vector<RatFunc> v;
    for (std::size_t i = 0; i < length; ++i)
      v.emplace_back(rational());
    return v;
  }

private:
  std::mt19937_64 rng_;
};

} // namespace qharmonic::gen

#endif // QHARMONIC_GENERATORS_HPP
