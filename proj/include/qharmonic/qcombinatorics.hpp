#ifndef QHARMONIC_QCOMBINATORICS_HPP
#define QHARMONIC_QCOMBINATORICS_HPP

#include <qharmonic/ratfunc.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qharmonic {

/// (x;q)_n = (1-x)(1-xq)...(1-xq^{n-1}); 1 for n = 0.
inline RatFunc q_pochhammer(const RatFunc& x, std::size_t n)
{
  RatFunc acc(1);
  for (std::size_t j = 0; j < n; ++j)
    acc *= RatFunc(1) - x * RatFunc::q_power(static_cast<long>(j));
  return acc;
}

/// Triangular table of Gaussian polynomials [n choose k]_q for n <= n_max,
/// filled by the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
/// Immutable once built; safe to share across threads.
class GaussianTable {
public:
  explicit GaussianTable(std::size_t n_max) : n_max_(n_max)
  {
    rows_.reserve(n_max + 1);
    rows_.push_back({Poly::constant(BigRat(1))});
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto& prev = rows_.back();
      std::vector<Poly> row(n + 1);
      row[0] = Poly::constant(BigRat(1));
      row[n] = Poly::constant(BigRat(1));
      for (std::size_t k = 1; k < n; ++k)
        row[k] = prev[k - 1] + prev[k].shifted(k);
      rows_.push_back(std::move(row));
    }
  }

  std::size_t n_max() const noexcept { return n_max_; }

  /// Zero outside 0 <= k <= n.
  const Poly& operator()(long n, long k) const
  {
    static const Poly zero;
    if (n < 0 || static_cast<std::size_t>(n) > n_max_)
      throw std::out_of_range("Gaussian table queried beyond n_max");
    if (k < 0 || k > n)
      return zero;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  /// Copy of this table with delta added to entry (n, k). Test hook for
  /// negative controls; the original is untouched.
  GaussianTable with_perturbed_entry(std::size_t n, std::size_t k, const Poly& delta) const
  {
    if (n > n_max_ || k > n)
      throw std::out_of_range("perturbed entry outside the table");
    GaussianTable copy = *this;
    copy.rows_[n][k] += delta;
    return copy;
  }

private:
  std::size_t n_max_;
  std::vector<std::vector<Poly>> rows_;
};

/// Gaussian polynomial [n choose k]_q; zero for k < 0 or k > n.
inline Poly gaussian(long n, long k)
{
  if (n < 0 || k < 0 || k > n)
    return {};
  return GaussianTable(static_cast<std::size_t>(n))(n, k);
}

/// sum_k [n,k] (-1)^k q^{C(k,2)} x^k, term by term. Equals (x;q)_n.
inline RatFunc qbt_alternating_sum(const GaussianTable& table, long n, const RatFunc& x)
{
  RatFunc acc, x_pow(1);
  for (long k = 0; k <= n; ++k) {
    RatFunc term = RatFunc(table(n, k)) * RatFunc::q_power(choose2(k)) * x_pow;
    acc = k % 2 == 0 ? acc + term : acc - term;
    x_pow *= x;
  }
  return acc;
}

inline RatFunc qbt_alternating_sum(long n, const RatFunc& x)
{
  return qbt_alternating_sum(GaussianTable(static_cast<std::size_t>(n)), n, x);
}

/// sum_k [n,k] (x;q)_k x^{n-k}. Equals 1.
inline RatFunc qbt_partition_sum(const GaussianTable& table, long n, const RatFunc& x)
{
  std::vector<RatFunc> x_pows{RatFunc(1)};
  for (long k = 1; k <= n; ++k)
    x_pows.push_back(x_pows.back() * x);
  RatFunc acc, poch(1);
  for (long k = 0; k <= n; ++k) {
    acc += RatFunc(table(n, k)) * poch * x_pows[static_cast<std::size_t>(n - k)];
    poch *= RatFunc(1) - x * RatFunc::q_power(k);
  }
  return acc;
}

inline RatFunc qbt_partition_sum(long n, const RatFunc& x)
{
  return qbt_partition_sum(GaussianTable(static_cast<std::size_t>(n)), n, x);
}

} // namespace qharmonic

#endif // QHARMONIC_QCOMBINATORICS_HPP
