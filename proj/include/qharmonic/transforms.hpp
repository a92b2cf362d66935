#ifndef QHARMONIC_TRANSFORMS_HPP
#define QHARMONIC_TRANSFORMS_HPP

// Inverse-relation machinery.
//
// Classical pair (cumulative form):
//   sum_{k<=n} C(n,k) (-1)^k a_k = sum_{k<=n} b_k
// and the same with a, b swapped. On generating functions this is
// B(z) = A(z/(z-1)), and z -> z/(z-1) is an involution.
//
// q pair:
//   sum_{k<=n} b_k        = sum_k [n,k] (-1)^k q^{C(k,2)} a_k          (first)
//   sum_{k<=n} q^{-k} a_k = sum_k [n,k] (-1)^k q^{-kn+C(k,2)} b_k      (second)
//
// In matrix form U b = T a and V a = S b, hence S = V T^{-1} U.

#include <qharmonic/qcombinatorics.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qharmonic {

/// Finite sequence indexed 0..n_max. Index 0 is always stored explicitly.
template <class T>
class BasicSequenceTable {
public:
  explicit BasicSequenceTable(std::vector<T> entries) : entries_(std::move(entries))
  {
    if (entries_.empty())
      throw std::invalid_argument("sequence table must contain index 0");
  }

  std::size_t n_max() const noexcept { return entries_.size() - 1; }
  const T& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<T>& entries() const noexcept { return entries_; }

  friend bool operator==(const BasicSequenceTable&, const BasicSequenceTable&) = default;

private:
  std::vector<T> entries_;
};

using SequenceTable = BasicSequenceTable<RatFunc>;

namespace detail {

template <class T>
void require_index(const BasicSequenceTable<T>& s, long n)
{
  if (n < 0 || static_cast<std::size_t>(n) > s.n_max())
    throw std::out_of_range("transform index beyond the sequence");
}

/// Differences of consecutive cumulative values, with d_0 = c_0.
template <class T>
std::vector<T> differences(const std::vector<T>& cumulative)
{
  std::vector<T> out;
  out.reserve(cumulative.size());
  for (std::size_t i = 0; i < cumulative.size(); ++i)
    out.push_back(i == 0 ? cumulative[0] : cumulative[i] - cumulative[i - 1]);
  return out;
}

} // namespace detail

// ---- classical ---------------------------------------------------------

/// sum_{k=0}^{n} C(n,k) (-1)^k a_k
template <class T>
T alt_binomial_cumulative(const BasicSequenceTable<T>& a, long n)
{
  detail::require_index(a, n);
  T acc = T(0);
  for (long k = 0; k <= n; ++k) {
    const T term = a[static_cast<std::size_t>(k)] * T(binomial(n, k));
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

/// The sequence b induced by the classical transform, over the whole table.
template <class T>
BasicSequenceTable<T> alt_binomial_induced(const BasicSequenceTable<T>& a)
{
  std::vector<T> cumulative;
  for (std::size_t n = 0; n <= a.n_max(); ++n)
    cumulative.push_back(alt_binomial_cumulative(a, static_cast<long>(n)));
  return BasicSequenceTable<T>(detail::differences(cumulative));
}

/// Power series truncated to a fixed number of coefficients.
struct TruncatedSeries {
  std::vector<BigRat> coeffs; // ascending powers of z

  std::size_t order() const noexcept { return coeffs.size(); }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// Coefficients of A(z/(z-1)) truncated to the order of A.
///
/// z/(z-1) = -z/(1-z), so w^k = (-1)^k z^k (1-z)^{-k} and the coefficient of
/// z^n is sum_{k=1}^{n} (-1)^k C(n-1, k-1) a_k, with a_0 fixed.
inline TruncatedSeries euler_involution_series(const TruncatedSeries& s)
{
  TruncatedSeries out{std::vector<BigRat>(s.order(), BigRat(0))};
  if (s.order() == 0)
    return out;
  out.coeffs[0] = s.coeffs[0];
  for (std::size_t n = 1; n < s.order(); ++n) {
    BigRat acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const BigRat term = binomial(static_cast<long>(n - 1), static_cast<long>(k - 1)) * s.coeffs[k];
      if (k % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    out.coeffs[n] = acc;
  }
  return out;
}

// ---- q pair --------------------------------------------------------------

/// sum_{k=0}^{n} [n,k] (-1)^k q^{C(k,2)} a_k  (= sum_{k<=n} b_k)
inline RatFunc q_transform_first(const GaussianTable& table, const SequenceTable& a, long n)
{
  detail::require_index(a, n);
  RatFunc acc;
  for (long k = 0; k <= n; ++k) {
    const RatFunc& ak = a[static_cast<std::size_t>(k)];
    if (ak.is_zero())
      continue;
    const RatFunc term = RatFunc(table(n, k)) * RatFunc::q_power(choose2(k)) * ak;
    acc = k % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

inline RatFunc q_transform_first(const SequenceTable& a, long n)
{
  return q_transform_first(GaussianTable(static_cast<std::size_t>(std::max(n, 0L))), a, n);
}

/// sum_{k=0}^{n} [n,k] (-1)^k q^{-kn+C(k,2)} b_k  (= sum_{k<=n} q^{-k} a_k)
inline RatFunc q_transform_second(const GaussianTable& table, const SequenceTable& b, long n)
{
  detail::require_index(b, n);
  RatFunc acc;
  for (long k = 0; k <= n; ++k) {
    const RatFunc& bk = b[static_cast<std::size_t>(k)];
    if (bk.is_zero())
      continue;
    const RatFunc term = RatFunc(table(n, k)) * RatFunc::q_power(-k * n + choose2(k)) * bk;
    acc = k % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

inline RatFunc q_transform_second(const SequenceTable& b, long n)
{
  return q_transform_second(GaussianTable(static_cast<std::size_t>(std::max(n, 0L))), b, n);
}

/// b induced by the first relation: differences of its cumulative outputs.
inline SequenceTable q_first_induced(const GaussianTable& table, const SequenceTable& a)
{
  std::vector<RatFunc> cumulative;
  for (std::size_t n = 0; n <= a.n_max(); ++n)
    cumulative.push_back(q_transform_first(table, a, static_cast<long>(n)));
  return SequenceTable(detail::differences(cumulative));
}

/// a recovered through the second relation: a_n = q^n (G_n - G_{n-1}).
inline SequenceTable q_second_recovered(const GaussianTable& table, const SequenceTable& b)
{
  std::vector<RatFunc> cumulative;
  for (std::size_t n = 0; n <= b.n_max(); ++n)
    cumulative.push_back(q_transform_second(table, b, static_cast<long>(n)));
  auto diffs = detail::differences(cumulative);
  for (std::size_t n = 0; n < diffs.size(); ++n)
    diffs[n] *= RatFunc::q_power(static_cast<long>(n));
  return SequenceTable(std::move(diffs));
}

/// Basis sequence a_n = q^n x^n (1 - 1/x) for n >= 1, a_0 = 1.
inline RatFunc proof_basis_a(long n, const RatFunc& x)
{
  if (x.is_zero())
    throw std::domain_error("proof basis needs x != 0");
  if (n < 0)
    throw std::invalid_argument("proof basis index must be nonnegative");
  if (n == 0)
    return RatFunc(1);
  RatFunc x_pow(1);
  for (long i = 0; i < n; ++i)
    x_pow *= x;
  return RatFunc::q_power(n) * x_pow * (RatFunc(1) - RatFunc(1) / x);
}

/// Partner sequence b_n = q^n (x;q)_n.
inline RatFunc proof_basis_b(long n, const RatFunc& x)
{
  if (n < 0)
    throw std::invalid_argument("proof basis index must be nonnegative");
  return RatFunc::q_power(n) * q_pochhammer(x, static_cast<std::size_t>(n));
}

// ---- connection-coefficient matrices -------------------------------------

/// Square matrix over RatFunc, rows and columns indexed from 0.
class QMatrix {
public:
  explicit QMatrix(std::size_t size) : size_(size), entries_(size * size)
  {
    if (size == 0)
      throw std::invalid_argument("matrix size must be positive");
  }

  static QMatrix identity(std::size_t size)
  {
    QMatrix m(size);
    for (std::size_t i = 0; i < size; ++i)
      m(i, i) = RatFunc(1);
    return m;
  }

  std::size_t size() const noexcept { return size_; }

  RatFunc& operator()(std::size_t row, std::size_t col) { return entries_.at(row * size_ + col); }
  const RatFunc& operator()(std::size_t row, std::size_t col) const { return entries_.at(row * size_ + col); }

  bool is_lower_triangular() const
  {
    for (std::size_t r = 0; r < size_; ++r)
      for (std::size_t c = r + 1; c < size_; ++c)
        if (!(*this)(r, c).is_zero())
          return false;
    return true;
  }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t size_;
  std::vector<RatFunc> entries_;
};

inline QMatrix qmatrix_mul(const QMatrix& a, const QMatrix& b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.size();
  QMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatFunc acc;
      for (std::size_t k = 0; k < n; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero())
          acc += a(i, k) * b(k, j);
      out(i, j) = std::move(acc);
    }
  return out;
}

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) { return qmatrix_mul(a, b); }

enum class MatrixKind { T, S, U, V, T_inv, T_inv_U };

inline std::string_view to_string(MatrixKind kind)
{
  switch (kind) {
  case MatrixKind::T: return "T";
  case MatrixKind::S: return "S";
  case MatrixKind::U: return "U";
  case MatrixKind::V: return "V";
  case MatrixKind::T_inv: return "T_inv";
  case MatrixKind::T_inv_U: return "T_inv_U";
  }
  return "?";
}

/// Closed-form entries (row n, column k, zero above the diagonal):
///   T       [n,k] (-1)^k q^{C(k,2)}
///   S       [n,k] (-1)^k q^{-kn+C(k,2)}
///   U       1
///   V       q^{-k}
///   T_inv   [n,k] (-1)^k q^{-kn+C(k+1,2)}
///   T_inv_U [n-1,k-1] (-1)^k q^{-n(k-1)+C(k,2)} for k >= 1; column 0 is
///           the unit vector e_0 (the row sums of T_inv vanish for n >= 1).
inline QMatrix build_matrix(const GaussianTable& table, MatrixKind kind, std::size_t size)
{
  if (size == 0)
    throw std::invalid_argument("matrix size must be positive");
  if (table.n_max() + 1 < size)
    throw std::out_of_range("Gaussian table too small for matrix size");
  QMatrix m(size);
  for (long n = 0; n < static_cast<long>(size); ++n)
    for (long k = 0; k <= n; ++k) {
      const RatFunc sign(k % 2 == 0 ? 1L : -1L);
      RatFunc entry;
      switch (kind) {
      case MatrixKind::T:
        entry = sign * RatFunc(table(n, k)) * RatFunc::q_power(choose2(k));
        break;
      case MatrixKind::S:
        entry = sign * RatFunc(table(n, k)) * RatFunc::q_power(-k * n + choose2(k));
        break;
      case MatrixKind::U:
        entry = RatFunc(1);
        break;
      case MatrixKind::V:
        entry = RatFunc::q_power(-k);
        break;
      case MatrixKind::T_inv:
        entry = sign * RatFunc(table(n, k)) * RatFunc::q_power(-k * n + choose2(k + 1));
        break;
      case MatrixKind::T_inv_U:
        if (k == 0)
          entry = RatFunc(n == 0 ? 1L : 0L);
        else
          entry = sign * RatFunc(table(n - 1, k - 1)) * RatFunc::q_power(-n * (k - 1) + choose2(k));
        break;
      }
      m(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) = std::move(entry);
    }
  return m;
}

inline QMatrix build_matrix(MatrixKind kind, std::size_t size)
{
  return build_matrix(GaussianTable(size == 0 ? 0 : size - 1), kind, size);
}

} // namespace qharmonic

#endif // QHARMONIC_TRANSFORMS_HPP
