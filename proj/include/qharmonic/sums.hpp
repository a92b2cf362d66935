#ifndef QHARMONIC_SUMS_HPP
#define QHARMONIC_SUMS_HPP

// Power sums and nondecreasing multiple harmonic sums, classical and q.
//
// A chain of length m bounded by n is 1 <= i_1 <= ... <= i_m <= n; its
// weight is the product of harmonic factors f(i_j), where f(i) = 1/i
// classically and f(i) = q^i/(1-q^i) on the q side. The endpoint sums
// E(k, m) fix i_m = k and obey
//
//   E(k, 1) = f(k),   E(k, m) = f(k) * sum_{j <= k} E(j, m-1),
//
// which gives every sum in O(n^2 m) field operations.

#include <qharmonic/arith_context.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qharmonic {

struct ChainSumSpec {
  long n = 1;
  long m = 1;
  std::optional<long> endpoint; // forces i_m = k

  void validate() const
  {
    if (n < 1 || m < 1)
      throw std::invalid_argument("chain sums need n >= 1 and m >= 1");
    if (endpoint && (*endpoint < 1 || *endpoint > n))
      throw std::invalid_argument("chain endpoint must satisfy 1 <= k <= n");
  }
};

namespace detail {

inline void require_positive(long n, long m)
{
  if (n < 1 || m < 1)
    throw std::invalid_argument("sums need n >= 1 and m >= 1");
}

} // namespace detail

/// E(k, m) for k = 1..n, returned 0-indexed (entry k-1).
template <class Ctx>
std::vector<typename Ctx::value_type> endpoint_sums(const Ctx& ctx, long n, long m)
{
  detail::require_positive(n, m);
  using V = typename Ctx::value_type;
  std::vector<V> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i)
    factors.push_back(ctx.harmonic_factor(i));

  std::vector<V> row = factors;
  for (long level = 2; level <= m; ++level) {
    V prefix = ctx.zero();
    for (std::size_t k = 0; k < row.size(); ++k) {
      prefix = prefix + row[k];
      row[k] = factors[k] * prefix;
    }
  }
  return row;
}

template <class Ctx>
typename Ctx::value_type chain_sum_full(const Ctx& ctx, long n, long m)
{
  auto acc = ctx.zero();
  for (const auto& e : endpoint_sums(ctx, n, m))
    acc = acc + e;
  return acc;
}

template <class Ctx>
typename Ctx::value_type power_sum(const Ctx& ctx, long n, long m)
{
  detail::require_positive(n, m);
  auto acc = ctx.zero();
  for (long k = 1; k <= n; ++k)
    acc = acc + ctx.power_term(k, m);
  return acc;
}

/// sum_{k=1}^{n} 1/k^m
inline BigRat power_sum(long n, long m) { return power_sum(ClassicalArith{}, n, m); }

/// sum over 1 <= i_1 <= ... <= i_m <= n of 1/(i_1 ... i_m)
inline BigRat mhs_full(long n, long m) { return chain_sum_full(ClassicalArith{}, n, m); }

/// Same sum restricted to chains ending at i_m = k.
inline BigRat mhs_endpoint(long k, long m) { return endpoint_sums(ClassicalArith{}, k, m).back(); }

inline RatFunc q_power_sum(long n, long m) { return power_sum(SymbolicQ(0), n, m); }

inline RatFunc q_mhs_full(long n, long m) { return chain_sum_full(SymbolicQ(0), n, m); }

inline RatFunc q_mhs_endpoint(long k, long m) { return endpoint_sums(SymbolicQ(0), k, m).back(); }

/// Number of chains the naive enumeration would visit.
inline BigInt chain_count(const ChainSumSpec& spec)
{
  BigInt r;
  if (spec.endpoint) {
    // chains of length m-1 bounded by k, then i_m = k
    const unsigned long top = static_cast<unsigned long>(*spec.endpoint + spec.m - 2);
    mpz_bin_uiui(r.get_mpz_t(), top, static_cast<unsigned long>(spec.m - 1));
  } else {
    const unsigned long top = static_cast<unsigned long>(spec.n + spec.m - 1);
    mpz_bin_uiui(r.get_mpz_t(), top, static_cast<unsigned long>(spec.m));
  }
  return r;
}

inline constexpr std::uint64_t kNaiveChainBudget = 1'000'000;

/// Brute-force chain sum: walks every nondecreasing chain and multiplies its
/// factors. No recurrence is shared with endpoint_sums.
template <class Ctx>
typename Ctx::value_type naive_chain_sum(const Ctx& ctx, const ChainSumSpec& spec)
{
  spec.validate();
  if (chain_count(spec) > kNaiveChainBudget)
    throw std::length_error("chain enumeration budget exceeded");

  using V = typename Ctx::value_type;
  const long top = spec.endpoint.value_or(spec.n);
  std::vector<V> factors;
  for (long i = 1; i <= top; ++i)
    factors.push_back(ctx.harmonic_factor(i));

  std::vector<long> chain(static_cast<std::size_t>(spec.m), 1);
  if (spec.endpoint)
    chain.back() = *spec.endpoint;
  // The free positions are all but the last when the endpoint is pinned.
  const std::size_t free = spec.endpoint ? chain.size() - 1 : chain.size();

  V total = ctx.zero();
  while (true) {
    V weight = ctx.one();
    for (long i : chain)
      weight = weight * factors[static_cast<std::size_t>(i - 1)];
    total = total + weight;

    // Odometer step over nondecreasing tuples in the free positions.
    std::size_t pos = free;
    while (pos > 0 && chain[pos - 1] == top)
      --pos;
    if (pos == 0)
      break;
    const long next = ++chain[pos - 1];
    for (std::size_t j = pos; j < free; ++j)
      chain[j] = next;
  }
  return total;
}

using ChainSumValue = std::variant<BigRat, RatFunc>;

inline ChainSumValue mhs_naive_oracle(const ChainSumSpec& spec, bool q_side)
{
  if (q_side)
    return naive_chain_sum(SymbolicQ(0), spec);
  return naive_chain_sum(ClassicalArith{}, spec);
}

/// (1-q)^m r evaluated exactly at q = 1. Throws if a pole survives.
inline BigRat cleared_value_at_one(const RatFunc& r, long m)
{
  const Poly one_minus_q{BigRat(1), BigRat(-1)};
  return (r * RatFunc(pow(one_minus_q, static_cast<unsigned long>(m)))).eval(BigRat(1));
}

} // namespace qharmonic

#endif // QHARMONIC_SUMS_HPP
