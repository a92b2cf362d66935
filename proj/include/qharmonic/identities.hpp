#ifndef QHARMONIC_IDENTITIES_HPP
#define QHARMONIC_IDENTITIES_HPP

// Verifiers for the four harmonic-sum identities.
//
//   hernandez    sum_k C(n,k)(-1)^{k-1} E(k,m)                   = sum_k 1/k^m
//   dilcher      sum_k C(n,k)(-1)^{k-1} / k^m                    = sum_{chains<=n} 1/(i_1...i_m)
//   dilcher_q    sum_k [n,k](-1)^{k-1} q^{C(k+1,2)+(m-1)k}/(1-q^k)^m
//                                                                = sum_{chains<=n} prod q^i/(1-q^i)
//   hernandez_q  sum_k [n,k](-1)^{k-1} q^{-kn+C(k,2)} E_q(k,m)   = sum_k q^{k(m-1)}/(1-q^k)^m
//
// Each side is written once against an arithmetic context (see
// arith_context.hpp); the classical identities are the q-sides run in
// ClassicalArith, where every power of q is 1.

#include <qharmonic/sums.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#ifndef QHARMONIC_CROSS_CHECK
#ifndef NDEBUG
#define QHARMONIC_CROSS_CHECK 1
#else
#define QHARMONIC_CROSS_CHECK 0
#endif
#endif

namespace qharmonic {

enum class Identity { hernandez, dilcher, dilcher_q, hernandez_q };
enum class Mode { symbolic, sampled };

inline constexpr Identity kAllIdentities[] = {Identity::hernandez, Identity::dilcher, Identity::dilcher_q,
                                              Identity::hernandez_q};

inline std::string_view to_string(Identity id)
{
  switch (id) {
  case Identity::hernandez: return "hernandez";
  case Identity::dilcher: return "dilcher";
  case Identity::dilcher_q: return "dilcher_q";
  case Identity::hernandez_q: return "hernandez_q";
  }
  return "?";
}

inline std::string_view to_string(Mode mode) { return mode == Mode::symbolic ? "symbolic" : "sampled"; }

inline Identity parse_identity(std::string_view s)
{
  for (Identity id : kAllIdentities)
    if (to_string(id) == s)
      return id;
  throw std::invalid_argument("unknown identity: " + std::string(s));
}

inline Mode parse_mode(std::string_view s)
{
  if (s == "symbolic")
    return Mode::symbolic;
  if (s == "sampled")
    return Mode::sampled;
  throw std::invalid_argument("unknown mode: " + std::string(s));
}

constexpr bool is_q_identity(Identity id) { return id == Identity::dilcher_q || id == Identity::hernandez_q; }

/// A side of an identity: a rational, a rational function, or one rational
/// per sample point.
using ReportValue = std::variant<BigRat, RatFunc, std::vector<BigRat>>;

struct IdentityReport {
  Identity identity = Identity::hernandez;
  long n = 1;
  long m = 1;
  Mode mode = Mode::symbolic;
  ReportValue lhs;
  ReportValue rhs;
  bool equal = false;
  std::optional<std::vector<BigRat>> sample_points;
  std::optional<std::uint64_t> seed;     // sampled q-identities
  std::optional<long> den_degree;        // symbolic q-identities: larger side denominator degree

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

// ---- sides, generic over the arithmetic context ----------------------------

template <class Ctx>
std::pair<typename Ctx::value_type, typename Ctx::value_type> hernandez_sides(const Ctx& ctx, long n, long m)
{
  detail::require_positive(n, m);
  const auto endpoints = endpoint_sums(ctx, n, m);
  auto lhs = ctx.zero();
  for (long k = 1; k <= n; ++k) {
    const typename Ctx::value_type term = ctx.binom(n, k) * ctx.q_power(-k * n + choose2(k)) * endpoints[static_cast<std::size_t>(k - 1)];
    if (k % 2 == 1)
      lhs = lhs + term;
    else
      lhs = lhs - term;
  }
  return {std::move(lhs), power_sum(ctx, n, m)};
}

template <class Ctx>
std::pair<typename Ctx::value_type, typename Ctx::value_type> dilcher_sides(const Ctx& ctx, long n, long m)
{
  detail::require_positive(n, m);
  auto lhs = ctx.zero();
  for (long k = 1; k <= n; ++k) {
    const typename Ctx::value_type term = ctx.binom(n, k) * ctx.q_power(choose2(k + 1) + (m - 1) * k) * ctx.inverse_power(k, m);
    if (k % 2 == 1)
      lhs = lhs + term;
    else
      lhs = lhs - term;
  }
  return {std::move(lhs), chain_sum_full(ctx, n, m)};
}

template <class Ctx>
std::pair<typename Ctx::value_type, typename Ctx::value_type> identity_sides(const Ctx& ctx, Identity id, long n,
                                                                               long m)
{
  switch (id) {
  case Identity::hernandez:
  case Identity::hernandez_q:
    return hernandez_sides(ctx, n, m);
  case Identity::dilcher:
  case Identity::dilcher_q:
    return dilcher_sides(ctx, n, m);
  }
  throw std::invalid_argument("unknown identity");
}

// ---- verifiers -----------------------------------------------------------

namespace detail {

inline IdentityReport classical_report(Identity id, long n, long m, Mode mode)
{
  auto [lhs, rhs] = identity_sides(ClassicalArith{}, id, n, m);
  IdentityReport r;
  r.identity = id;
  r.n = n;
  r.m = m;
  r.mode = mode;
  r.equal = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

inline IdentityReport symbolic_q_report(const SymbolicQ& ctx, Identity id, long n, long m)
{
  if (ctx.table().n_max() < static_cast<std::size_t>(n))
    throw std::out_of_range("Gaussian table too small for n");
  auto [lhs, rhs] = identity_sides(ctx, id, n, m);
  IdentityReport r;
  r.identity = id;
  r.n = n;
  r.m = m;
  r.mode = Mode::symbolic;
  r.equal = lhs == rhs;
#if QHARMONIC_CROSS_CHECK
  if (r.equal != cross_equal(lhs, rhs))
    throw std::logic_error("canonical and cross-multiplied equality disagree");
#endif
  r.den_degree = std::max(lhs.den().degree(), rhs.den().degree());
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

inline std::shared_ptr<const GaussianTable> table_for(long n)
{
  return std::make_shared<const GaussianTable>(static_cast<std::size_t>(std::max(n, 0L)));
}

} // namespace detail

inline IdentityReport verify_hernandez(long n, long m) { return detail::classical_report(Identity::hernandez, n, m, Mode::symbolic); }

inline IdentityReport verify_dilcher(long n, long m) { return detail::classical_report(Identity::dilcher, n, m, Mode::symbolic); }

inline IdentityReport verify_dilcher_q(const SymbolicQ& ctx, long n, long m)
{
  return detail::symbolic_q_report(ctx, Identity::dilcher_q, n, m);
}

inline IdentityReport verify_dilcher_q(long n, long m) { return verify_dilcher_q(SymbolicQ(detail::table_for(n)), n, m); }

inline IdentityReport verify_hernandez_q(const SymbolicQ& ctx, long n, long m)
{
  return detail::symbolic_q_report(ctx, Identity::hernandez_q, n, m);
}

inline IdentityReport verify_hernandez_q(long n, long m) { return verify_hernandez_q(SymbolicQ(detail::table_for(n)), n, m); }

/// Deterministic sample points p/r with 0 < p < r <= 1000, pairwise distinct.
inline std::vector<BigRat> sample_points(std::uint64_t seed, std::size_t count)
{
  // Raw mt19937_64 output is fixed by the standard; distributions are not,
  // so the reduction to a range is done by hand.
  if (count > 10000)
    throw std::invalid_argument("at most 10000 sample points");
  std::mt19937_64 rng(seed);
  std::vector<BigRat> points;
  std::set<std::pair<unsigned long, unsigned long>> seen;
  while (points.size() < count) {
    const unsigned long r = 2 + static_cast<unsigned long>(rng() % 999);
    const unsigned long p = 1 + static_cast<unsigned long>(rng() % (r - 1));
    BigRat v(p, r);
    v.canonicalize();
    const auto key = std::make_pair(v.get_num().get_ui(), v.get_den().get_ui());
    if (seen.insert(key).second)
      points.push_back(std::move(v));
  }
  return points;
}

/// Sampled check: each side is rebuilt in exact arithmetic at q = q0 for
/// every point and the two value lists compared. Classical identities have
/// no q and give the symbolic verdict.
inline IdentityReport verify_sampled(Identity id, long n, long m, const std::vector<BigRat>& points,
                                     std::optional<std::uint64_t> seed = std::nullopt)
{
  if (!is_q_identity(id))
    return detail::classical_report(id, n, m, Mode::sampled);
  if (points.empty())
    throw std::invalid_argument("sampled mode needs at least one point");
  std::vector<BigRat> lhs_vals, rhs_vals;
  for (const auto& q0 : points) {
    if (q0 <= 0 || q0 >= 1)
      throw std::domain_error("sample points must lie in (0, 1)");
    auto [lhs, rhs] = identity_sides(EvaluatedQ(q0, static_cast<std::size_t>(n)), id, n, m);
    lhs_vals.push_back(std::move(lhs));
    rhs_vals.push_back(std::move(rhs));
  }
  IdentityReport r;
  r.identity = id;
  r.n = n;
  r.m = m;
  r.mode = Mode::sampled;
  r.equal = lhs_vals == rhs_vals;
  r.lhs = std::move(lhs_vals);
  r.rhs = std::move(rhs_vals);
  r.sample_points = points;
  r.seed = seed;
  return r;
}

struct VerifyOptions {
  std::size_t samples = 5;
  std::uint64_t seed = 0;
  unsigned threads = 0; // 0: hardware concurrency
};

inline IdentityReport verify(Identity id, long n, long m, Mode mode, const VerifyOptions& opts = {},
                             std::shared_ptr<const GaussianTable> table = nullptr)
{
  detail::require_positive(n, m);
  if (mode == Mode::sampled && is_q_identity(id))
    return verify_sampled(id, n, m, sample_points(opts.seed, opts.samples), opts.seed);
  switch (id) {
  case Identity::hernandez:
  case Identity::dilcher:
    return detail::classical_report(id, n, m, mode);
  case Identity::dilcher_q:
  case Identity::hernandez_q:
    if (!table || table->n_max() < static_cast<std::size_t>(n))
      table = detail::table_for(n);
    return detail::symbolic_q_report(SymbolicQ(table), id, n, m);
  }
  throw std::invalid_argument("unknown identity");
}

/// Reports for every (n, m) in [1, n_max] x [1, m_max], ordered by (n, m).
/// Cells run in parallel; the output order does not depend on scheduling.
inline std::vector<IdentityReport> sweep(Identity id, long n_max, long m_max, Mode mode, const VerifyOptions& opts = {})
{
  if (n_max < 1 || m_max < 1)
    throw std::invalid_argument("sweep bounds must be >= 1");
  const auto table = is_q_identity(id) && mode == Mode::symbolic ? detail::table_for(n_max) : nullptr;
  const std::size_t cells = static_cast<std::size_t>(n_max * m_max);
  std::vector<std::optional<IdentityReport>> out(cells);
  std::vector<std::exception_ptr> errors(cells);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells; i = next++) {
      const long n = static_cast<long>(i) / m_max + 1;
      const long m = static_cast<long>(i) % m_max + 1;
      try {
        out[i] = verify(id, n, m, mode, opts, table);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
      pool.emplace_back(worker);
    worker();
  }
  std::vector<IdentityReport> reports;
  reports.reserve(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    if (errors[i])
      std::rethrow_exception(errors[i]);
    reports.push_back(std::move(*out[i]));
  }
  return reports;
}

} // namespace qharmonic

#endif // QHARMONIC_IDENTITIES_HPP
