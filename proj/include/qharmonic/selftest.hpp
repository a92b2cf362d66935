#ifndef QHARMONIC_SELFTEST_HPP
#define QHARMONIC_SELFTEST_HPP

// Property suite behind `qharmonic selftest`. Every check reports the first
// counterexample it meets.

#include <qharmonic/generators.hpp>
#include <qharmonic/identities.hpp>
#include <qharmonic/transforms.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qharmonic {

struct SelftestBounds {
  long gaussian_n = 20;
  long qbt_n = 10;
  long oracle_nm = 6;
  long classical_n = 30, classical_m = 5;
  long symbolic_n = 8, symbolic_m = 3;
  long sampled_n = 12, sampled_m = 4;
  long degeneration_n = 10, degeneration_m = 3;
  std::size_t matrix_size = 8;
  std::size_t series_order = 12;
  int random_trials = 50;

  static SelftestBounds quick()
  {
    SelftestBounds b;
    b.gaussian_n = 10;
    b.qbt_n = 5;
    b.oracle_nm = 4;
    b.classical_n = 10;
    b.classical_m = 3;
    b.symbolic_n = 5;
    b.symbolic_m = 2;
    b.sampled_n = 6;
    b.sampled_m = 2;
    b.degeneration_n = 5;
    b.degeneration_m = 2;
    b.matrix_size = 5;
    b.series_order = 8;
    b.random_trials = 10;
    return b;
  }
};

struct SelftestOptions {
  SelftestBounds bounds;
  std::uint64_t seed = 0;
  /// Table used by every check that consumes Gaussian polynomials. Null
  /// means a freshly built one; tests inject corrupted tables here.
  std::shared_ptr<const GaussianTable> table;
};

struct CheckResult {
  std::string name;
  std::optional<std::string> counterexample;
};

struct SelftestResult {
  std::vector<CheckResult> checks;

  bool ok() const
  {
    for (const auto& c : checks)
      if (c.counterexample)
        return false;
    return true;
  }

  const CheckResult* first_failure() const
  {
    for (const auto& c : checks)
      if (c.counterexample)
        return &c;
    return nullptr;
  }
};

namespace detail {

template <class... Args>
std::string describe(const Args&... args)
{
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

using Check = std::optional<std::string>;

inline Check check_poly_ring(gen::Source& src, int trials)
{
  for (int t = 0; t < trials; ++t) {
    const Poly a = src.poly(), b = src.poly(), c = src.poly();
    if ((a + b) + c != a + (b + c))
      return describe("(a+b)+c != a+(b+c) for a=", a, " b=", b, " c=", c);
    if (a * (b + c) != a * b + a * c)
      return describe("a(b+c) != ab+ac for a=", a, " b=", b, " c=", c);
    if (!a.is_zero() && !b.is_zero() && (a * b).degree() != a.degree() + b.degree())
      return describe("deg(ab) != deg a + deg b for a=", a, " b=", b);
  }
  return std::nullopt;
}

inline Check check_ratfunc_field(gen::Source& src, int trials)
{
  for (int t = 0; t < trials; ++t) {
    const RatFunc r = src.ratfunc(), s = src.nonzero_ratfunc();
    const BigRat q0 = src.rational(20, 17);
    if (r.den().eval(q0) == 0 || s.den().eval(q0) == 0 || s.num().eval(q0) == 0)
      continue;
    const BigRat rv = r.eval(q0), sv = s.eval(q0);
    const std::pair<RatFunc, BigRat> cases[] = {
        {r + s, rv + sv}, {r - s, rv - sv}, {r * s, rv * sv}, {r / s, rv / sv}};
    for (const auto& [f, v] : cases) {
      const BigRat d = f.den().eval(q0);
      if (d == 0)
        continue;
      if (f.num().eval(q0) / d != v)
        return describe("evaluation is not a homomorphism at q0=", q0, " for r=", r, " s=", s);
    }
    if (RatFunc(r.num(), r.den()) != r)
      return describe("normalization not idempotent on ", r);
    if ((r == s) != cross_equal(r, s))
      return describe("canonical and cross equality disagree on ", r, " and ", s);
  }
  return std::nullopt;
}

inline Check check_gaussian_table(const GaussianTable& table, long n_max)
{
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      const Poly& g = table(n, k);
      if (g.degree() != k * (n - k))
        return describe("deg [", n, ",", k, "] = ", g.degree(), ", expected ", k * (n - k));
      if (g != table(n, n - k))
        return describe("[", n, ",", k, "] != [", n, ",", n - k, "]");
      if (g.eval(BigRat(1)) != binomial(n, k))
        return describe("[", n, ",", k, "] at q=1 is ", g.eval(BigRat(1)), ", expected C(n,k)=", binomial(n, k));
      if (k >= 1 && k <= n - 1 && g != table(n - 1, k - 1) + table(n - 1, k).shifted(static_cast<std::size_t>(k)))
        return describe("q-Pascal rule fails at (", n, ",", k, ")");
    }
  }
  return std::nullopt;
}

inline std::vector<RatFunc> qbt_test_points()
{
  return {RatFunc(BigRat(1, 2)), RatFunc(BigRat(-3, 7)), RatFunc(BigRat(5, 2)), RatFunc::q_power(1),
          RatFunc::q_power(2)};
}

inline Check check_q_binomial_theorem(const GaussianTable& table, long n_max)
{
  for (const auto& x : qbt_test_points())
    for (long n = 0; n <= n_max; ++n) {
      const RatFunc poch = q_pochhammer(x, static_cast<std::size_t>(n));
      if (qbt_alternating_sum(table, n, x) != poch)
        return describe("alternating q-binomial sum != (x;q)_n at n=", n, " x=", x);
      if (qbt_partition_sum(table, n, x) != RatFunc(1))
        return describe("partition q-binomial sum != 1 at n=", n, " x=", x);
      if (q_pochhammer(x, static_cast<std::size_t>(n + 1)) != poch * (RatFunc(1) - x * RatFunc::q_power(n)))
        return describe("(x;q)_{n+1} recurrence fails at n=", n, " x=", x);
    }
  return std::nullopt;
}

inline Check check_sum_oracles(long nm)
{
  const SymbolicQ sym(static_cast<std::size_t>(0));
  for (long n = 1; n <= nm; ++n)
    for (long m = 1; m <= nm; ++m) {
      if (mhs_full(n, m) != naive_chain_sum(ClassicalArith{}, {n, m, std::nullopt}))
        return describe("mhs_full(", n, ",", m, ") disagrees with enumeration");
      if (mhs_endpoint(n, m) != naive_chain_sum(ClassicalArith{}, {n, m, n}))
        return describe("mhs_endpoint(", n, ",", m, ") disagrees with enumeration");
      if (q_mhs_full(n, m) != naive_chain_sum(sym, {n, m, std::nullopt}))
        return describe("q_mhs_full(", n, ",", m, ") disagrees with enumeration");
      if (q_mhs_endpoint(n, m) != naive_chain_sum(sym, {n, m, n}))
        return describe("q_mhs_endpoint(", n, ",", m, ") disagrees with enumeration");
      BigRat total = 0;
      for (long k = 1; k <= n; ++k)
        total += mhs_endpoint(k, m);
      if (total != mhs_full(n, m))
        return describe("chain decomposition fails at (", n, ",", m, ")");
    }
  return std::nullopt;
}

inline Check check_sum_degeneration(long n_max, long m_max)
{
  for (long n = 1; n <= n_max; ++n)
    for (long m = 1; m <= m_max; ++m) {
      if (cleared_value_at_one(q_power_sum(n, m), m) != power_sum(n, m))
        return describe("(1-q)^m q_power_sum(", n, ",", m, ") at q=1 != power_sum");
      if (cleared_value_at_one(q_mhs_full(n, m), m) != mhs_full(n, m))
        return describe("(1-q)^m q_mhs_full(", n, ",", m, ") at q=1 != mhs_full");
    }
  return std::nullopt;
}

inline Check check_classical_transforms(gen::Source& src, int trials, std::size_t max_order)
{
  for (int t = 0; t < trials; ++t) {
    const std::size_t len = static_cast<std::size_t>(src.integer(1, 8));
    std::vector<BigRat> raw;
    for (std::size_t i = 0; i < len; ++i)
      raw.push_back(src.rational());
    const BasicSequenceTable<BigRat> a(raw);
    const auto b = alt_binomial_induced(a);
    if (alt_binomial_induced(b) != a)
      return describe("classical transform is not self-inverse (length ", len, ")");
    if (euler_involution_series({raw}).coeffs != b.entries())
      return describe("induced sequence differs from A(z/(z-1)) coefficients (length ", len, ")");
  }
  for (std::size_t order = 1; order <= max_order; ++order) {
    TruncatedSeries s;
    for (std::size_t i = 0; i < order; ++i)
      s.coeffs.push_back(src.rational());
    if (euler_involution_series(euler_involution_series(s)) != s)
      return describe("z -> z/(z-1) is not an involution at order ", order);
  }
  return std::nullopt;
}

inline Check check_lemma(const GaussianTable& table, gen::Source& src, int trials, long basis_n)
{
  for (int t = 0; t < trials; ++t) {
    const std::size_t len = static_cast<std::size_t>(src.integer(1, 6));
    const SequenceTable a(src.constant_sequence(len));
    const SequenceTable b = q_first_induced(table, a);
    if (q_second_recovered(table, b) != a)
      return describe("q transform round trip fails (length ", len, ")");
  }
  const RatFunc xs[] = {RatFunc(2), RatFunc(BigRat(3, 2)), RatFunc::q_power(1), RatFunc::q_power(2)};
  for (const auto& x : xs) {
    RatFunc cum_b, cum_a;
    std::vector<RatFunc> a_vals, b_vals;
    for (long n = 0; n <= basis_n; ++n) {
      a_vals.push_back(proof_basis_a(n, x));
      b_vals.push_back(proof_basis_b(n, x));
    }
    const SequenceTable a(a_vals), b(b_vals);
    for (long n = 0; n <= basis_n; ++n) {
      cum_b += b_vals[static_cast<std::size_t>(n)];
      cum_a += RatFunc::q_power(-n) * a_vals[static_cast<std::size_t>(n)];
      if (q_transform_first(table, a, n) != cum_b)
        return describe("first relation fails on the proof basis at n=", n, " x=", x);
      if (q_transform_second(table, b, n) != cum_a)
        return describe("second relation fails on the proof basis at n=", n, " x=", x);
    }
  }
  return std::nullopt;
}

inline Check check_matrices(const GaussianTable& table, std::size_t max_size)
{
  for (std::size_t size = 1; size <= max_size; ++size) {
    const QMatrix t = build_matrix(table, MatrixKind::T, size);
    const QMatrix t_inv = build_matrix(table, MatrixKind::T_inv, size);
    const QMatrix u = build_matrix(table, MatrixKind::U, size);
    const QMatrix v = build_matrix(table, MatrixKind::V, size);
    if (t * t_inv != QMatrix::identity(size))
      return describe("T * T_inv != I at size ", size);
    const QMatrix t_inv_u = t_inv * u;
    if (t_inv_u != build_matrix(table, MatrixKind::T_inv_U, size))
      return describe("T_inv * U differs from its closed form at size ", size);
    if (v * t_inv_u != build_matrix(table, MatrixKind::S, size))
      return describe("V * T_inv * U != S at size ", size);
  }
  return std::nullopt;
}

inline Check check_classical_identities(long n_max, long m_max)
{
  for (long n = 1; n <= n_max; ++n)
    for (long m = 1; m <= m_max; ++m) {
      if (!verify_hernandez(n, m).equal)
        return describe("hernandez fails at (", n, ",", m, ")");
      if (!verify_dilcher(n, m).equal)
        return describe("dilcher fails at (", n, ",", m, ")");
    }
  return std::nullopt;
}

inline Check check_q_identities(const std::shared_ptr<const GaussianTable>& table, const SelftestBounds& b,
                                std::uint64_t seed)
{
  const SymbolicQ sym(table);
  const auto points = sample_points(seed, 3);
  for (long n = 1; n <= b.symbolic_n; ++n)
    for (long m = 1; m <= b.symbolic_m; ++m)
      for (Identity id : {Identity::dilcher_q, Identity::hernandez_q}) {
        const auto sym_report = detail::symbolic_q_report(sym, id, n, m);
        if (!sym_report.equal)
          return describe(to_string(id), " fails symbolically at (", n, ",", m, ")");
        const auto sampled = verify_sampled(id, n, m, points, seed);
        if (sampled.equal != sym_report.equal)
          return describe(to_string(id), " symbolic and sampled verdicts disagree at (", n, ",", m, ")");
        // Sampled values must match the symbolic sides evaluated at the same points.
        const auto& lhs = std::get<RatFunc>(sym_report.lhs);
        const auto& lhs_vals = std::get<std::vector<BigRat>>(sampled.lhs);
        for (std::size_t i = 0; i < points.size(); ++i)
          if (lhs.eval(points[i]) != lhs_vals[i])
            return describe(to_string(id), " symbolic lhs disagrees with evaluated lhs at q=", points[i], " (", n,
                            ",", m, ")");
      }
  for (long n = 1; n <= b.sampled_n; ++n)
    for (long m = 1; m <= b.sampled_m; ++m)
      for (Identity id : {Identity::dilcher_q, Identity::hernandez_q})
        if (!verify_sampled(id, n, m, points, seed).equal)
          return describe(to_string(id), " fails in sampled mode at (", n, ",", m, ")");
  return std::nullopt;
}

inline Check check_identity_degeneration(const std::shared_ptr<const GaussianTable>& table, long n_max, long m_max)
{
  const SymbolicQ sym(table);
  for (long n = 1; n <= n_max; ++n)
    for (long m = 1; m <= m_max; ++m) {
      const auto [hq_l, hq_r] = hernandez_sides(sym, n, m);
      const auto [h_l, h_r] = hernandez_sides(ClassicalArith{}, n, m);
      if (cleared_value_at_one(hq_l, m) != h_l || cleared_value_at_one(hq_r, m) != h_r)
        return describe("hernandez_q does not degenerate to hernandez at (", n, ",", m, ")");
      const auto [dq_l, dq_r] = dilcher_sides(sym, n, m);
      const auto [d_l, d_r] = dilcher_sides(ClassicalArith{}, n, m);
      if (cleared_value_at_one(dq_l, m) != d_l || cleared_value_at_one(dq_r, m) != d_r)
        return describe("dilcher_q does not degenerate to dilcher at (", n, ",", m, ")");
    }
  return std::nullopt;
}

} // namespace detail

inline SelftestResult run_selftest(const SelftestOptions& opts = {})
{
  const SelftestBounds& b = opts.bounds;
  const long table_n = std::max({b.gaussian_n, b.qbt_n, b.symbolic_n, b.degeneration_n,
                                 static_cast<long>(b.matrix_size), 8L});
  auto table = opts.table ? opts.table : std::make_shared<const GaussianTable>(static_cast<std::size_t>(table_n));
  if (table->n_max() < static_cast<std::size_t>(table_n))
    throw std::invalid_argument("selftest table smaller than the configured bounds");

  gen::Source src(opts.seed);
  SelftestResult result;
  auto run = [&result](std::string name, const std::function<detail::Check()>& f) {
    std::optional<std::string> failure;
    try {
      failure = f();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    result.checks.push_back({std::move(name), std::move(failure)});
  };

  run("polynomial ring laws", [&] { return detail::check_poly_ring(src, b.random_trials); });
  run("rational function field and evaluation", [&] { return detail::check_ratfunc_field(src, b.random_trials); });
  run("Gaussian table", [&] { return detail::check_gaussian_table(*table, b.gaussian_n); });
  run("q-binomial theorem", [&] { return detail::check_q_binomial_theorem(*table, b.qbt_n); });
  run("sum oracles", [&] { return detail::check_sum_oracles(b.oracle_nm); });
  run("sum degeneration at q=1", [&] { return detail::check_sum_degeneration(b.degeneration_n, b.degeneration_m); });
  run("classical transform and involution",
      [&] { return detail::check_classical_transforms(src, b.random_trials, b.series_order); });
  run("q inverse relations", [&] { return detail::check_lemma(*table, src, b.random_trials, 8); });
  run("connection matrices", [&] { return detail::check_matrices(*table, b.matrix_size); });
  run("classical identities", [&] { return detail::check_classical_identities(b.classical_n, b.classical_m); });
  run("q identities", [&] { return detail::check_q_identities(table, b, opts.seed); });
  run("identity degeneration at q=1",
      [&] { return detail::check_identity_degeneration(table, b.degeneration_n, b.degeneration_m); });
  return result;
}

} // namespace qharmonic

#endif // QHARMONIC_SELFTEST_HPP
