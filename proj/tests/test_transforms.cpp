#include <qharmonic/generators.hpp>
#include <qharmonic/transforms.hpp>

#include <gtest/gtest.h>

using namespace qharmonic;

namespace {

Poly P(std::initializer_list<long> c)
{
  std::vector<BigRat> v;
  for (long x : c)
    v.emplace_back(x);
  return Poly(std::move(v));
}

std::vector<BigRat> rats(std::initializer_list<long> c)
{
  std::vector<BigRat> v;
  for (long x : c)
    v.emplace_back(x);
  return v;
}

SequenceTable delta(std::size_t at, std::size_t length)
{
  std::vector<RatFunc> v(length);
  v[at] = RatFunc(1);
  return SequenceTable(std::move(v));
}

// Truncated product of two series of the same order.
std::vector<BigRat> series_mul(const std::vector<BigRat>& a, const std::vector<BigRat>& b)
{
  std::vector<BigRat> r(a.size(), BigRat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

// A(z/(z-1)) by plugging the series of w = -z - z^2 - ... into A.
std::vector<BigRat> compose_oracle(const std::vector<BigRat>& a)
{
  const std::size_t order = a.size();
  std::vector<BigRat> w(order, BigRat(-1));
  if (order > 0)
    w[0] = 0;
  std::vector<BigRat> w_pow(order, BigRat(0)), out(order, BigRat(0));
  if (order > 0)
    w_pow[0] = 1;
  for (std::size_t k = 0; k < order; ++k) {
    for (std::size_t i = 0; i < order; ++i)
      out[i] += a[k] * w_pow[i];
    w_pow = series_mul(w_pow, w);
  }
  return out;
}

} // namespace

TEST(ClassicalTransform, Examples)
{
  const BasicSequenceTable<BigRat> a(rats({0, 1, 0, 0}));
  EXPECT_EQ(alt_binomial_cumulative(a, 2), -2);
  const auto b = alt_binomial_induced(a);
  EXPECT_EQ(b.entries(), rats({0, -1, -1, -1}));
  EXPECT_EQ(alt_binomial_cumulative(b, 2), 1);

  const BasicSequenceTable<BigRat> d0(rats({1, 0, 0, 0, 0}));
  for (long n = 0; n <= 4; ++n)
    EXPECT_EQ(alt_binomial_cumulative(d0, n), 1);
  EXPECT_THROW(alt_binomial_cumulative(d0, 5), std::out_of_range);
  EXPECT_THROW(BasicSequenceTable<BigRat>(std::vector<BigRat>{}), std::invalid_argument);
}

TEST(ClassicalTransform, SelfInverseOnRandomSequences)
{
  gen::Source src(21);
  for (int t = 0; t < 100; ++t) {
    std::vector<BigRat> raw;
    const long len = src.integer(1, 8);
    for (long i = 0; i < len; ++i)
      raw.push_back(src.rational());
    const BasicSequenceTable<BigRat> a(raw);
    EXPECT_EQ(alt_binomial_induced(alt_binomial_induced(a)), a);
    EXPECT_EQ(euler_involution_series({raw}).coeffs, alt_binomial_induced(a).entries());
  }
}

TEST(EulerInvolution, Examples)
{
  EXPECT_EQ(euler_involution_series({rats({1, 1, 1, 1})}).coeffs, rats({1, -1, 0, 0}));
  EXPECT_EQ(compose_oracle(rats({1, 1, 1, 1})), rats({1, -1, 0, 0}));
  EXPECT_EQ(euler_involution_series({rats({5, 0, 0, 0})}).coeffs, rats({5, 0, 0, 0}));
  const TruncatedSeries s{rats({0, 1, 2, 3})};
  EXPECT_EQ(euler_involution_series(euler_involution_series(s)), s);
  EXPECT_EQ(euler_involution_series({}).order(), 0U);
}

TEST(EulerInvolution, MatchesCompositionOracleAndIsAnInvolution)
{
  gen::Source src(4);
  for (std::size_t order = 1; order <= 12; ++order)
    for (int t = 0; t < 5; ++t) {
      TruncatedSeries s;
      for (std::size_t i = 0; i < order; ++i)
        s.coeffs.push_back(src.rational());
      EXPECT_EQ(euler_involution_series(s).coeffs, compose_oracle(s.coeffs));
      EXPECT_EQ(euler_involution_series(euler_involution_series(s)), s);
    }
}

TEST(QTransform, FirstExamples)
{
  const GaussianTable table(6);
  const auto d0 = delta(0, 7);
  for (long n = 0; n <= 6; ++n)
    EXPECT_EQ(q_transform_first(table, d0, n), RatFunc(1));
  EXPECT_EQ(q_first_induced(table, d0), d0);

  const auto d1 = delta(1, 7);
  for (long n = 1; n <= 6; ++n) {
    std::vector<BigRat> ones(static_cast<std::size_t>(n), BigRat(-1));
    EXPECT_EQ(q_transform_first(table, d1, n), RatFunc(Poly(ones)));
  }
  const auto b = q_first_induced(table, d1);
  for (long n = 1; n <= 6; ++n)
    EXPECT_EQ(b[static_cast<std::size_t>(n)], -RatFunc::q_power(n - 1));
}

TEST(QTransform, SecondExamples)
{
  const GaussianTable table(6);
  const auto d0 = delta(0, 7);
  for (long n = 0; n <= 6; ++n)
    EXPECT_EQ(q_transform_second(table, d0, n), RatFunc(1));
}

TEST(QTransform, ProofBasisAtTwo)
{
  const GaussianTable table(8);
  const RatFunc two(2);
  std::vector<RatFunc> a, b;
  for (long n = 0; n <= 8; ++n) {
    a.push_back(proof_basis_a(n, two));
    b.push_back(proof_basis_b(n, two));
  }
  const auto induced = q_first_induced(table, SequenceTable(a));
  for (long n = 0; n <= 8; ++n)
    EXPECT_EQ(induced[static_cast<std::size_t>(n)],
              RatFunc::q_power(n) * q_pochhammer(two, static_cast<std::size_t>(n)));
  for (long n = 0; n <= 8; ++n)
    EXPECT_EQ(q_transform_second(table, SequenceTable(b), n), RatFunc(BigRat(1L << n)));
}

TEST(QTransform, RoundTripOnRandomSequences)
{
  const GaussianTable table(6);
  gen::Source src(9);
  for (int t = 0; t < 40; ++t) {
    const std::size_t len = static_cast<std::size_t>(src.integer(1, 6));
    std::vector<RatFunc> raw;
    for (std::size_t i = 0; i < len; ++i)
      raw.push_back(t % 2 == 0 ? RatFunc(src.rational()) : src.ratfunc(2));
    const SequenceTable a(raw);
    EXPECT_EQ(q_second_recovered(table, q_first_induced(table, a)), a);
  }
}

TEST(ProofBasis, Examples)
{
  const RatFunc q = RatFunc::q_power(1);
  EXPECT_EQ(proof_basis_a(0, q), RatFunc(1));
  EXPECT_EQ(proof_basis_a(1, RatFunc(2)), q);
  EXPECT_EQ(proof_basis_a(2, q), RatFunc(P({0, 0, 0, -1, 1})));
  EXPECT_THROW(proof_basis_a(1, RatFunc{}), std::domain_error);
  EXPECT_EQ(proof_basis_b(0, q), RatFunc(1));
  EXPECT_EQ(proof_basis_b(1, RatFunc(2)), -q);
  EXPECT_EQ(proof_basis_b(2, q), RatFunc(P({0, 0, 1}) * P({1, -1}) * P({1, 0, -1})));
}

TEST(ProofBasis, SatisfiesBothRelations)
{
  const GaussianTable table(8);
  const RatFunc xs[] = {RatFunc(2), RatFunc(BigRat(3, 2)), RatFunc::q_power(1), RatFunc::q_power(2)};
  for (const auto& x : xs) {
    std::vector<RatFunc> a, b;
    for (long n = 0; n <= 8; ++n) {
      a.push_back(proof_basis_a(n, x));
      b.push_back(proof_basis_b(n, x));
    }
    RatFunc cum_b, cum_a;
    for (long n = 0; n <= 8; ++n) {
      cum_b += b[static_cast<std::size_t>(n)];
      cum_a += RatFunc::q_power(-n) * a[static_cast<std::size_t>(n)];
      EXPECT_EQ(q_transform_first(table, SequenceTable(a), n), cum_b) << "x=" << x << " n=" << n;
      EXPECT_EQ(q_transform_second(table, SequenceTable(b), n), cum_a) << "x=" << x << " n=" << n;
    }
  }
}

TEST(Matrices, Entries)
{
  const QMatrix t = build_matrix(MatrixKind::T, 3);
  EXPECT_EQ(t(2, 0), RatFunc(1));
  EXPECT_EQ(t(2, 1), RatFunc(P({-1, -1})));
  EXPECT_EQ(t(2, 2), RatFunc::q_power(1));

  const QMatrix u = build_matrix(MatrixKind::U, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(u(i, j), RatFunc(j <= i ? 1L : 0L));

  const QMatrix s = build_matrix(MatrixKind::S, 3);
  EXPECT_EQ(s(2, 0), RatFunc(1));
  EXPECT_EQ(s(2, 1), RatFunc(P({-1, -1})) * RatFunc::q_power(-2));
  EXPECT_EQ(s(2, 2), RatFunc::q_power(-3));

  for (auto kind : {MatrixKind::T, MatrixKind::S, MatrixKind::U, MatrixKind::V, MatrixKind::T_inv,
                    MatrixKind::T_inv_U})
    EXPECT_TRUE(build_matrix(kind, 6).is_lower_triangular()) << to_string(kind);
  const QMatrix t6 = build_matrix(MatrixKind::T, 6);
  for (long n = 0; n < 6; ++n) {
    const RatFunc expected = RatFunc(n % 2 == 0 ? 1L : -1L) * RatFunc::q_power(choose2(n));
    EXPECT_EQ(t6(static_cast<std::size_t>(n), static_cast<std::size_t>(n)), expected);
  }
  EXPECT_THROW(build_matrix(MatrixKind::T, 0), std::invalid_argument);
}

TEST(Matrices, Identities)
{
  const GaussianTable table(8);
  for (std::size_t size = 1; size <= 8; ++size) {
    const QMatrix t = build_matrix(table, MatrixKind::T, size);
    const QMatrix t_inv = build_matrix(table, MatrixKind::T_inv, size);
    const QMatrix u = build_matrix(table, MatrixKind::U, size);
    const QMatrix v = build_matrix(table, MatrixKind::V, size);
    EXPECT_EQ(t * t_inv, QMatrix::identity(size));
    EXPECT_EQ(t_inv * t, QMatrix::identity(size));
    EXPECT_EQ(t_inv * u, build_matrix(table, MatrixKind::T_inv_U, size));
    EXPECT_EQ(v * (t_inv * u), build_matrix(table, MatrixKind::S, size));
  }
}

TEST(Matrices, MultiplicationContract)
{
  const QMatrix s = build_matrix(MatrixKind::S, 4);
  EXPECT_EQ(QMatrix::identity(4) * s, s);
  EXPECT_THROW(qmatrix_mul(QMatrix::identity(3), QMatrix::identity(4)), std::invalid_argument);
}
