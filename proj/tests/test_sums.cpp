#include <qharmonic/sums.hpp>

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

BigRat R(long p, long q = 1)
{
  BigRat r(p, static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

RatFunc factor(long i) { return RatFunc(Poly::monomial(BigRat(1), static_cast<std::size_t>(i)), P({1}) - Poly::monomial(BigRat(1), static_cast<std::size_t>(i))); }

} // namespace

TEST(ClassicalSums, Examples)
{
  for (long m = 1; m <= 4; ++m) {
    EXPECT_EQ(power_sum(1, m), 1);
    EXPECT_EQ(mhs_full(1, m), 1);
    EXPECT_EQ(mhs_endpoint(1, m), 1);
  }
  EXPECT_EQ(power_sum(3, 1), R(11, 6));
  EXPECT_EQ(power_sum(2, 2), R(5, 4));
  EXPECT_EQ(mhs_full(2, 2), R(7, 4));
  EXPECT_EQ(mhs_full(3, 1), R(11, 6));
  EXPECT_EQ(mhs_endpoint(2, 2), R(3, 4));
  EXPECT_EQ(mhs_endpoint(2, 1), R(1, 2));
  EXPECT_THROW(power_sum(0, 1), std::invalid_argument);
  EXPECT_THROW(mhs_full(2, 0), std::invalid_argument);
}

TEST(QSums, Examples)
{
  EXPECT_EQ(q_power_sum(1, 1), RatFunc(P({1}), P({1, -1})));
  EXPECT_EQ(q_power_sum(2, 1), RatFunc(P({2, 1}), P({1, 0, -1})));
  EXPECT_EQ(q_power_sum(1, 2), RatFunc(P({0, 1}), P({1, -2, 1})));
  EXPECT_EQ(q_mhs_full(1, 1), factor(1));
  EXPECT_EQ(q_mhs_full(2, 1), RatFunc(P({0, 1, 2}), P({1, 0, -1})));
  EXPECT_EQ(q_mhs_full(2, 2), factor(1) * factor(1) + factor(1) * factor(2) + factor(2) * factor(2));
  EXPECT_EQ(q_mhs_endpoint(1, 1), factor(1));
  EXPECT_EQ(q_mhs_endpoint(2, 1), factor(2));
  // Frozen from an independent computer-algebra expansion.
  EXPECT_EQ(q_mhs_endpoint(2, 2), RatFunc(P({0, 0, 0, 1, 2}), P({1, 0, -2, 0, 1})));
  EXPECT_EQ(q_mhs_endpoint(2, 2), factor(1) * factor(2) + factor(2) * factor(2));
}

TEST(NaiveOracle, Examples)
{
  EXPECT_EQ(std::get<BigRat>(mhs_naive_oracle({2, 2, std::nullopt}, false)), R(7, 4));
  EXPECT_EQ(std::get<BigRat>(mhs_naive_oracle({2, 2, 2}, false)), R(3, 4));
  EXPECT_EQ(std::get<RatFunc>(mhs_naive_oracle({1, 1, std::nullopt}, true)), factor(1));
}

TEST(NaiveOracle, GuardsAndValidation)
{
  EXPECT_THROW(mhs_naive_oracle({60, 8, std::nullopt}, false), std::length_error);
  EXPECT_THROW(mhs_naive_oracle({3, 2, 4}, false), std::invalid_argument);
  EXPECT_THROW(mhs_naive_oracle({0, 2, std::nullopt}, false), std::invalid_argument);
  EXPECT_EQ(chain_count({3, 2, std::nullopt}), 6);
  EXPECT_EQ(chain_count({3, 2, 3}), 3);
}

TEST(DpMatchesOracle, UpToSix)
{
  const SymbolicQ sym(std::size_t{0});
  for (long n = 1; n <= 6; ++n)
    for (long m = 1; m <= 6; ++m) {
      EXPECT_EQ(mhs_full(n, m), naive_chain_sum(ClassicalArith{}, {n, m, std::nullopt}));
      EXPECT_EQ(mhs_endpoint(n, m), naive_chain_sum(ClassicalArith{}, {n, m, n}));
      EXPECT_EQ(q_mhs_full(n, m), naive_chain_sum(sym, {n, m, std::nullopt}));
      EXPECT_EQ(q_mhs_endpoint(n, m), naive_chain_sum(sym, {n, m, n}));
    }
}

TEST(SumProperties, DecompositionAndRecurrence)
{
  for (long n = 1; n <= 7; ++n)
    for (long m = 1; m <= 4; ++m) {
      BigRat total = 0;
      RatFunc q_total;
      for (long k = 1; k <= n; ++k) {
        total += mhs_endpoint(k, m);
        q_total += q_mhs_endpoint(k, m);
      }
      EXPECT_EQ(total, mhs_full(n, m));
      EXPECT_EQ(q_total, q_mhs_full(n, m));

      if (m >= 2) {
        BigRat inner = 0;
        RatFunc q_inner;
        for (long j = 1; j <= n; ++j) {
          inner += mhs_endpoint(j, m - 1);
          q_inner += q_mhs_endpoint(j, m - 1);
        }
        EXPECT_EQ(mhs_endpoint(n, m), inner / n);
        EXPECT_EQ(q_mhs_endpoint(n, m), factor(n) * q_inner);
      }
    }
  for (long n = 1; n <= 10; ++n)
    EXPECT_EQ(mhs_full(n, 1), power_sum(n, 1));
}

TEST(SumProperties, DegenerationAtOne)
{
  for (long n = 1; n <= 8; ++n)
    for (long m = 1; m <= 3; ++m) {
      EXPECT_EQ(cleared_value_at_one(q_power_sum(n, m), m), power_sum(n, m));
      EXPECT_EQ(cleared_value_at_one(q_mhs_full(n, m), m), mhs_full(n, m));
    }
  // Without enough (1-q) factors the pole at 1 survives.
  EXPECT_THROW(cleared_value_at_one(q_power_sum(3, 2), 1), std::domain_error);
}

TEST(EvaluatedSums, AgreeWithSymbolicAtAPoint)
{
  const BigRat q0 = R(2, 7);
  const EvaluatedQ ev(q0, 6);
  for (long n = 1; n <= 6; ++n)
    for (long m = 1; m <= 3; ++m) {
      EXPECT_EQ(power_sum(ev, n, m), q_power_sum(n, m).eval(q0));
      EXPECT_EQ(chain_sum_full(ev, n, m), q_mhs_full(n, m).eval(q0));
    }
  EXPECT_THROW(EvaluatedQ(R(1), 3).harmonic_factor(2), std::domain_error);
}
