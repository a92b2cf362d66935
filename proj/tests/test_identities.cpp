#include <qharmonic/report_io.hpp>
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

BigRat R(long p, long q = 1)
{
  BigRat r(p, static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

template <class T>
const T& side(const ReportValue& v)
{
  return std::get<T>(v);
}

} // namespace

TEST(Hernandez, Examples)
{
  for (long m = 1; m <= 4; ++m) {
    const auto r = verify_hernandez(1, m);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(side<BigRat>(r.lhs), 1);
  }
  const auto r22 = verify_hernandez(2, 2);
  EXPECT_TRUE(r22.equal);
  EXPECT_EQ(side<BigRat>(r22.lhs), R(5, 4));
  const auto r31 = verify_hernandez(3, 1);
  EXPECT_EQ(side<BigRat>(r31.lhs), R(11, 6));
  EXPECT_EQ(side<BigRat>(r31.rhs), R(11, 6));
}

TEST(Dilcher, Examples)
{
  EXPECT_EQ(side<BigRat>(verify_dilcher(1, 1).lhs), 1);
  const auto r21 = verify_dilcher(2, 1);
  EXPECT_TRUE(r21.equal);
  EXPECT_EQ(side<BigRat>(r21.lhs), R(3, 2));
  const auto r22 = verify_dilcher(2, 2);
  EXPECT_TRUE(r22.equal);
  EXPECT_EQ(side<BigRat>(r22.rhs), R(7, 4));
}

TEST(DilcherQ, Examples)
{
  const auto r11 = verify_dilcher_q(1, 1);
  EXPECT_TRUE(r11.equal);
  EXPECT_EQ(side<RatFunc>(r11.lhs), RatFunc(P({0, 1}), P({1, -1})));
  const auto r21 = verify_dilcher_q(2, 1);
  EXPECT_TRUE(r21.equal);
  EXPECT_EQ(side<RatFunc>(r21.lhs), RatFunc(P({0, 1, 2}), P({1, 0, -1})));
  const auto r12 = verify_dilcher_q(1, 2);
  EXPECT_TRUE(r12.equal);
  EXPECT_EQ(side<RatFunc>(r12.rhs), RatFunc(P({0, 0, 1}), P({1, -2, 1})));
}

TEST(HernandezQ, Examples)
{
  const auto r11 = verify_hernandez_q(1, 1);
  EXPECT_TRUE(r11.equal);
  EXPECT_EQ(side<RatFunc>(r11.lhs), RatFunc(P({1}), P({1, -1})));
  const auto r21 = verify_hernandez_q(2, 1);
  EXPECT_TRUE(r21.equal);
  EXPECT_EQ(side<RatFunc>(r21.lhs), RatFunc(P({2, 1}), P({1, 0, -1})));
  const auto r12 = verify_hernandez_q(1, 2);
  EXPECT_TRUE(r12.equal);
  EXPECT_EQ(side<RatFunc>(r12.lhs), RatFunc(P({0, 1}), P({1, -2, 1})));
  // Frozen from an independent computer-algebra expansion of the power sum.
  const auto r32 = verify_hernandez_q(3, 2);
  EXPECT_TRUE(r32.equal);
  EXPECT_EQ(side<RatFunc>(r32.rhs),
            RatFunc(P({0, 1, 5, 11, 15, 11, 5, 1}), P({1, 2, 1, -2, -4, -2, 1, 2, 1})));
  EXPECT_EQ(r32.den_degree, 8);
}

TEST(Sampled, Examples)
{
  const auto h = verify_sampled(Identity::hernandez_q, 2, 1, {R(1, 2)});
  EXPECT_TRUE(h.equal);
  EXPECT_EQ(side<std::vector<BigRat>>(h.lhs), std::vector<BigRat>{R(10, 3)});
  EXPECT_EQ(side<std::vector<BigRat>>(h.rhs), std::vector<BigRat>{R(10, 3)});

  const auto d = verify_sampled(Identity::dilcher, 3, 2, {R(1, 2)});
  const auto d_sym = verify_dilcher(3, 2);
  EXPECT_EQ(d.equal, d_sym.equal);
  EXPECT_EQ(d.lhs, d_sym.lhs);
  EXPECT_FALSE(d.sample_points);

  const auto dq = verify_sampled(Identity::dilcher_q, 1, 1, {R(1, 3)});
  EXPECT_TRUE(dq.equal);
  EXPECT_EQ(side<std::vector<BigRat>>(dq.lhs), std::vector<BigRat>{R(1, 2)});

  EXPECT_THROW(verify_sampled(Identity::dilcher_q, 1, 1, {R(1)}), std::domain_error);
  EXPECT_THROW(verify_sampled(Identity::dilcher_q, 1, 1, {R(3, 2)}), std::domain_error);
}

TEST(Sampled, PointsAreDeterministicAndInRange)
{
  const auto a = sample_points(42, 20);
  EXPECT_EQ(a, sample_points(42, 20));
  EXPECT_NE(a, sample_points(43, 20));
  for (const auto& p : a) {
    EXPECT_GT(p, 0);
    EXPECT_LT(p, 1);
    EXPECT_LE(p.get_den(), 1000);
  }
  const std::set<std::string> distinct = [&] {
    std::set<std::string> s;
    for (const auto& p : a)
      s.insert(to_string(p));
    return s;
  }();
  EXPECT_EQ(distinct.size(), a.size());
}

TEST(Modes, SymbolicAndSampledAgree)
{
  const auto points = sample_points(7, 4);
  for (Identity id : kAllIdentities)
    for (long n = 1; n <= 6; ++n)
      for (long m = 1; m <= 3; ++m) {
        const auto sym = verify(id, n, m, Mode::symbolic);
        const auto smp = verify_sampled(id, n, m, points, 7);
        EXPECT_EQ(sym.equal, smp.equal);
        if (is_q_identity(id)) {
          const auto& vals = side<std::vector<BigRat>>(smp.lhs);
          for (std::size_t i = 0; i < points.size(); ++i)
            EXPECT_EQ(side<RatFunc>(sym.lhs).eval(points[i]), vals[i]);
        }
      }
}

TEST(Degeneration, QIdentitiesClearToClassical)
{
  const SymbolicQ sym(std::size_t{8});
  for (long n = 1; n <= 8; ++n)
    for (long m = 1; m <= 3; ++m) {
      const auto [hq_l, hq_r] = hernandez_sides(sym, n, m);
      EXPECT_EQ(cleared_value_at_one(hq_l, m), side<BigRat>(verify_hernandez(n, m).lhs));
      EXPECT_EQ(cleared_value_at_one(hq_r, m), side<BigRat>(verify_hernandez(n, m).rhs));
      const auto [dq_l, dq_r] = dilcher_sides(sym, n, m);
      EXPECT_EQ(cleared_value_at_one(dq_l, m), side<BigRat>(verify_dilcher(n, m).lhs));
      EXPECT_EQ(cleared_value_at_one(dq_r, m), side<BigRat>(verify_dilcher(n, m).rhs));
    }
}

TEST(InversionConsistency, HernandezLhsIsTheClassicalTransform)
{
  for (long n = 1; n <= 8; ++n)
    for (long m = 1; m <= 3; ++m) {
      std::vector<BigRat> a{BigRat(0)};
      for (long k = 1; k <= n; ++k)
        a.push_back(-mhs_endpoint(k, m));
      const BigRat transformed = alt_binomial_cumulative(BasicSequenceTable<BigRat>(a), n);
      EXPECT_EQ(transformed, side<BigRat>(verify_hernandez(n, m).lhs));
    }
}

TEST(Sweep, ShapesAndOrdering)
{
  const auto h = sweep(Identity::hernandez, 3, 2, Mode::symbolic);
  ASSERT_EQ(h.size(), 6U);
  for (std::size_t i = 0; i < h.size(); ++i) {
    EXPECT_TRUE(h[i].equal);
    EXPECT_EQ(h[i].n, static_cast<long>(i / 2 + 1));
    EXPECT_EQ(h[i].m, static_cast<long>(i % 2 + 1));
  }
  for (Identity id : kAllIdentities)
    EXPECT_EQ(sweep(id, 1, 1, Mode::symbolic).size(), 1U);

  const auto hq = sweep(Identity::hernandez_q, 4, 2, Mode::sampled, {5, 3, 0});
  ASSERT_EQ(hq.size(), 8U);
  for (const auto& r : hq) {
    EXPECT_TRUE(r.equal);
    ASSERT_TRUE(r.sample_points);
    EXPECT_EQ(r.sample_points->size(), 5U);
    EXPECT_EQ(r.seed, 3U);
  }
  EXPECT_THROW(sweep(Identity::hernandez, 0, 1, Mode::symbolic), std::invalid_argument);
}

TEST(Sweep, ParallelMatchesSerial)
{
  const auto serial = sweep(Identity::dilcher_q, 5, 3, Mode::symbolic, {5, 0, 1});
  const auto parallel = sweep(Identity::dilcher_q, 5, 3, Mode::symbolic, {5, 0, 4});
  EXPECT_EQ(serial, parallel);
}

TEST(Reports, JsonRoundTrip)
{
  std::vector<IdentityReport> reports{verify_hernandez(4, 2), verify_dilcher_q(3, 2), verify_hernandez_q(3, 1),
                                      verify(Identity::dilcher_q, 4, 2, Mode::sampled, {3, 11, 1})};
  for (const auto& r : reports) {
    const json j = to_json(r);
    EXPECT_EQ(report_from_json(json::parse(j.dump())), r);
  }
  const json j = to_json(verify_hernandez(2, 2));
  EXPECT_EQ(j.dump(), R"({"identity":"hernandez","n":2,"m":2,"mode":"symbolic","lhs":"5/4","rhs":"5/4",)"
                      R"("equal":true,"sample_points":null,"seed":null,"den_degree":null})");
}

TEST(Reports, CsvCarriesTheJsonValues)
{
  const auto r = verify_hernandez_q(2, 1);
  const std::string row = to_csv_row(r);
  EXPECT_EQ(row.rfind("hernandez_q,2,1,symbolic,true,", 0), 0U);
  const std::string cell = to_json_value(r.lhs).dump();
  EXPECT_NE(row.find(csv_escape(cell)), std::string::npos);
  EXPECT_EQ(to_csv_row(verify_dilcher(2, 1)), "dilcher,2,1,symbolic,true,3/2,3/2");
}
