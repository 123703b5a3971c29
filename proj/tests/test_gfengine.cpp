#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>

#include "qmc/errors.hpp"
#include "qmc/ffpoly.hpp"
#include "qmc/gfengine.hpp"
#include "qmc/qcount.hpp"

using namespace qmc;

namespace {

PrimePower pp(std::int64_t q) { return PrimePower::from_value(q); }

std::vector<BigInt> counts(GFKind kind, std::int64_t q, std::size_t max_n) {
  return gf_counts(kind, pp(q), max_n);
}

std::vector<BigInt> big(std::initializer_list<const char*> xs) {
  std::vector<BigInt> out;
  for (const char* x : xs) out.emplace_back(x);
  return out;
}

std::vector<BigInt> tail(std::vector<BigInt> v, std::size_t from) {
  return std::vector<BigInt>(v.begin() + static_cast<std::ptrdiff_t>(from), v.end());
}

// Euler's pentagonal recurrence.
std::vector<std::int64_t> partition_numbers(std::size_t n_max) {
  std::vector<std::int64_t> p(n_max + 1, 0);
  p[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::int64_t k = 1;; ++k) {
      const auto g1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
      const auto g2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
      if (g1 > n) break;
      const std::int64_t sign = k % 2 == 1 ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  }
  return p;
}

}  // namespace

TEST(Partitions, Enumeration) {
  ASSERT_EQ(partitions_of(0).size(), 1u);
  EXPECT_TRUE(partitions_of(0)[0].empty());
  EXPECT_EQ(partitions_of(4).size(), 5u);
  EXPECT_EQ(partitions_of(10).size(), 42u);
  const auto p = partition_numbers(20);
  for (std::int64_t n = 0; n <= 20; ++n) {
    const auto parts = partitions_of(n);
    EXPECT_EQ(static_cast<std::int64_t>(parts.size()), p[static_cast<std::size_t>(n)]) << n;
    for (const Partition& lam : parts) EXPECT_EQ(lam.size(), n);
  }
  const auto four = partitions_of(4);
  EXPECT_EQ(four.front(), Partition({4}));
  EXPECT_EQ(four.back(), Partition({1, 1, 1, 1}));
}

TEST(Partitions, Validation) {
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_EQ(Partition({1, 3, 1}).parts(), (std::vector<std::int64_t>{3, 1, 1}));
  EXPECT_EQ(Partition({1, 3, 1}).multiplicity(1), 2);
}

TEST(Kung, SmallCases) {
  for (std::int64_t q : {2, 3, 5}) EXPECT_EQ(kung_centralizer_order(q, Partition({1})), q - 1);
  EXPECT_EQ(kung_centralizer_order(2, Partition({1, 1})), 6);
  // A single Jordan block of size n has centralizer F_q[x]/(x^n) units.
  EXPECT_EQ(kung_centralizer_order(3, Partition({3})), 27 - 9);
}

TEST(Kung, FineHerstein) {
  for (std::int64_t q : {2, 3}) {
    for (std::int64_t n = 1; n <= 8; ++n) {
      ExactRational sum = 0;
      for (const Partition& lam : partitions_of(n)) sum += ExactRational(BigInt(1), kung_centralizer_order(q, lam));
      const auto un = static_cast<std::size_t>(n);
      EXPECT_EQ(sum * gamma(pp(q), un), ExactRational(ipow(BigInt(q), un * (un - 1)))) << q << ' ' << n;
    }
  }
}

TEST(EulerFactor, PartitionSum) {
  for (std::int64_t q : {2, 3}) {
    const std::size_t N = 10;
    std::vector<ExactRational> c(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
      for (const Partition& lam : partitions_of(static_cast<std::int64_t>(n)))
        c[n] += ExactRational(BigInt(1), kung_centralizer_order(q, lam));
    EXPECT_EQ(euler_inverse_factor(pp(q), 1, N), TruncSeries(c)) << q;
  }
}

TEST(EulerFactor, Coefficients) {
  for (std::int64_t q : {2, 3, 4}) {
    const TruncSeries e = euler_inverse_factor(pp(q), 1, 8);
    ExactRational denom = 1;
    for (std::size_t n = 0; n <= 8; ++n) {
      if (n > 0) denom *= ExactRational(q) * (1 - ExactRational(BigInt(1), ipow(BigInt(q), n)));
      // 1 / (q^n (1 - 1/q) ... (1 - 1/q^n)), building the q^n one factor at a time
      EXPECT_EQ(e[n], 1 / denom) << q << ' ' << n;
    }
  }
  EXPECT_EQ(euler_inverse_factor(pp(2), 9, 8), TruncSeries::one(8));
  EXPECT_THROW(euler_inverse_factor(pp(2), 0, 8), std::invalid_argument);
}

TEST(Identities, InvertibleProduct) {
  for (std::int64_t q : {2, 3, 4}) {
    for (std::size_t N : {12u, 16u}) {
      const TruncSeries lhs =
          pow(euler_inverse_factor(pp(q), 1, N), BigInt(q - 1)) *
          nu_weighted_product(
              pp(q), [&](std::size_t d) { return d == 1 ? TruncSeries::one(N) : euler_inverse_factor(pp(q), d, N); },
              N);
      EXPECT_EQ(lhs, geometric(1, 1, N)) << q;
      EXPECT_EQ(gf_build({GFTag::invertible_check}, pp(q), N), geometric(1, 1, N));
    }
  }
}

TEST(Identities, ZetaProduct) {
  for (std::int64_t q : {2, 3, 4, 5}) {
    const std::size_t N = 16;
    const TruncSeries lhs = nu_weighted_product(
        pp(q),
        [&](std::size_t d) {
          return TruncSeries::one(N) - TruncSeries::monomial(ExactRational(BigInt(1), ipow(BigInt(q), d)), d, N);
        },
        N);
    EXPECT_EQ(lhs, TruncSeries::one(N) - TruncSeries::monomial(1, 1, N)) << q;
  }
}

TEST(NuWeightedProduct, Basics) {
  EXPECT_EQ(nu_weighted_product(pp(3), [](std::size_t) { return TruncSeries::one(8); }, 8), TruncSeries::one(8));
  EXPECT_THROW(nu_weighted_product(pp(3), [](std::size_t) { return TruncSeries::constant(2, 8); }, 8),
               std::invalid_argument);
  const TruncSeries sep = nu_weighted_product(
      pp(2),
      [](std::size_t d) {
        return TruncSeries::one(6) + TruncSeries::monomial(ExactRational(BigInt(1), ipow(BigInt(2), d) - 1), d, 6);
      },
      6);
  const std::vector<int> want{2, 8, 160, 22272};
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(extract_count(sep, n, pp(2), true), want[n - 1]);
}

TEST(GfBuild, KnownCounts) {
  EXPECT_EQ(tail(counts({GFTag::cyclic}, 2, 4), 1), big({"2", "14", "412", "50832"}));
  EXPECT_EQ(tail(counts({GFTag::semisimple}, 2, 4), 1), big({"2", "10", "218", "25426"}));
  EXPECT_EQ(tail(counts({GFTag::conjclasses_all}, 3, 4), 1), big({"3", "12", "39", "129"}));
  EXPECT_EQ(tail(counts({GFTag::conjclasses_gl}, 2, 5), 1), big({"1", "3", "6", "14", "27"}));
  EXPECT_EQ(tail(counts(GFKind::power_identity(3), 2, 5), 1), big({"1", "3", "57", "1233", "75393"}));
  EXPECT_EQ(tail(counts(GFKind::power_identity(8), 3, 3), 1), big({"2", "32", "4448"}));
  EXPECT_EQ(tail(counts({GFTag::projective_derangement}, 3, 3), 1), big({"0", "18", "3456"}));
  EXPECT_EQ(counts({GFTag::linear_derangement}, 2, 4)[4], 5824);
  EXPECT_EQ(counts({GFTag::diagonalizable}, 3, 5)[5], 346720179);
  EXPECT_EQ(counts({GFTag::bell}, 2, 6)[6], 364558049);
}

TEST(GfBuild, ConstantTermIsOne) {
  for (GFTag tag : {GFTag::invertible_check, GFTag::linear_derangement, GFTag::projective_derangement,
                    GFTag::diagonalizable, GFTag::projection, GFTag::cyclic, GFTag::cyclic_alt,
                    GFTag::semisimple, GFTag::separable, GFTag::separable_alt, GFTag::conjclasses_all,
                    GFTag::conjclasses_gl, GFTag::bell}) {
    const GFKind kind{tag};
    EXPECT_EQ(extract_count(gf_build(kind, pp(3), 4), 0, pp(3), kind.normalized()), 1) << to_string(tag);
    EXPECT_EQ(parse_gf_tag(to_string(tag)), tag);
  }
  EXPECT_FALSE(parse_gf_tag("nonsense"));
}

TEST(GfBuild, Errors) {
  EXPECT_THROW(gf_build(GFKind::power_identity(2), pp(4), 6), BadKindParams);
  EXPECT_THROW(gf_build(GFKind::power_identity(0), pp(3), 6), BadKindParams);
  EXPECT_THROW(gf_build({GFTag::cyclic}, pp(3), 0), std::invalid_argument);
  EXPECT_THROW(extract_count(gf_build({GFTag::cyclic}, pp(3), 4), 5, pp(3), true), std::out_of_range);
  const TruncSeries half = TruncSeries::monomial(ExactRational(1, 2), 1, 2);
  EXPECT_THROW(extract_count(half, 1, pp(2), false), NonIntegralCount);
}

TEST(GfBuild, AlternateForms) {
  for (std::int64_t q : {2, 3, 4, 5, 7}) {
    EXPECT_EQ(gf_build({GFTag::cyclic}, pp(q), 12), gf_build({GFTag::cyclic_alt}, pp(q), 12)) << q;
    EXPECT_EQ(gf_build({GFTag::separable}, pp(q), 12), gf_build({GFTag::separable_alt}, pp(q), 12)) << q;
  }
}

TEST(GfBuild, FormulaRoutes) {
  for (std::int64_t q : {2, 3, 4, 5}) {
    const auto proj = counts({GFTag::projection}, q, 10);
    const auto diag = counts({GFTag::diagonalizable}, q, 10);
    const auto lin = counts({GFTag::linear_derangement}, q, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
      EXPECT_EQ(proj[n], projection_count(pp(q), n));
      EXPECT_EQ(diag[n], diagonalizable_count(pp(q), n));
      EXPECT_EQ(lin[n], linear_derangement_recursive(pp(q), n));
    }
  }
  for (std::int64_t q : {3, 5}) {
    EXPECT_EQ(counts(GFKind::power_identity(2), q, 8), counts({GFTag::projection}, q, 8));
  }
}

TEST(GfBuild, CountsAreIntegral) {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (GFTag tag : {GFTag::projective_derangement, GFTag::cyclic, GFTag::semisimple, GFTag::separable}) {
      EXPECT_NO_THROW(counts({tag}, q, 10)) << q << ' ' << to_string(tag);
    }
    for (std::int64_t k = 1; k <= 12; ++k) {
      if (k % pp(q).p() != 0) EXPECT_NO_THROW(counts(GFKind::power_identity(k), q, 8)) << q << ' ' << k;
    }
  }
}

TEST(GfBuild, QStirling) {
  EXPECT_EQ(q_stirling_via_gf(pp(2), 4, 2), 400);
  for (std::int64_t q : {2, 3})
    for (std::size_t n = 1; n <= 7; ++n)
      for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(q_stirling_via_gf(pp(q), n, k), q_stirling(pp(q), n, k));
}

TEST(Limits, PrintedValues) {
  EXPECT_EQ(limit_eval(LimitKind::invertible, pp(2), 5), "0.28878");
  EXPECT_EQ(limit_eval(LimitKind::invertible, pp(3), 5), "0.56012");
  EXPECT_EQ(limit_eval(LimitKind::cyclic, pp(2), 4), "0.7460");
}

TEST(Limits, AgainstFloatingPoint) {
  for (std::int64_t q : {2, 3, 4, 5, 7}) {
    long double prod = 1;
    for (int r = 1; r < 200; ++r) prod *= 1 - std::pow(static_cast<long double>(q), -r);
    const long double want[] = {prod, prod * prod, std::pow(prod, static_cast<long double>(q)), 1 / prod};
    const LimitKind kinds[] = {LimitKind::invertible, LimitKind::linear_derangement_frac, LimitKind::projective_frac,
                               LimitKind::conj_ratio};
    for (int i = 0; i < 4; ++i) {
      const double got = std::stod(limit_eval(kinds[i], pp(q), 12));
      EXPECT_NEAR(got, static_cast<double>(want[i]), 2e-12) << q << ' ' << to_string(kinds[i]);
    }
  }
}

TEST(Limits, TruncationIsStable) {
  const std::string long_form = limit_eval(LimitKind::invertible, pp(2), 40);
  for (int digits = 1; digits < 40; ++digits) {
    EXPECT_EQ(limit_eval(LimitKind::invertible, pp(2), digits), long_form.substr(0, 2 + static_cast<std::size_t>(digits)));
  }
  EXPECT_THROW(limit_eval(LimitKind::invertible, pp(2), 0), std::invalid_argument);
  EXPECT_THROW(limit_eval(LimitKind::invertible, pp(2), 51), std::invalid_argument);
  EXPECT_EQ(parse_limit_kind("cyclic"), LimitKind::cyclic);
  EXPECT_FALSE(parse_limit_kind("wall"));
}
