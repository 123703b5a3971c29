#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "qmc/errors.hpp"
#include "qmc/ffpoly.hpp"

using namespace qmc;

namespace {

PrimePower pp(std::int64_t q) { return PrimePower::from_value(q); }

// Monic polynomial of the given degree from the base-q digits of `index`.
FqPoly monic_from_index(std::uint64_t index, std::size_t degree, std::int64_t q) {
  std::vector<Element> c(degree + 1);
  for (std::size_t i = 0; i < degree; ++i, index /= static_cast<std::uint64_t>(q))
    c[i] = static_cast<Element>(index % static_cast<std::uint64_t>(q));
  c[degree] = 1;
  return FqPoly(std::move(c));
}

std::uint64_t upow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool irreducible_by_division(const FqPoly& f, const FieldSpec& field) {
  const auto deg = static_cast<std::size_t>(f.degree());
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    for (std::uint64_t i = 0; i < upow(static_cast<std::uint64_t>(field.q()), d); ++i) {
      if (poly_divmod(f, monic_from_index(i, d, field.q()), field).second.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST(NumberTheory, Moebius) {
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(4), 0);
  EXPECT_EQ(moebius(30), -1);
  EXPECT_EQ(moebius(7), -1);
  EXPECT_EQ(moebius(6), 1);
}

TEST(NumberTheory, PhiAndDivisors) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  for (std::int64_t n = 1; n <= 60; ++n) {
    std::int64_t sum = 0;
    for (std::int64_t d : divisors(n)) sum += euler_phi(d);
    EXPECT_EQ(sum, n);
  }
}

TEST(Irreducibles, Counts) {
  EXPECT_EQ(nu_irreducible(pp(5), 1), 5);
  EXPECT_EQ(nu_irreducible(pp(2), 2), 1);
  EXPECT_EQ(nu_irreducible(pp(2), 4), 3);
}

TEST(Irreducibles, BruteForce) {
  for (std::int64_t q : {2, 3, 4, 5}) {
    const FieldSpec field = FieldSpec::build(pp(q));
    for (std::size_t d = 1; d <= (q <= 3 ? 5u : 4u); ++d) {
      std::uint64_t count = 0;
      for (std::uint64_t i = 0; i < upow(static_cast<std::uint64_t>(q), d); ++i)
        count += irreducible_by_division(monic_from_index(i, d, q), field);
      EXPECT_EQ(nu_irreducible(pp(q), d), count) << q << ' ' << d;
    }
  }
}

TEST(Irreducibles, NecklaceIdentity) {
  for (std::int64_t q : {2, 3, 4}) {
    for (std::int64_t n = 1; n <= 10; ++n) {
      BigInt sum = 0;
      for (std::int64_t d : divisors(n)) sum += d * nu_irreducible(pp(q), static_cast<std::size_t>(d));
      EXPECT_EQ(sum, ipow(BigInt(q), static_cast<std::uint64_t>(n)));
    }
  }
}

TEST(CyclotomicType, Values) {
  EXPECT_EQ(mult_order(5, 1), 1);
  EXPECT_EQ(mult_order(2, 3), 2);
  EXPECT_EQ(mult_order(3, 8), 2);
  EXPECT_THROW(mult_order(2, 4), NotCoprime);
  EXPECT_EQ(cyclotomic_factor_type(pp(2), 3), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(cyclotomic_factor_type(pp(3), 8), (std::vector<std::int64_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(cyclotomic_factor_type(pp(7), 1), (std::vector<std::int64_t>{1}));
  EXPECT_THROW(cyclotomic_factor_type(pp(4), 6), NotCoprime);
}

TEST(CyclotomicType, DegreesAddUp) {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (std::int64_t k = 1; k <= 40; ++k) {
      if (k % pp(q).p() == 0) continue;
      const auto degs = cyclotomic_factor_type(pp(q), k);
      EXPECT_EQ(std::accumulate(degs.begin(), degs.end(), std::int64_t{0}), k);
      EXPECT_EQ(std::count(degs.begin(), degs.end(), 1), std::gcd(k, q - 1));
    }
  }
}

TEST(FieldSpec, Moduli) {
  EXPECT_EQ(FieldSpec::build(2, 2).modulus(), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(FieldSpec::build(3, 2).modulus(), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(FieldSpec::build(5, 1).q(), 5);
  EXPECT_EQ(FieldSpec::build(5, 1).mul(3, 4), 2);
}

TEST(FieldSpec, LexicographicScan) {
  // Smallest monic (c0, c1, ..., c_{e-1}, 1) with c0 compared first and no
  // root in F_p; for e <= 3 that is exactly irreducibility.
  for (auto [p, e] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {5, 3}}) {
    std::vector<std::int64_t> found;
    std::vector<std::int64_t> digits(static_cast<std::size_t>(e), 0);
    for (;;) {
      bool has_root = false;
      for (std::int64_t x = 0; x < p && !has_root; ++x) {
        std::int64_t v = 1;
        for (int i = e - 1; i >= 0; --i) v = (v * x + digits[static_cast<std::size_t>(i)]) % p;
        has_root = v == 0;
      }
      if (!has_root) {
        found = digits;
        found.push_back(1);
        break;
      }
      int i = e - 1;  // c0 is the most significant key
      while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == p) digits[static_cast<std::size_t>(i--)] = 0;
      ASSERT_GE(i, 0);
    }
    EXPECT_EQ(FieldSpec::build(p, e).modulus(), found) << p << '^' << e;
  }
}

TEST(FieldSpec, ModulusIsIrreducible) {
  for (auto [p, e] : {std::pair{2, 4}, {2, 5}, {3, 4}, {2, 8}, {3, 3}}) {
    const auto m = FieldSpec::build(p, e).modulus();
    EXPECT_TRUE(is_irreducible_over_prime(m, p)) << p << '^' << e;
  }
  const std::vector<std::int64_t> reducible{1, 0, 1};  // z^2 + 1 = (z + 1)^2 over F_2
  EXPECT_FALSE(is_irreducible_over_prime(reducible, 2));
}

TEST(FieldSpec, Axioms) {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const FieldSpec f = FieldSpec::build(pp(q));
    const auto Q = static_cast<int>(q);
    for (int a = 0; a < Q; ++a) {
      const auto ea = static_cast<Element>(a);
      EXPECT_EQ(f.add(ea, 0), ea);
      EXPECT_EQ(f.mul(ea, 1), ea);
      EXPECT_EQ(f.add(ea, f.neg(ea)), 0);
      if (a != 0) EXPECT_EQ(f.mul(ea, f.inv(ea)), 1);
      for (int b = 0; b < Q; ++b) {
        const auto eb = static_cast<Element>(b);
        EXPECT_EQ(f.mul(ea, eb), f.mul(eb, ea));
        EXPECT_EQ(f.sub(f.add(ea, eb), eb), ea);
        if (a != 0 && b != 0) EXPECT_NE(f.mul(ea, eb), 0);
        for (int c = 0; c < Q; ++c) {
          const auto ec = static_cast<Element>(c);
          EXPECT_EQ(f.mul(f.mul(ea, eb), ec), f.mul(ea, f.mul(eb, ec)));
          EXPECT_EQ(f.mul(ea, f.add(eb, ec)), f.add(f.mul(ea, eb), f.mul(ea, ec)));
        }
      }
    }
    EXPECT_EQ(f.from_int(f.p()), 0);
    EXPECT_THROW(f.inv(0), std::domain_error);
  }
}

TEST(Poly, Arithmetic) {
  const FieldSpec f3 = FieldSpec::build(3, 1);
  const FqPoly a({2, 0, 1});  // z^2 - 1
  const FqPoly b({2, 1});     // z - 1
  EXPECT_EQ(poly_gcd(a, b, f3), FqPoly({2, 1}));
  const auto [quot, rem] = poly_divmod(a, b, f3);
  EXPECT_EQ(quot, FqPoly({1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(poly_mul(quot, b, f3), a);
  EXPECT_THROW(poly_divmod(a, FqPoly(), f3), ZeroPolynomial);
  EXPECT_THROW(poly_gcd(FqPoly(), FqPoly(), f3), ZeroPolynomial);
  EXPECT_EQ(FqPoly({1, 0, 0}).degree(), 0);
  EXPECT_EQ(FqPoly().degree(), -1);
  EXPECT_EQ(poly_eval(a, 1, f3), 0);
}

TEST(Poly, Squarefree) {
  const FieldSpec f2 = FieldSpec::build(2, 1);
  EXPECT_FALSE(squarefree_test(FqPoly({0, 0, 1}), f2));
  EXPECT_TRUE(squarefree_test(FqPoly({1, 1, 1}), f2));
  EXPECT_THROW(squarefree_test(FqPoly(), f2), ZeroPolynomial);
}

TEST(Poly, SquarefreeQuadraticCount) {
  for (std::int64_t q : {2, 3, 4, 5, 7}) {
    const FieldSpec f = FieldSpec::build(pp(q));
    for (std::size_t n = 1; n <= (q <= 3 ? 4u : 3u); ++n) {
      std::uint64_t count = 0;
      for (std::uint64_t i = 0; i < upow(static_cast<std::uint64_t>(q), n); ++i)
        count += squarefree_test(monic_from_index(i, n, q), f);
      const std::uint64_t want = n == 1 ? upow(static_cast<std::uint64_t>(q), 1)
                                        : upow(static_cast<std::uint64_t>(q), n) - upow(static_cast<std::uint64_t>(q), n - 1);
      EXPECT_EQ(count, want) << q << ' ' << n;
    }
  }
}

TEST(PolyProperty, DerivativeOfPthPowerVanishes) {
  std::mt19937_64 rng(11);
  for (std::int64_t q : {2, 3, 4, 5, 9}) {
    const FieldSpec f = FieldSpec::build(pp(q));
    std::uniform_int_distribution<int> coeff(0, static_cast<int>(q) - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Element> c(4);
      for (auto& x : c) x = static_cast<Element>(coeff(rng));
      const FqPoly g(c);
      FqPoly power({1});
      for (std::int64_t i = 0; i < f.p(); ++i) power = poly_mul(power, g, f);
      EXPECT_TRUE(poly_derivative(power, f).is_zero());
    }
  }
}

TEST(PolyProperty, DivisionIdentity) {
  std::mt19937_64 rng(12);
  const FieldSpec f = FieldSpec::build(pp(8));
  std::uniform_int_distribution<int> coeff(0, 7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Element> ca(6), cb(3);
    for (auto& x : ca) x = static_cast<Element>(coeff(rng));
    for (auto& x : cb) x = static_cast<Element>(coeff(rng));
    const FqPoly a(ca), b(cb);
    if (b.is_zero()) continue;
    const auto [quot, rem] = poly_divmod(a, b, f);
    EXPECT_EQ(poly_add(poly_mul(quot, b, f), rem, f), a);
    EXPECT_LT(rem.degree(), b.degree());
    if (!a.is_zero()) {
      const FqPoly g = poly_gcd(a, b, f);
      EXPECT_TRUE(poly_divmod(a, g, f).second.is_zero());
      EXPECT_TRUE(poly_divmod(b, g, f).second.is_zero());
      EXPECT_EQ(g.lead(), 1);
    }
  }
}
