#include "qmc/gfengine.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "qmc/errors.hpp"
#include "qmc/ffpoly.hpp"

namespace qmc {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::int64_t p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    size_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::int64_t Partition::multiplicity(std::int64_t i) const {
  return std::count(parts_.begin(), parts_.end(), i);
}

std::vector<Partition> partitions_of(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<std::int64_t> current;
  std::function<void(std::int64_t, std::int64_t)> descend = [&](std::int64_t remaining,
                                                                std::int64_t max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      descend(remaining - part, part);
      current.pop_back();
    }
  };
  descend(n, n);
  return out;
}

BigInt kung_centralizer_order(const BigInt& qd, const Partition& lam) {
  const auto& parts = lam.parts();
  if (parts.empty()) return 1;
  const std::int64_t largest = parts.front();
  std::vector<std::int64_t> b(static_cast<std::size_t>(largest) + 2, 0);
  for (std::int64_t p : parts) ++b[static_cast<std::size_t>(p)];

  BigInt order = 1;
  for (std::int64_t i = 1; i <= largest; ++i) {
    const std::int64_t bi = b[static_cast<std::size_t>(i)];
    if (bi == 0) continue;
    // d_i = b_1 + 2 b_2 + ... + i b_i + i (b_{i+1} + ... )
    std::int64_t di = 0;
    for (std::int64_t j = 1; j <= largest; ++j) di += std::min(i, j) * b[static_cast<std::size_t>(j)];
    const BigInt top = ipow(qd, static_cast<std::uint64_t>(di));
    for (std::int64_t k = 1; k <= bi; ++k) order *= top - ipow(qd, static_cast<std::uint64_t>(di - k));
  }
  return order;
}

namespace {

// prod_{i=1}^{n} (y^{-i} - 1) for y^{-1} = base, i.e. prod (base^i - 1).
std::vector<BigInt> shifted_products(const BigInt& base, std::size_t max_n) {
  std::vector<BigInt> out(max_n + 1);
  out[0] = 1;
  BigInt bi = 1;
  for (std::size_t i = 1; i <= max_n; ++i) {
    bi *= base;
    out[i] = out[i - 1] * (bi - 1);
  }
  return out;
}

// Euler's identities with y = base^{-1}, a = u^d:
//   prod_{r>=1} (1 - a y^r)^{-1} = sum_n a^n base^{n(n-1)/2} / prod_{i=1}^n (base^i - 1)
//   prod_{r>=1} (1 - a y^r)      = sum_n (-1)^n a^n / prod_{i=1}^n (base^i - 1)
// Both are exact term by term; the product over r never terminates in u.
TruncSeries euler_series(const BigInt& base, std::size_t d, std::size_t order, bool inverse) {
  const std::size_t terms = order / d;
  const std::vector<BigInt> den = shifted_products(base, terms);
  std::vector<ExactRational> c(order + 1);
  for (std::size_t n = 0; n <= terms; ++n) {
    if (inverse) {
      c[n * d] = ExactRational(ipow(base, n == 0 ? 0 : n * (n - 1) / 2), den[n]);
    } else {
      c[n * d] = ExactRational(BigInt(n % 2 == 1 ? -1 : 1), den[n]);
    }
  }
  return TruncSeries(std::move(c));
}

TruncSeries euler_product(const PrimePower& q, std::size_t d, std::size_t order) {
  return euler_series(ipow(q.big(), d), d, order, false);
}

// sum_{m>=0} u^{m d} / gamma_m(q^d)
TruncSeries inverse_gamma_series(const PrimePower& q, std::size_t d, std::size_t order) {
  const GammaTable g(ipow(q.big(), d), order / d);
  std::vector<ExactRational> c(order + 1);
  for (std::size_t m = 0; m * d <= order; ++m) c[m * d] = ExactRational(BigInt(1), g[m]);
  return TruncSeries(std::move(c));
}

TruncSeries one_over_one_minus_u(std::size_t order) { return geometric(1, 1, order); }

}  // namespace

TruncSeries euler_inverse_factor(const PrimePower& q, std::size_t d, std::size_t order) {
  if (d == 0) throw std::invalid_argument("euler_inverse_factor needs d >= 1");
  return euler_series(ipow(q.big(), d), d, order, true);
}

TruncSeries nu_weighted_product(const PrimePower& q,
                                const std::function<TruncSeries(std::size_t)>& factor,
                                std::size_t order) {
  TruncSeries result = TruncSeries::one(order);
  for (std::size_t d = 1; d <= order; ++d) {
    const TruncSeries f = factor(d).truncated(order);
    if (f[0] != 1) throw std::invalid_argument("nu_weighted_product factor must have constant term 1");
    result = result * pow(f, nu_irreducible(q, d));
  }
  return result;
}

namespace {

constexpr std::array<std::pair<GFTag, const char*>, 14> kTagNames{{
    {GFTag::invertible_check, "invertible_check"},
    {GFTag::linear_derangement, "linear_derangement"},
    {GFTag::projective_derangement, "projective_derangement"},
    {GFTag::diagonalizable, "diagonalizable"},
    {GFTag::projection, "projection"},
    {GFTag::power_identity, "power_identity"},
    {GFTag::cyclic, "cyclic"},
    {GFTag::cyclic_alt, "cyclic_alt"},
    {GFTag::semisimple, "semisimple"},
    {GFTag::separable, "separable"},
    {GFTag::separable_alt, "separable_alt"},
    {GFTag::conjclasses_all, "conjclasses_all"},
    {GFTag::conjclasses_gl, "conjclasses_gl"},
    {GFTag::bell, "bell"},
}};

}  // namespace

std::string to_string(GFTag tag) {
  for (const auto& [t, name] : kTagNames)
    if (t == tag) return name;
  return "unknown";
}

std::optional<GFTag> parse_gf_tag(const std::string& name) {
  for (const auto& [t, n] : kTagNames)
    if (name == n) return t;
  return std::nullopt;
}

TruncSeries gf_build(const GFKind& kind, const PrimePower& q, std::size_t order) {
  if (order < 1) throw std::invalid_argument("gf_build needs order >= 1");
  const std::size_t N = order;
  const BigInt Q = q.big();

  switch (kind.tag) {
    case GFTag::invertible_check: {
      // Product over all monic irreducibles except z.
      TruncSeries linear = pow(euler_inverse_factor(q, 1, N), BigInt(q.q() - 1));
      TruncSeries rest = nu_weighted_product(
          q,
          [&](std::size_t d) { return d == 1 ? TruncSeries::one(N) : euler_inverse_factor(q, d, N); },
          N);
      return linear * rest;
    }
    case GFTag::linear_derangement:
      return one_over_one_minus_u(N) * euler_product(q, 1, N);
    case GFTag::projective_derangement:
      return one_over_one_minus_u(N) * pow(euler_product(q, 1, N), BigInt(q.q() - 1));
    case GFTag::diagonalizable:
      return pow(inverse_gamma_series(q, 1, N), BigInt(q.q()));
    case GFTag::projection:
      return pow(inverse_gamma_series(q, 1, N), BigInt(2));
    case GFTag::power_identity: {
      if (kind.k < 1) throw BadKindParams("power_identity needs k >= 1");
      if (kind.k % q.p() == 0) {
        throw BadKindParams("power_identity(" + std::to_string(kind.k) +
                            ") requires the characteristic " + std::to_string(q.p()) +
                            " not to divide k");
      }
      TruncSeries result = TruncSeries::one(N);
      for (std::int64_t d : cyclotomic_factor_type(q, kind.k)) {
        result = result * inverse_gamma_series(q, static_cast<std::size_t>(d), N);
      }
      return result;
    }
    case GFTag::cyclic:
      return nu_weighted_product(
          q,
          [&](std::size_t d) {
            const BigInt qd = ipow(Q, d);
            TruncSeries tail = TruncSeries::monomial(ExactRational(BigInt(1), qd - 1), d, N) *
                               geometric(ExactRational(BigInt(1), qd), d, N);
            return TruncSeries::one(N) + tail;
          },
          N);
    case GFTag::cyclic_alt:
      return one_over_one_minus_u(N) *
             nu_weighted_product(
                 q,
                 [&](std::size_t d) {
                   const BigInt qd = ipow(Q, d);
                   return TruncSeries::one(N) +
                          TruncSeries::monomial(ExactRational(BigInt(1), qd * (qd - 1)), d, N);
                 },
                 N);
    case GFTag::semisimple:
      return nu_weighted_product(q, [&](std::size_t d) { return inverse_gamma_series(q, d, N); }, N);
    case GFTag::separable:
      return nu_weighted_product(
          q,
          [&](std::size_t d) {
            return TruncSeries::one(N) +
                   TruncSeries::monomial(ExactRational(BigInt(1), ipow(Q, d) - 1), d, N);
          },
          N);
    case GFTag::separable_alt:
      return one_over_one_minus_u(N) *
             nu_weighted_product(
                 q,
                 [&](std::size_t d) {
                   const BigInt qd = ipow(Q, d);
                   const ExactRational c(BigInt(1), qd * (qd - 1));
                   // 1 + u^d (1 - u^d) / (q^d (q^d - 1))
                   return TruncSeries::one(N) + TruncSeries::monomial(c, d, N) -
                          TruncSeries::monomial(c, 2 * d, N);
                 },
                 N);
    case GFTag::conjclasses_all: {
      // Factors with r > N are 1 + O(u^{N+1}).
      TruncSeries result = TruncSeries::one(N);
      for (std::size_t r = 1; r <= N; ++r) result = result * geometric(ExactRational(Q), r, N);
      return result;
    }
    case GFTag::conjclasses_gl: {
      TruncSeries result = TruncSeries::one(N);
      for (std::size_t r = 1; r <= N; ++r) {
        result = result * geometric(ExactRational(Q), r, N) *
                 (TruncSeries::one(N) - TruncSeries::monomial(1, r, N));
      }
      return result;
    }
    case GFTag::bell:
      return exp(inverse_gamma_series(q, 1, N) - TruncSeries::one(N));
  }
  throw BadKindParams("unknown generating function kind");
}

BigInt extract_count(const TruncSeries& gf, std::size_t n, const PrimePower& q, bool normalized) {
  if (n > gf.order()) {
    throw std::out_of_range("coefficient u^" + std::to_string(n) + " beyond series order " +
                            std::to_string(gf.order()));
  }
  const ExactRational value = normalized ? gf[n] * gamma(q, n) : gf[n];
  if (!is_integral(value) || value < 0) {
    throw NonIntegralCount("coefficient of u^" + std::to_string(n) + " gives " + to_string(value) +
                           ", not a non-negative integer");
  }
  return numerator_of(value);
}

std::vector<BigInt> gf_counts(const GFKind& kind, const PrimePower& q, std::size_t max_n,
                              std::size_t order) {
  const std::size_t N = std::max<std::size_t>({order, max_n, 1});
  const TruncSeries gf = gf_build(kind, q, N);
  std::vector<BigInt> out;
  out.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(extract_count(gf, n, q, kind.normalized()));
  return out;
}

BigInt q_stirling_via_gf(const PrimePower& q, std::size_t n, std::size_t k) {
  if (k == 0 || k > n) return n == 0 && k == 0 ? 1 : 0;
  const TruncSeries blocks = inverse_gamma_series(q, 1, n) - TruncSeries::one(n);
  const ExactRational value = pow(blocks, BigInt(k))[n] * gamma(q, n) / factorial(static_cast<unsigned>(k));
  if (!is_integral(value)) throw NonIntegralCount("q_stirling_via_gf produced " + to_string(value));
  return numerator_of(value);
}

// ---------------------------------------------------------------------------
// Limits

namespace {

constexpr std::array<std::pair<LimitKind, const char*>, 5> kLimitNames{{
    {LimitKind::invertible, "invertible"},
    {LimitKind::linear_derangement_frac, "linear_derangement_frac"},
    {LimitKind::projective_frac, "projective_frac"},
    {LimitKind::cyclic, "cyclic"},
    {LimitKind::conj_ratio, "conj_ratio"},
}};

std::string truncate_decimal(const ExactRational& v, int digits) {
  const BigInt scale = ipow(BigInt(10), static_cast<std::uint64_t>(digits));
  const BigInt scaled = numerator_of(v) * scale / denominator_of(v);  // floor for v >= 0
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return whole.str() + "." + frac;
}

ExactRational rational_pow(const ExactRational& base, unsigned e) {
  return ExactRational(ipow(numerator_of(base), e), ipow(denominator_of(base), e));
}

}  // namespace

std::string to_string(LimitKind kind) {
  for (const auto& [k, name] : kLimitNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<LimitKind> parse_limit_kind(const std::string& name) {
  for (const auto& [k, n] : kLimitNames)
    if (name == n) return k;
  return std::nullopt;
}

std::string limit_eval(LimitKind kind, const PrimePower& q, int digits) {
  if (digits < 1 || digits > 50) throw std::invalid_argument("digits must be in 1..50");
  const BigInt Q = q.big();

  // Smallest R with q^{-R} / (1 - 1/q) < 10^{-digits-2}.
  std::uint64_t R = 1;
  const BigInt target = ipow(BigInt(10), static_cast<std::uint64_t>(digits + 2));
  while (ipow(Q, R) * (Q - 1) <= target * Q) ++R;
  if (kind == LimitKind::cyclic) R = std::max<std::uint64_t>(R, 5);

  for (int attempt = 0; attempt < 64; ++attempt) {
    // prod_{r=1}^{R} (1 - q^-r); the cyclic constant drops r = 1, 2 and gains (1 - q^-5).
    ExactRational partial = 1;
    BigInt qr = 1;
    for (std::uint64_t r = 1; r <= R; ++r) {
      qr *= Q;
      if (kind == LimitKind::cyclic && r <= 2) continue;
      partial *= ExactRational(qr - 1, qr);
    }
    if (kind == LimitKind::cyclic) {
      const BigInt q5 = ipow(Q, 5);
      partial *= ExactRational(q5 - 1, q5);
    }
    // Tail T = prod_{r>R} (1 - q^-r) lies in [1 - t, 1], t = q^-R / (q - 1).
    const ExactRational t(BigInt(1), qr * (Q - 1));
    const ExactRational tail_low = 1 - t;

    ExactRational lo, hi;
    switch (kind) {
      case LimitKind::invertible:
      case LimitKind::cyclic:
        lo = partial * tail_low;
        hi = partial;
        break;
      case LimitKind::linear_derangement_frac:
        hi = partial * partial;
        lo = hi * tail_low * tail_low;
        break;
      case LimitKind::projective_frac: {
        const ExactRational pq = rational_pow(partial, static_cast<unsigned>(q.q()));
        hi = pq;
        lo = pq * rational_pow(tail_low, static_cast<unsigned>(q.q()));
        break;
      }
      case LimitKind::conj_ratio:
        lo = 1 / partial;
        hi = lo / tail_low;
        break;
    }
    const std::string a = truncate_decimal(lo, digits);
    if (a == truncate_decimal(hi, digits)) return a;
    R += 8;
  }
  throw std::runtime_error("limit_eval failed to converge");
}

}  // namespace qmc
