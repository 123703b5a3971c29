#include "qmc/qcount.hpp"

#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qmc/errors.hpp"

namespace qmc {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower::PrimePower(std::int64_t p, int e) : p_(p), e_(e), q_(1) {
  if (!is_prime(p)) throw InvalidPrimePower(std::to_string(p) + " is not prime");
  if (e < 1) throw InvalidPrimePower("prime power exponent must be >= 1");
  for (int i = 0; i < e; ++i) {
    if (q_ > (std::int64_t{1} << 62) / p) throw InvalidPrimePower("prime power too large");
    q_ *= p;
  }
}

PrimePower PrimePower::from_value(std::int64_t q) {
  if (q < 2) throw InvalidPrimePower(std::to_string(q) + " is not a prime power");
  std::int64_t p = q;
  for (std::int64_t d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int e = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw InvalidPrimePower(std::to_string(q) + " is not a prime power");
  return PrimePower(p, e);
}

GammaTable::GammaTable(const BigInt& base, std::size_t max_n) : base_(base) {
  if (base < 2) throw std::invalid_argument("gamma base must be >= 2");
  values_.reserve(max_n + 1);
  values_.push_back(1);
  // gamma_n = gamma_{n-1} * q^{n-1} * (q^n - 1)
  BigInt qpow = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const BigInt prev_pow = qpow;
    qpow *= base;
    values_.push_back(values_.back() * prev_pow * (qpow - 1));
  }
}

BigInt gamma(const BigInt& q, std::size_t n) {
  const BigInt qn = ipow(q, n);
  BigInt g = 1;
  BigInt qi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    g *= qn - qi;
    qi *= q;
  }
  return g;
}

BigInt all_matrices(const PrimePower& q, std::size_t n) { return ipow(q.big(), n * n); }

BigInt q_int(const PrimePower& q, std::size_t i) { return (ipow(q.big(), i) - 1) / (q.q() - 1); }

BigInt q_factorial(const PrimePower& q, std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 1; i <= n; ++i) f *= q_int(q, i);
  return f;
}

BigInt complete_flags(const PrimePower& q, std::size_t n) {
  const BigInt stabilizer = ipow(q.big() - 1, n) * ipow(q.big(), n * (n - (n > 0 ? 1 : 0)) / 2);
  return gamma(q, n) / stabilizer;
}

BigInt gaussian_binomial(const PrimePower& q, std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  const BigInt Q = q.big();
  const BigInt qn = ipow(Q, static_cast<std::uint64_t>(n));
  const BigInt qk = ipow(Q, static_cast<std::uint64_t>(k));
  BigInt num = 1;
  BigInt den = 1;
  BigInt qi = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= qn - qi;
    den *= qk - qi;
    qi *= Q;
  }
  return num / den;
}

BigInt q_multinomial(const PrimePower& q, std::span<const std::size_t> parts) {
  if (parts.empty()) throw std::invalid_argument("q_multinomial needs at least one part");
  const std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  BigInt den = 1;
  for (std::size_t part : parts) den *= q_factorial(q, part);
  return q_factorial(q, n) / den;
}

BigInt subspace_total(const PrimePower& q, std::size_t n) {
  BigInt total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    total += gaussian_binomial(q, static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
  }
  return total;
}

BigInt rank_count(const PrimePower& q, std::size_t m, std::size_t n, std::size_t k) {
  if (k > m || k > n) return 0;
  const BigInt Q = q.big();
  const BigInt qn = ipow(Q, n);
  BigInt surjections = 1;
  BigInt qi = 1;
  for (std::size_t i = 0; i < k; ++i) {
    surjections *= qn - qi;
    qi *= Q;
  }
  return gaussian_binomial(q, static_cast<std::int64_t>(m), static_cast<std::int64_t>(k)) *
         surjections;
}

BigInt q_stirling(const PrimePower& q, std::size_t n, std::size_t k) {
  if (k == 0 || k > n) return n == 0 && k == 0 ? 1 : 0;
  const GammaTable g(q, n);
  ExactRational total = 0;
  // Ordered compositions n_1 + ... + n_k = n with n_i >= 1.
  std::function<void(std::size_t, std::size_t, ExactRational)> descend =
      [&](std::size_t slots, std::size_t remaining, ExactRational weight) {
        if (slots == 0) {
          if (remaining == 0) total += weight;
          return;
        }
        for (std::size_t part = 1; part + (slots - 1) <= remaining; ++part) {
          descend(slots - 1, remaining - part, weight / g[part]);
        }
      };
  descend(k, n, ExactRational(g[n]));
  total /= factorial(static_cast<unsigned>(k));
  if (!is_integral(total)) throw NonIntegralCount("q_stirling produced " + to_string(total));
  return numerator_of(total);
}

BigInt q_bell(const PrimePower& q, std::size_t n) {
  if (n == 0) return 1;
  BigInt total = 0;
  for (std::size_t k = 1; k <= n; ++k) total += q_stirling(q, n, k);
  return total;
}

BigInt projection_count(const PrimePower& q, std::size_t n) {
  const GammaTable g(q, n);
  BigInt total = 0;
  for (std::size_t i = 0; i <= n; ++i) total += g[n] / (g[i] * g[n - i]);
  return total;
}

BigInt diagonalizable_count(const PrimePower& q, std::size_t n) {
  const GammaTable g(q, n);
  // weights[m] = sum over weak compositions of m into j parts of 1/prod gamma,
  // built up one part (one eigenvalue) at a time.
  std::vector<ExactRational> weights(n + 1, ExactRational(0));
  weights[0] = 1;
  for (std::int64_t part = 0; part < q.q(); ++part) {
    std::vector<ExactRational> next(n + 1, ExactRational(0));
    for (std::size_t m = 0; m <= n; ++m) {
      for (std::size_t i = 0; i <= m; ++i) next[m] += weights[m - i] / g[i];
    }
    weights = std::move(next);
  }
  const ExactRational count = weights[n] * g[n];
  if (!is_integral(count)) throw NonIntegralCount("diagonalizable_count produced " + to_string(count));
  return numerator_of(count);
}

BigInt involution_count_char2(const PrimePower& q, std::size_t n) {
  if (q.p() != 2) throw CharNotTwo("involution_count_char2 needs q a power of 2, got " + std::to_string(q.q()));
  const GammaTable g(q, n);
  BigInt total = 0;
  for (std::size_t i = 0; 2 * i <= n; ++i) {
    const BigInt den = ipow(q.big(), i * (2 * n - 3 * i)) * g[i] * g[n - 2 * i];
    total += g[n] / den;
  }
  return total;
}

BigInt nilpotent_count(const PrimePower& q, std::size_t n) {
  return n == 0 ? BigInt(1) : ipow(q.big(), n * (n - 1));
}

BigInt linear_derangement_recursive(const PrimePower& q, std::size_t n) {
  const BigInt Q = q.big();
  BigInt e = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    const BigInt sign_term = ipow(Q, i * (i - 1) / 2);
    e = e * (ipow(Q, i) - 1) * ipow(Q, i - 1) + (i % 2 == 0 ? sign_term : -sign_term);
  }
  return e;
}

BigInt linear_derangement_reduced(const PrimePower& q, std::size_t n) {
  BigInt a = 1;
  for (std::size_t i = 1; i <= n; ++i) a = a * (ipow(q.big(), i) - 1) + (i % 2 == 0 ? 1 : -1);
  return a;
}

BigInt linear_derangement_via_reduced(const PrimePower& q, std::size_t n) {
  return linear_derangement_reduced(q, n) * ipow(q.big(), n * (n - (n > 0 ? 1 : 0)) / 2);
}

BigInt separable_class_count(const PrimePower& q, std::size_t n) {
  if (n == 0) throw std::invalid_argument("separable_class_count needs n >= 1");
  if (n == 1) return q.q();
  return ipow(q.big(), n) - ipow(q.big(), n - 1);
}

}  // namespace qmc
