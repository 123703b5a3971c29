#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qmc/bigint.hpp"

namespace qmc {

bool is_prime(std::int64_t n);

/// A validated prime power q = p^e, e >= 1.
class PrimePower {
 public:
  /// Throws InvalidPrimePower unless p is prime and e >= 1 and p^e fits in 62 bits.
  PrimePower(std::int64_t p, int e);

  /// Factors q; throws InvalidPrimePower when q is not a prime power.
  static PrimePower from_value(std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  std::int64_t q() const noexcept { return q_; }
  BigInt big() const { return BigInt(q_); }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  std::int64_t p_;
  int e_;
  std::int64_t q_;
};

/// gamma_n(q) = |GL_n(q)| for n = 0..max_n, computed once.
/// `base` may be any integer >= 2; the extension-field orders gamma_m(q^d)
/// used by the generating functions go through this overload.
class GammaTable {
 public:
  GammaTable(const BigInt& base, std::size_t max_n);
  GammaTable(const PrimePower& q, std::size_t max_n) : GammaTable(q.big(), max_n) {}

  const BigInt& base() const noexcept { return base_; }
  std::size_t max_n() const noexcept { return values_.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return values_.at(n); }
  std::span<const BigInt> values() const noexcept { return values_; }

 private:
  BigInt base_;
  std::vector<BigInt> values_;
};

BigInt gamma(const BigInt& q, std::size_t n);
inline BigInt gamma(const PrimePower& q, std::size_t n) { return gamma(q.big(), n); }

/// q^{n^2}
BigInt all_matrices(const PrimePower& q, std::size_t n);

/// [i]_q = 1 + q + ... + q^{i-1}
BigInt q_int(const PrimePower& q, std::size_t i);
/// [n]_q! with [0]_q! = 1
BigInt q_factorial(const PrimePower& q, std::size_t n);

/// Number of complete flags, computed as gamma_n / ((q-1)^n q^{C(n,2)}),
/// the stabilizer-quotient route; equals q_factorial.
BigInt complete_flags(const PrimePower& q, std::size_t n);

/// Number of k-dimensional subspaces of F_q^n; 0 outside 0 <= k <= n.
BigInt gaussian_binomial(const PrimePower& q, std::int64_t n, std::int64_t k);

/// [n]_q! / prod [n_i]_q! with n = sum(parts).
BigInt q_multinomial(const PrimePower& q, std::span<const std::size_t> parts);

BigInt subspace_total(const PrimePower& q, std::size_t n);

/// m x n matrices of rank k; 0 if k > min(m, n).
BigInt rank_count(const PrimePower& q, std::size_t m, std::size_t n, std::size_t k);

/// Unordered direct-sum splittings of F_q^n into k nonzero subspaces, by
/// summing gamma_n / prod gamma_{n_i} over compositions and dividing by k!.
BigInt q_stirling(const PrimePower& q, std::size_t n, std::size_t k);
BigInt q_bell(const PrimePower& q, std::size_t n);

/// Matrices with P^2 = P: sum_i gamma_n / (gamma_i gamma_{n-i}).
BigInt projection_count(const PrimePower& q, std::size_t n);

/// Matrices diagonalizable over F_q: multinomial sum over weak compositions
/// of n into q parts.
BigInt diagonalizable_count(const PrimePower& q, std::size_t n);

/// Solutions of A^2 = I over a field of characteristic 2. Throws CharNotTwo otherwise.
BigInt involution_count_char2(const PrimePower& q, std::size_t n);

/// q^{n(n-1)}
BigInt nilpotent_count(const PrimePower& q, std::size_t n);

/// Invertible matrices without eigenvalue 1, by the first-order recursion
/// e_n = e_{n-1}(q^n - 1)q^{n-1} + (-1)^n q^{n(n-1)/2}, e_0 = 1.
BigInt linear_derangement_recursive(const PrimePower& q, std::size_t n);
/// a_n = e_n / q^{n(n-1)/2} from a_n = a_{n-1}(q^n - 1) + (-1)^n, a_0 = 1.
BigInt linear_derangement_reduced(const PrimePower& q, std::size_t n);
/// e_n recovered from the reduced recursion.
BigInt linear_derangement_via_reduced(const PrimePower& q, std::size_t n);

/// Square-free monic polynomials of degree n: q for n = 1, q^n - q^{n-1} for n >= 2.
BigInt separable_class_count(const PrimePower& q, std::size_t n);

}  // namespace qmc
