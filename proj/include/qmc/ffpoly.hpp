#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qmc/bigint.hpp"
#include "qmc/qcount.hpp"

namespace qmc {

// ---------------------------------------------------------------------------
// Number theory
// ---------------------------------------------------------------------------

int moebius(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);

/// Number of monic irreducible polynomials of degree d over F_q.
BigInt nu_irreducible(const PrimePower& q, std::size_t d);

/// Least t >= 1 with q^t = 1 mod m. Throws NotCoprime if gcd(q, m) > 1.
std::int64_t mult_order(std::int64_t q, std::int64_t m);

/// Degrees of the distinct irreducible factors of z^k - 1 over F_q, sorted
/// ascending. Throws NotCoprime when p divides k.
std::vector<std::int64_t> cyclotomic_factor_type(const PrimePower& q, std::int64_t k);

// ---------------------------------------------------------------------------
// Finite fields
// ---------------------------------------------------------------------------

/// Field element, encoded as an integer 0..q-1 whose base-p digits are the
/// coefficients of its residue polynomial (constant term least significant).
using Element = std::uint8_t;

/// Polynomial over a finite field, constant term first, no trailing zeros.
/// The zero polynomial has no coefficients.
struct FqPoly {
  std::vector<Element> coeffs;

  FqPoly() = default;
  explicit FqPoly(std::vector<Element> c);

  bool is_zero() const noexcept { return coeffs.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs.size()) - 1; }
  Element lead() const { return coeffs.back(); }

  friend bool operator==(const FqPoly&, const FqPoly&) = default;
};

/// F_{p^e} with dense operation tables. Immutable after construction.
class FieldSpec {
 public:
  /// Builds F_{p^e} using the lexicographically smallest monic irreducible
  /// of degree e (coefficients compared from the constant term upward).
  /// Supports q <= 256.
  static FieldSpec build(std::int64_t p, int e);
  static FieldSpec build(const PrimePower& q) { return build(q.p(), q.e()); }

  const PrimePower& order() const noexcept { return q_; }
  std::int64_t q() const noexcept { return q_.q(); }
  std::int64_t p() const noexcept { return q_.p(); }
  /// Defining polynomial over F_p (monic, degree e). For e = 1 this is z.
  const std::vector<std::int64_t>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const { return add_[index(a, b)]; }
  Element sub(Element a, Element b) const { return sub_[index(a, b)]; }
  Element mul(Element a, Element b) const { return mul_[index(a, b)]; }
  Element neg(Element a) const { return sub_[index(0, a)]; }
  /// Inverse of a nonzero element.
  Element inv(Element a) const;
  /// Image of the integer m in the prime subfield.
  Element from_int(std::int64_t m) const;

 private:
  FieldSpec(PrimePower q, std::vector<std::int64_t> modulus);
  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_.q()) + b;
  }

  PrimePower q_;
  std::vector<std::int64_t> modulus_;
  std::vector<Element> add_;
  std::vector<Element> sub_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
};

inline FieldSpec build_field(std::int64_t p, int e) { return FieldSpec::build(p, e); }

/// True when the monic polynomial over F_p (coefficients constant-first) has
/// no monic divisor of degree 1..deg-1.
bool is_irreducible_over_prime(std::span<const std::int64_t> monic, std::int64_t p);

FqPoly poly_add(const FqPoly& a, const FqPoly& b, const FieldSpec& f);
FqPoly poly_sub(const FqPoly& a, const FqPoly& b, const FieldSpec& f);
FqPoly poly_mul(const FqPoly& a, const FqPoly& b, const FieldSpec& f);
FqPoly poly_scale(const FqPoly& a, Element c, const FieldSpec& f);
/// Quotient and remainder; throws ZeroPolynomial for a zero divisor.
std::pair<FqPoly, FqPoly> poly_divmod(const FqPoly& a, const FqPoly& b, const FieldSpec& f);
FqPoly poly_monic(const FqPoly& a, const FieldSpec& f);
/// Monic gcd. Throws ZeroPolynomial when both inputs are zero.
FqPoly poly_gcd(const FqPoly& a, const FqPoly& b, const FieldSpec& f);
FqPoly poly_derivative(const FqPoly& a, const FieldSpec& f);
/// gcd(a, a') == 1. Throws ZeroPolynomial for a == 0.
bool squarefree_test(const FqPoly& a, const FieldSpec& f);
Element poly_eval(const FqPoly& a, Element x, const FieldSpec& f);

std::ostream& operator<<(std::ostream& os, const FqPoly& a);

}  // namespace qmc
