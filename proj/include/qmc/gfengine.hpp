#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmc/bigint.hpp"
#include "qmc/exact_series.hpp"
#include "qmc/qcount.hpp"

namespace qmc {

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts descending; throws std::invalid_argument on a part <= 0.
  explicit Partition(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
  std::int64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }
  /// Number of parts equal to i.
  std::int64_t multiplicity(std::int64_t i) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t size_ = 0;
};

/// All partitions of n in reverse-lexicographic order: [n], [n-1,1], ..., [1^n].
std::vector<Partition> partitions_of(std::int64_t n);

/// Order of the automorphism group of the module (+)_j F_q[z]/(phi^{lam_j}),
/// where qd = q^{deg phi}.
BigInt kung_centralizer_order(const BigInt& qd, const Partition& lam);

/// prod_{r >= 1} (1 - u^d / q^{rd})^{-1} truncated at `order`.
TruncSeries euler_inverse_factor(const PrimePower& q, std::size_t d, std::size_t order);

/// prod_{d=1}^{order} factor(d)^{nu_d}. Each factor(d) must have constant term 1.
TruncSeries nu_weighted_product(const PrimePower& q,
                                const std::function<TruncSeries(std::size_t)>& factor,
                                std::size_t order);

enum class GFTag {
  invertible_check,
  linear_derangement,
  projective_derangement,
  diagonalizable,
  projection,
  power_identity,
  cyclic,
  cyclic_alt,
  semisimple,
  separable,
  separable_alt,
  conjclasses_all,
  conjclasses_gl,
  bell,
};

struct GFKind {
  GFTag tag;
  /// Exponent k for power_identity; unused otherwise.
  std::int64_t k = 0;

  static GFKind power_identity(std::int64_t k) { return {GFTag::power_identity, k}; }

  /// Normalized kinds encode a_n / gamma_n; the rest are ordinary series.
  bool normalized() const noexcept {
    return tag != GFTag::conjclasses_all && tag != GFTag::conjclasses_gl;
  }
};

std::string to_string(GFTag tag);
std::optional<GFTag> parse_gf_tag(const std::string& name);

/// Generating function of the given kind truncated at `order` (>= 1).
/// Throws BadKindParams for power_identity with k < 1 or p | k.
TruncSeries gf_build(const GFKind& kind, const PrimePower& q, std::size_t order);

/// gamma_n * [u^n] gf when normalized, [u^n] gf otherwise. Throws
/// NonIntegralCount unless the result is a non-negative integer.
BigInt extract_count(const TruncSeries& gf, std::size_t n, const PrimePower& q, bool normalized);

/// Counts for n = 0..max_n of a kind, built at order max(order, max_n).
std::vector<BigInt> gf_counts(const GFKind& kind, const PrimePower& q, std::size_t max_n,
                              std::size_t order = kDefaultOrder);

/// gamma_n [u^n] (sum_{r>=1} u^r / gamma_r)^k / k!.
BigInt q_stirling_via_gf(const PrimePower& q, std::size_t n, std::size_t k);

enum class LimitKind {
  invertible,               // prod (1 - q^-r)
  linear_derangement_frac,  // prod (1 - q^-r)^2
  projective_frac,          // prod (1 - q^-r)^q
  cyclic,                   // (1 - q^-5) prod_{r>=3} (1 - q^-r)
  conj_ratio,               // prod (1 - q^-r)^-1
};

std::string to_string(LimitKind kind);
std::optional<LimitKind> parse_limit_kind(const std::string& name);

/// Decimal expansion of the limiting constant truncated (not rounded) to
/// `digits` places after the point, digits in 1..50.
std::string limit_eval(LimitKind kind, const PrimePower& q, int digits);

}  // namespace qmc
