#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qmc/bigint.hpp"

namespace qmc {

inline constexpr std::size_t kDefaultOrder = 16;

/// Formal power series in u truncated after u^order, with exact rational
/// coefficients. Binary operations between series of different orders
/// truncate to the smaller order.
class TruncSeries {
 public:
  /// The zero series of the given order.
  explicit TruncSeries(std::size_t order = kDefaultOrder);

  /// Takes coefficients c_0..c_N; the order becomes N. Must be non-empty.
  explicit TruncSeries(std::vector<ExactRational> coeffs);

  static TruncSeries constant(const ExactRational& c, std::size_t order);
  static TruncSeries one(std::size_t order) { return constant(1, order); }
  /// c·u^power, which is the zero series if power > order.
  static TruncSeries monomial(const ExactRational& c, std::size_t power, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  /// Coefficient of u^i; zero for i beyond the order.
  const ExactRational& operator[](std::size_t i) const;
  std::span<const ExactRational> coeffs() const noexcept { return coeffs_; }

  TruncSeries truncated(std::size_t order) const;
  bool is_zero() const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const TruncSeries& rhs);
  TruncSeries& operator*=(const ExactRational& scalar);

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<ExactRational> coeffs_;
};

TruncSeries operator+(TruncSeries a, const TruncSeries& b);
TruncSeries operator-(TruncSeries a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(TruncSeries a, const ExactRational& s);
TruncSeries operator*(const ExactRational& s, TruncSeries a);

/// Multiplicative inverse. Throws ZeroConstantTerm when a[0] == 0.
TruncSeries reciprocal(const TruncSeries& a);

/// sum_{k=0}^{N} a^k / k!. Throws NonzeroConstantTerm when a[0] != 0.
TruncSeries exp(const TruncSeries& a);

/// a^k by square-and-multiply; a^0 is 1.
TruncSeries pow(const TruncSeries& a, const BigInt& k);
inline TruncSeries pow(const TruncSeries& a, std::uint64_t k) { return pow(a, BigInt(k)); }

/// Substitute u <- u^d, keeping the original order.
TruncSeries dilate(const TruncSeries& a, std::size_t d);

/// 1 / (1 - c u^d) = sum_j c^j u^{jd}.
TruncSeries geometric(const ExactRational& c, std::size_t d, std::size_t order);

std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

}  // namespace qmc
