#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qmc/ffpoly.hpp"

/// Exhaustive ground truth: every n x n matrix over a small field is
/// enumerated and tested against the defining predicate of each class.
namespace qmc::oracle {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultPairBudget = std::uint64_t{1} << 28;
inline constexpr std::size_t kDefaultMaxPower = 12;

using FieldPtr = std::shared_ptr<const FieldSpec>;

inline FieldPtr make_field(const PrimePower& q) {
  return std::make_shared<const FieldSpec>(FieldSpec::build(q));
}

/// Row-major base-q digits of a matrix, entry (0,0) least significant.
struct MatrixCode {
  std::uint64_t value = 0;
  friend bool operator==(MatrixCode, MatrixCode) = default;
};

class FqMatrix {
 public:
  /// Zero matrix; n >= 1.
  FqMatrix(FieldPtr field, std::size_t n);

  static FqMatrix identity(FieldPtr field, std::size_t n);
  static FqMatrix decode(FieldPtr field, std::size_t n, MatrixCode code);
  static FqMatrix from_entries(FieldPtr field, std::size_t n, std::vector<Element> entries);
  MatrixCode encode() const;

  std::size_t n() const noexcept { return n_; }
  const FieldSpec& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }

  Element operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  std::span<const Element> entries() const noexcept { return entries_; }
  std::span<Element> entries() noexcept { return entries_; }

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Element> entries_;
};

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
FqMatrix operator-(const FqMatrix& a, const FqMatrix& b);
FqMatrix matrix_pow(const FqMatrix& a, std::uint64_t k);

std::size_t rank(const FqMatrix& a);
std::optional<FqMatrix> inverse(const FqMatrix& a);

/// det(zI - A), by cofactor expansion over F_q[z].
FqPoly char_poly(const FqMatrix& a);
/// Lowest-degree monic polynomial with m(A) = 0.
FqPoly min_poly(const FqMatrix& a);

/// Visits every n x n matrix exactly once in MatrixCode order.
class MatrixRange {
 public:
  class iterator {
   public:
    using value_type = FqMatrix;
    using difference_type = std::ptrdiff_t;
    using reference = const FqMatrix&;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(FqMatrix start, std::uint64_t code, std::uint64_t end);

    reference operator*() const { return *current_; }
    const FqMatrix* operator->() const { return &*current_; }
    MatrixCode code() const noexcept { return {code_}; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.code_ == b.code_; }

   private:
    std::optional<FqMatrix> current_;
    std::uint64_t code_ = 0;
    std::uint64_t end_ = 0;
  };

  MatrixRange(FieldPtr field, std::size_t n, std::uint64_t first, std::uint64_t last);

  iterator begin() const;
  iterator end() const;
  std::uint64_t size() const noexcept { return last_ - first_; }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// q^{n^2}, or BudgetExceeded if that exceeds `budget`.
std::uint64_t matrix_count_within(const FieldSpec& field, std::size_t n, std::uint64_t budget);

/// All n x n matrices. Throws BudgetExceeded when q^{n^2} > budget.
MatrixRange enumerate(FieldPtr field, std::size_t n, std::uint64_t budget = kDefaultBudget);

enum class Property {
  invertible,
  nilpotent,
  projection,
  linear_derangement,
  projective_derangement,
  diagonalizable,
  cyclic,
  semisimple,
  separable,
};
inline constexpr std::size_t kPropertyCount = 9;
const char* to_string(Property p);

struct Classification {
  std::size_t rank = 0;
  std::array<bool, kPropertyCount> flags{};
  /// power_identity[k] is A^k == I for k = 0..max_power.
  std::vector<bool> power_identity;
  FqPoly char_poly;
  FqPoly min_poly;

  bool has(Property p) const { return flags[static_cast<std::size_t>(p)]; }
};

Classification classify(const FqMatrix& a, std::size_t max_power = kDefaultMaxPower);

/// Cross-checks implications that must hold between the flags of one matrix.
bool consistent(const Classification& c, const FqMatrix& a);

struct Census {
  std::uint64_t total = 0;
  std::array<std::uint64_t, kPropertyCount> counts{};
  std::vector<std::uint64_t> by_rank;            // index k = rank
  std::vector<std::uint64_t> power_identity;     // index k = #{A : A^k = I}
  std::uint64_t inconsistent = 0;

  std::uint64_t count(Property p) const { return counts[static_cast<std::size_t>(p)]; }
};

struct SweepOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  std::size_t max_power = kDefaultMaxPower;
};

/// Classifies every matrix once and tallies every flag. Results do not
/// depend on `jobs`.
Census census(const FieldPtr& field, std::size_t n, const SweepOptions& opts = {});

std::uint64_t count_matching(const FieldPtr& field, std::size_t n,
                             const std::function<bool(const FqMatrix&)>& predicate,
                             const SweepOptions& opts = {});

struct OrbitCensus {
  std::uint64_t classes = 0;
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<std::uint64_t> centralizer_orders;
};

/// Orbits of M_n (or GL_n when restrict_gl) under conjugation by GL_n.
/// Throws BudgetExceeded unless gamma_n * q^{n^2} <= pair_budget.
OrbitCensus orbit_census(const FieldPtr& field, std::size_t n, bool restrict_gl,
                         std::uint64_t pair_budget = kDefaultPairBudget);

std::uint64_t conjugacy_class_count(const FieldPtr& field, std::size_t n, bool restrict_gl,
                                    std::uint64_t pair_budget = kDefaultPairBudget);

/// min over A in GL_n of |C(A)|. Throws BudgetExceeded unless gamma_n^2 <= pair_budget.
std::uint64_t min_centralizer_order(const FieldPtr& field, std::size_t n,
                                    std::uint64_t pair_budget = kDefaultPairBudget);
/// gamma_n / min_centralizer_order.
std::uint64_t max_class_size(const FieldPtr& field, std::size_t n,
                             std::uint64_t pair_budget = kDefaultPairBudget);

}  // namespace qmc::oracle
