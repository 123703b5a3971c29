#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmc/bigint.hpp"
#include "qmc/exact_series.hpp"
#include "qmc/oracle.hpp"
#include "qmc/qcount.hpp"

namespace qmc::cli {

struct SequenceInfo {
  std::string_view name;
  std::string_view description;
  std::size_t min_n;
  bool needs_k;
  bool triangle;
};

/// Every sequence the CLI can produce, in display order.
const std::vector<SequenceInfo>& sequence_catalog();
const SequenceInfo* find_sequence(std::string_view name);

struct OeisRef {
  std::string id;
  std::int64_t offset;
};

/// OEIS entry for the given parameters, when one is known.
std::optional<OeisRef> oeis_for(std::string_view name, const PrimePower& q, std::optional<std::int64_t> k);

struct SequenceSpec {
  std::string name;
  PrimePower q{2, 1};
  std::optional<std::int64_t> k;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::optional<std::string> oeis_id;
  /// Index attached to the first emitted value.
  std::int64_t oeis_offset = 0;
};

struct ComputeOptions {
  std::size_t order = kDefaultOrder;
  std::uint64_t oracle_budget = oracle::kDefaultBudget;
  std::uint64_t pair_budget = oracle::kDefaultPairBudget;
  unsigned jobs = 1;
};

/// a(n) for one non-triangle sequence.
BigInt compute_term(std::string_view name, const PrimePower& q, std::optional<std::int64_t> k,
                    std::size_t n, const ComputeOptions& opts = {});

/// Row n of a triangle sequence (qbinom_row: k = 0..n, qstirling_row: k = 1..n,
/// rank_row: k = 0..n).
std::vector<BigInt> compute_row(std::string_view name, const PrimePower& q, std::size_t n);

/// Values for spec.n_min..spec.n_max. Triangles are flattened row by row, or
/// restricted to column spec.k when it is set.
std::vector<BigInt> compute_values(const SequenceSpec& spec, const ComputeOptions& opts = {});

/// Fills oeis_id and the index of the first value from the range and the catalog.
SequenceSpec make_spec(std::string name, const PrimePower& q, std::optional<std::int64_t> k,
                       std::size_t n_min, std::size_t n_max);

std::string emit_plain(const std::vector<BigInt>& values);
/// "<index> <value>\n" per term, index starting at spec.oeis_offset.
std::string emit_bfile(const SequenceSpec& spec, const std::vector<BigInt>& values);
/// Inverse of emit_bfile; ignores blank lines and '#' comments.
std::vector<std::pair<std::int64_t, BigInt>> parse_bfile(std::string_view text);
/// {"sequence","q","k","offset","oeis","values"} with values as decimal strings.
std::string emit_json(const SequenceSpec& spec, const std::vector<BigInt>& values);

}  // namespace qmc::cli
