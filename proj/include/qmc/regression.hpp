#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qmc::cli {

/// Published reference values used by `qmc verify`.
struct RegressionEntry {
  std::string_view sequence;
  std::int64_t q;
  std::optional<std::int64_t> k;
  /// First n; for triangles, the first row.
  std::size_t n_start;
  /// Plain values, or flattened rows for triangles.
  std::vector<std::string_view> values;
  std::string_view source;
  /// Terms printed wrongly at the source: (n, correct value).
  std::vector<std::pair<std::size_t, std::string_view>> corrections = {};
};

const std::vector<RegressionEntry>& regression_table();

}  // namespace qmc::cli
