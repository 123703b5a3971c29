#include "qmc/sequences.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "qmc/errors.hpp"
#include "qmc/gfengine.hpp"

namespace qmc::cli {

const std::vector<SequenceInfo>& sequence_catalog() {
  static const std::vector<SequenceInfo> catalog{
      {"all", "all n x n matrices, q^(n^2)", 0, false, false},
      {"invertible", "invertible matrices, |GL_n(q)|", 0, false, false},
      {"subspaces_total", "all subspaces of F_q^n", 0, false, false},
      {"qbinom_row", "Gaussian binomial triangle, k = 0..n", 0, false, true},
      {"qstirling_row", "q-Stirling triangle (direct-sum splittings), k = 1..n", 1, false, true},
      {"qbell", "q-Bell numbers (all splittings)", 1, false, false},
      {"qfactorial", "q-factorial [n]_q! (complete flags)", 0, false, false},
      {"rank_row", "n x n matrices by rank, k = 0..n", 0, false, true},
      {"lin_derangement", "linear derangements (no eigenvalue 0 or 1)", 0, false, false},
      {"proj_derangement", "projective derangements (no eigenvalue in F_q)", 0, false, false},
      {"diagonalizable", "matrices diagonalizable over F_q", 0, false, false},
      {"projection", "projections, P^2 = P", 0, false, false},
      {"power_identity", "solutions of A^k = I", 0, true, false},
      {"nilpotent", "nilpotent matrices", 0, false, false},
      {"cyclic", "cyclic (regular) matrices", 0, false, false},
      {"semisimple", "semi-simple matrices", 0, false, false},
      {"separable", "separable matrices (square-free characteristic polynomial)", 0, false, false},
      {"separable_classes", "conjugacy classes of separable matrices", 1, false, false},
      {"conjclasses_all", "conjugacy classes of M_n(q)", 0, false, false},
      {"conjclasses_gl", "conjugacy classes of GL_n(q)", 0, false, false},
      {"min_centralizer", "minimal centralizer order in GL_n(q) (exhaustive)", 1, false, false},
      {"max_class", "largest conjugacy class in GL_n(q) (exhaustive)", 1, false, false},
  };
  return catalog;
}

const SequenceInfo* find_sequence(std::string_view name) {
  const auto& c = sequence_catalog();
  const auto it = std::find_if(c.begin(), c.end(), [&](const SequenceInfo& s) { return s.name == name; });
  return it == c.end() ? nullptr : &*it;
}

namespace {

std::string a_number(int n) {
  std::ostringstream os;
  os << 'A' << std::string(6 - std::to_string(n).size(), '0') << n;
  return os.str();
}

}  // namespace

std::optional<OeisRef> oeis_for(std::string_view name, const PrimePower& q, std::optional<std::int64_t> k) {
  const std::int64_t Q = q.q();
  if (name == "all" && Q == 2) return OeisRef{"A002416", 0};
  if (name == "invertible" && Q == 2) return OeisRef{"A002884", 0};
  if (name == "subspaces_total" && Q >= 2 && Q <= 8) return OeisRef{a_number(6114 + static_cast<int>(Q)), 0};
  if (name == "qbinom_row" && Q <= 24) return OeisRef{a_number(22164 + static_cast<int>(Q)), 0};
  if (name == "qfactorial" && Q == 2) return OeisRef{"A005329", 0};
  if (name == "lin_derangement" && Q == 2) return OeisRef{"A002820", 2};
  if (name == "projection" && Q == 3) return OeisRef{"A053846", 0};
  if (name == "nilpotent" && Q == 2) return OeisRef{"A053763", 0};
  if (name == "conjclasses_all" && Q == 2) return OeisRef{"A070933", 0};
  if (name == "conjclasses_gl") {
    static const std::map<std::int64_t, const char*> ids{
        {2, "A006951"}, {3, "A006952"}, {4, "A049314"}, {5, "A049315"}, {7, "A049316"}};
    if (auto it = ids.find(Q); it != ids.end()) return OeisRef{it->second, 0};
  }
  if (name == "min_centralizer" && Q == 2) return OeisRef{"A082877", 1};
  if (name == "max_class" && Q == 2) return OeisRef{"A070731", 1};
  if (name == "power_identity" && k) {
    // Solutions of A^k = I for small k and q.
    static const std::map<std::pair<std::int64_t, std::int64_t>, int> ids{
        {{2, 2}, 53722},  {{3, 2}, 53725},  {{4, 2}, 53718},  {{5, 2}, 53770},  {{6, 2}, 53771},
        {{7, 2}, 53772},  {{8, 2}, 53773},  {{9, 2}, 53774},  {{10, 2}, 53775}, {{11, 2}, 53776},
        {{12, 2}, 53777}, {{2, 3}, 53846},  {{3, 3}, 53847},  {{4, 3}, 53848},  {{5, 3}, 53849},
        {{6, 3}, 53851},  {{7, 3}, 53852},  {{8, 3}, 53853},  {{9, 3}, 53854},  {{10, 3}, 53855},
        {{2, 4}, 53856},  {{3, 4}, 53857},  {{4, 4}, 53859},  {{5, 4}, 53860},  {{6, 4}, 53861},
        {{7, 4}, 53862},  {{8, 4}, 53863},
    };
    if (auto it = ids.find({*k, Q}); it != ids.end()) return OeisRef{a_number(it->second), 0};
  }
  return std::nullopt;
}

namespace {

BigInt power_identity_term(const PrimePower& q, std::int64_t k, std::size_t n, const ComputeOptions& opts) {
  if (k % q.p() == 0) {
    if (k == 2 && q.p() == 2) return involution_count_char2(q, n);
    throw BadKindParams("A^" + std::to_string(k) + " = I over F_" + std::to_string(q.q()) +
                        " has no closed form here: the characteristic divides k (only k = 2 in "
                        "characteristic 2 is supported)");
  }
  const std::size_t order = std::max(opts.order, n);
  return extract_count(gf_build(GFKind::power_identity(k), q, order), n, q, true);
}

BigInt gf_term(GFTag tag, const PrimePower& q, std::size_t n, const ComputeOptions& opts) {
  const GFKind kind{tag};
  const std::size_t order = std::max<std::size_t>({opts.order, n, 1});
  return extract_count(gf_build(kind, q, order), n, q, kind.normalized());
}

}  // namespace

BigInt compute_term(std::string_view name, const PrimePower& q, std::optional<std::int64_t> k,
                    std::size_t n, const ComputeOptions& opts) {
  const SequenceInfo* info = find_sequence(name);
  if (!info) throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
  if (info->triangle) throw std::invalid_argument(std::string(name) + " is a triangle; use compute_row");
  if (n < info->min_n) {
    throw std::invalid_argument(std::string(name) + " is defined for n >= " + std::to_string(info->min_n));
  }
  if (name == "all") return all_matrices(q, n);
  if (name == "invertible") return gamma(q, n);
  if (name == "subspaces_total") return subspace_total(q, n);
  if (name == "qbell") return q_bell(q, n);
  if (name == "qfactorial") return q_factorial(q, n);
  if (name == "lin_derangement") return linear_derangement_recursive(q, n);
  if (name == "proj_derangement") return gf_term(GFTag::projective_derangement, q, n, opts);
  if (name == "diagonalizable") return diagonalizable_count(q, n);
  if (name == "projection") return projection_count(q, n);
  if (name == "power_identity") {
    if (!k) throw std::invalid_argument("power_identity needs --k");
    return power_identity_term(q, *k, n, opts);
  }
  if (name == "nilpotent") return nilpotent_count(q, n);
  if (name == "cyclic") return gf_term(GFTag::cyclic, q, n, opts);
  if (name == "semisimple") return gf_term(GFTag::semisimple, q, n, opts);
  if (name == "separable") return gf_term(GFTag::separable, q, n, opts);
  if (name == "separable_classes") return separable_class_count(q, n);
  if (name == "conjclasses_all") return gf_term(GFTag::conjclasses_all, q, n, opts);
  if (name == "conjclasses_gl") return gf_term(GFTag::conjclasses_gl, q, n, opts);
  if (name == "min_centralizer" || name == "max_class") {
    const auto field = oracle::make_field(q);
    return name == "min_centralizer" ? BigInt(oracle::min_centralizer_order(field, n, opts.pair_budget))
                                     : BigInt(oracle::max_class_size(field, n, opts.pair_budget));
  }
  throw std::logic_error("sequence without a route: " + std::string(name));
}

std::vector<BigInt> compute_row(std::string_view name, const PrimePower& q, std::size_t n) {
  std::vector<BigInt> row;
  if (name == "qbinom_row") {
    for (std::size_t k = 0; k <= n; ++k)
      row.push_back(gaussian_binomial(q, static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
  } else if (name == "qstirling_row") {
    for (std::size_t k = 1; k <= n; ++k) row.push_back(q_stirling(q, n, k));
  } else if (name == "rank_row") {
    for (std::size_t k = 0; k <= n; ++k) row.push_back(rank_count(q, n, n, k));
  } else {
    throw std::invalid_argument("'" + std::string(name) + "' is not a triangle");
  }
  return row;
}

namespace {

BigInt triangle_cell(std::string_view name, const PrimePower& q, std::size_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
  const auto uk = static_cast<std::size_t>(k);
  if (name == "qbinom_row") return gaussian_binomial(q, static_cast<std::int64_t>(n), k);
  if (name == "qstirling_row") return q_stirling(q, n, uk);
  return rank_count(q, n, n, uk);
}

// Entries in rows before `row` of a flattened triangle.
std::int64_t entries_before(std::string_view name, std::size_t row) {
  const auto r = static_cast<std::int64_t>(row);
  if (name == "qstirling_row") return r * (r - 1) / 2;  // rows 1..r-1 have 1..r-1 entries
  return r * (r + 1) / 2;
}

}  // namespace

std::vector<BigInt> compute_values(const SequenceSpec& spec, const ComputeOptions& opts) {
  const SequenceInfo* info = find_sequence(spec.name);
  if (!info) throw std::invalid_argument("unknown sequence '" + spec.name + "'");
  std::vector<BigInt> values;
  if (spec.n_max < spec.n_min) return values;
  for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
    if (!info->triangle) {
      values.push_back(compute_term(spec.name, spec.q, spec.k, n, opts));
    } else if (spec.k) {
      values.push_back(triangle_cell(spec.name, spec.q, n, *spec.k));
    } else {
      for (BigInt& v : compute_row(spec.name, spec.q, n)) values.push_back(std::move(v));
    }
  }
  return values;
}

SequenceSpec make_spec(std::string name, const PrimePower& q, std::optional<std::int64_t> k,
                       std::size_t n_min, std::size_t n_max) {
  const SequenceInfo* info = find_sequence(name);
  if (!info) throw std::invalid_argument("unknown sequence '" + name + "'");
  SequenceSpec spec;
  spec.name = std::move(name);
  spec.q = q;
  spec.k = k;
  spec.n_min = n_min;
  spec.n_max = n_max;
  const auto oeis = oeis_for(spec.name, q, info->triangle ? std::nullopt : k);
  if (oeis && !(info->triangle && k)) spec.oeis_id = oeis->id;
  spec.oeis_offset = (info->triangle && !k) ? entries_before(spec.name, n_min) : static_cast<std::int64_t>(n_min);
  return spec;
}

std::string emit_plain(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += values[i].str();
  }
  return out;
}

std::string emit_bfile(const SequenceSpec& spec, const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(spec.oeis_offset + static_cast<std::int64_t>(i));
    out += ' ';
    out += values[i].str();
    out += '\n';
  }
  return out;
}

std::vector<std::pair<std::int64_t, BigInt>> parse_bfile(std::string_view text) {
  std::vector<std::pair<std::int64_t, BigInt>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::int64_t index = 0;
    std::string value;
    if (!(fields >> index >> value)) throw std::invalid_argument("malformed b-file line: " + line);
    out.emplace_back(index, BigInt(value));
  }
  return out;
}

std::string emit_json(const SequenceSpec& spec, const std::vector<BigInt>& values) {
  nlohmann::ordered_json j;
  j["sequence"] = spec.name;
  j["q"] = spec.q.q();
  j["k"] = spec.k ? nlohmann::ordered_json(*spec.k) : nlohmann::ordered_json(nullptr);
  j["offset"] = spec.oeis_offset;
  j["oeis"] = spec.oeis_id ? nlohmann::ordered_json(*spec.oeis_id) : nlohmann::ordered_json(nullptr);
  auto arr = nlohmann::ordered_json::array();
  for (const BigInt& v : values) arr.push_back(v.str());
  j["values"] = std::move(arr);
  return j.dump();
}

}  // namespace qmc::cli
