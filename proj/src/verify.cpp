#include "qmc/verify.hpp"

#include <algorithm>
#include <sstream>

#include "qmc/errors.hpp"
#include "qmc/gfengine.hpp"
#include "qmc/oracle.hpp"
#include "qmc/qcount.hpp"
#include "qmc/regression.hpp"

namespace qmc::cli {

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

void VerifyReport::append(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

void record(VerifyReport& r, std::string group, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back({std::move(group), std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
                      std::move(detail)});
}

void skip(VerifyReport& r, std::string group, std::string name, std::string detail) {
  r.checks.push_back({std::move(group), std::move(name), CheckStatus::skip, std::move(detail)});
}

std::string mismatch(const BigInt& got, const BigInt& want) {
  return "got " + got.str() + ", expected " + want.str();
}

void expect_eq(VerifyReport& r, const std::string& group, const std::string& name, const BigInt& got,
               const BigInt& want) {
  record(r, group, name, got == want, got == want ? std::string{} : mismatch(got, want));
}

std::string label(std::string_view seq, std::int64_t q, std::optional<std::int64_t> k) {
  std::string s = std::string(seq) + " q=" + std::to_string(q);
  if (k) s += " k=" + std::to_string(*k);
  return s;
}

// Reference values of a sequence that the exhaustive routes cannot reach
// under the pair budget still have to agree with each other.
void centralizer_consistency(VerifyReport& r) {
  const auto& table = regression_table();
  auto find = [&](std::string_view name) {
    return std::find_if(table.begin(), table.end(),
                        [&](const RegressionEntry& e) { return e.sequence == name && e.q == 2; });
  };
  const auto mc = find("min_centralizer");
  const auto mx = find("max_class");
  if (mc == table.end() || mx == table.end()) return;
  const PrimePower two(2, 1);
  for (std::size_t i = 0; i < mx->values.size(); ++i) {
    const std::size_t n = mx->n_start + i;
    const std::size_t j = n - mc->n_start;
    if (j >= mc->values.size()) break;
    const BigInt size(std::string(mx->values[i]));
    const BigInt cent(std::string(mc->values[j]));
    record(r, "regression", "gamma_n = max_class * min_centralizer q=2 n=" + std::to_string(n),
           size * cent == gamma(two, n), mismatch(size * cent, gamma(two, n)));
  }
}

}  // namespace

VerifyReport regression_checks(const VerifyOptions& opts) {
  VerifyReport r;
  for (const RegressionEntry& e : regression_table()) {
    const PrimePower q = PrimePower::from_value(e.q);
    const SequenceInfo* info = find_sequence(e.sequence);
    const std::string name = label(e.sequence, e.q, e.k);
    if (info->triangle) {
      std::size_t idx = 0;
      bool ok = true;
      std::string detail;
      for (std::size_t n = e.n_start; idx < e.values.size(); ++n) {
        for (const BigInt& v : compute_row(e.sequence, q, n)) {
          if (idx >= e.values.size()) break;
          const BigInt want(std::string(e.values[idx]));
          if (ok && v != want) {
            ok = false;
            detail = "row " + std::to_string(n) + ": " + mismatch(v, want);
          }
          ++idx;
        }
      }
      record(r, "regression", name, ok, detail);
      continue;
    }
    for (std::size_t i = 0; i < e.values.size(); ++i) {
      const std::size_t n = e.n_start + i;
      BigInt want(std::string(e.values[i]));
      std::string term = name + " n=" + std::to_string(n);
      for (const auto& [cn, value] : e.corrections) {
        if (cn == n) {
          want = BigInt(std::string(value));
          term += " (printed " + std::string(e.values[i]) + ", corrected)";
        }
      }
      try {
        expect_eq(r, "regression", term, compute_term(e.sequence, q, e.k, n, opts.compute), want);
      } catch (const BudgetExceeded& ex) {
        skip(r, "regression", term, ex.what());
      }
    }
  }
  centralizer_consistency(r);
  return r;
}

VerifyReport cross_route_checks(const VerifyOptions& opts) {
  VerifyReport r;
  const std::size_t N = opts.cross_max_n;
  const std::string g = "cross-route";
  for (std::int64_t qv : opts.cross_q) {
    const PrimePower q = PrimePower::from_value(qv);
    const std::string qs = " q=" + std::to_string(qv);
    auto counts = [&](GFKind kind) { return gf_counts(kind, q, N, std::max(opts.compute.order, N)); };

    const auto proj = counts({GFTag::projection});
    const auto diag = counts({GFTag::diagonalizable});
    const auto lind = counts({GFTag::linear_derangement});
    const auto cyc = counts({GFTag::cyclic});
    const auto cyc_alt = counts({GFTag::cyclic_alt});
    const auto sep = counts({GFTag::separable});
    const auto sep_alt = counts({GFTag::separable_alt});
    const TruncSeries inv = gf_build({GFTag::invertible_check}, q, std::max<std::size_t>(N, 1));

    for (std::size_t n = 0; n <= N; ++n) {
      const std::string s = qs + " n=" + std::to_string(n);
      expect_eq(r, g, "projection formula vs gf" + s, projection_count(q, n), proj[n]);
      expect_eq(r, g, "diagonalizable formula vs gf" + s, diagonalizable_count(q, n), diag[n]);
      const BigInt e = linear_derangement_recursive(q, n);
      expect_eq(r, g, "linear derangement recursion vs gf" + s, e, lind[n]);
      expect_eq(r, g, "linear derangement recursion vs reduced" + s, e, linear_derangement_via_reduced(q, n));
      expect_eq(r, g, "cyclic vs complement form" + s, cyc[n], cyc_alt[n]);
      expect_eq(r, g, "separable vs complement form" + s, sep[n], sep_alt[n]);
      record(r, g, "invertible product is 1/(1-u)" + s, inv[n] == 1, "coefficient " + to_string(inv[n]));
      expect_eq(r, g, "complete flags vs q-factorial" + s, complete_flags(q, n), q_factorial(q, n));
      if (n >= 1) {
        expect_eq(r, g, "projections vs 2 + 2 S(n,2)" + s, projection_count(q, n),
                  2 + 2 * q_stirling(q, n, 2));
        const BigInt bell = extract_count(gf_build({GFTag::bell}, q, std::max<std::size_t>(N, 1)), n, q, true);
        expect_eq(r, g, "q-Bell sum vs gf" + s, q_bell(q, n), bell);
      }
      if (n <= 7) {
        for (std::size_t k = 1; k <= n; ++k) {
          expect_eq(r, g, "q-Stirling sum vs gf" + s + " k=" + std::to_string(k), q_stirling(q, n, k),
                    q_stirling_via_gf(q, n, k));
        }
      }
    }
    if (q.p() != 2) {
      const auto inv2 = counts(GFKind::power_identity(2));
      for (std::size_t n = 0; n <= N; ++n) {
        expect_eq(r, g, "involutions vs projections" + qs + " n=" + std::to_string(n), inv2[n], proj[n]);
      }
    }
  }
  return r;
}

namespace {

struct OracleCase {
  std::int64_t q;
  std::size_t max_n;
};

std::optional<BigInt> power_identity_expected(const PrimePower& q, std::int64_t k, std::size_t n) {
  if (k % q.p() != 0) return extract_count(gf_build(GFKind::power_identity(k), q, std::max<std::size_t>(n, 1)), n, q, true);
  if (k == 2 && q.p() == 2) return involution_count_char2(q, n);
  return std::nullopt;
}

void census_case(VerifyReport& r, const PrimePower& q, std::size_t n, const VerifyOptions& opts) {
  using oracle::Property;
  const std::string g = "oracle";
  const std::string s = " q=" + std::to_string(q.q()) + " n=" + std::to_string(n);
  oracle::Census c;
  try {
    c = oracle::census(oracle::make_field(q), n,
                       {opts.compute.oracle_budget, std::max(1u, opts.compute.jobs), oracle::kDefaultMaxPower});
  } catch (const BudgetExceeded& ex) {
    skip(r, g, "census" + s, ex.what());
    return;
  }
  auto gf = [&](GFTag tag) { return extract_count(gf_build({tag}, q, std::max<std::size_t>(n, 1)), n, q, true); };
  expect_eq(r, g, "all" + s, c.total, all_matrices(q, n));
  expect_eq(r, g, "invertible" + s, c.count(Property::invertible), gamma(q, n));
  expect_eq(r, g, "nilpotent" + s, c.count(Property::nilpotent), nilpotent_count(q, n));
  expect_eq(r, g, "projection" + s, c.count(Property::projection), projection_count(q, n));
  expect_eq(r, g, "linear derangement" + s, c.count(Property::linear_derangement),
            linear_derangement_recursive(q, n));
  expect_eq(r, g, "projective derangement" + s, c.count(Property::projective_derangement),
            gf(GFTag::projective_derangement));
  expect_eq(r, g, "diagonalizable" + s, c.count(Property::diagonalizable), diagonalizable_count(q, n));
  expect_eq(r, g, "cyclic" + s, c.count(Property::cyclic), gf(GFTag::cyclic));
  expect_eq(r, g, "semisimple" + s, c.count(Property::semisimple), gf(GFTag::semisimple));
  expect_eq(r, g, "separable" + s, c.count(Property::separable), gf(GFTag::separable));
  for (std::size_t k = 0; k <= n; ++k) {
    expect_eq(r, g, "rank " + std::to_string(k) + s, c.by_rank.at(k), rank_count(q, n, n, k));
  }
  for (std::int64_t k = 2; k <= 6; ++k) {
    if (auto want = power_identity_expected(q, k, n)) {
      expect_eq(r, g, "A^" + std::to_string(k) + " = I" + s, c.power_identity.at(static_cast<std::size_t>(k)),
                *want);
    }
  }
  record(r, g, "flag implications" + s, c.inconsistent == 0,
         std::to_string(c.inconsistent) + " inconsistent matrices");
}

void conjugacy_case(VerifyReport& r, const PrimePower& q, std::size_t n, const VerifyOptions& opts) {
  const std::string s = " q=" + std::to_string(q.q()) + " n=" + std::to_string(n);
  const auto field = oracle::make_field(q);
  for (bool gl : {false, true}) {
    const std::string name = std::string(gl ? "classes of GL" : "classes of M") + s;
    try {
      const std::uint64_t got = oracle::conjugacy_class_count(field, n, gl, opts.compute.pair_budget);
      const GFKind kind{gl ? GFTag::conjclasses_gl : GFTag::conjclasses_all};
      expect_eq(r, "oracle", name, got, extract_count(gf_build(kind, q, std::max<std::size_t>(n, 1)), n, q, false));
    } catch (const BudgetExceeded& ex) {
      skip(r, "oracle", name, ex.what());
    }
  }
}

}  // namespace

VerifyReport oracle_checks(const VerifyOptions& opts) {
  VerifyReport r;
  if (!opts.run_oracle) return r;
  for (const OracleCase& oc : {OracleCase{2, 4}, OracleCase{3, 2}, OracleCase{4, 2}}) {
    const PrimePower q = PrimePower::from_value(oc.q);
    for (std::size_t n = 1; n <= oc.max_n; ++n) census_case(r, q, n, opts);
  }
  const PrimePower two(2, 1);
  for (std::size_t n = 1; n <= 3; ++n) conjugacy_case(r, two, n, opts);
  return r;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport r = regression_checks(opts);
  r.append(cross_route_checks(opts));
  r.append(oracle_checks(opts));
  return r;
}

std::string format_report(const VerifyReport& report, bool verbose) {
  std::ostringstream os;
  for (const CheckResult& c : report.checks) {
    if (!verbose && c.status == CheckStatus::pass) continue;
    const char* tag = c.status == CheckStatus::pass ? "ok  " : c.status == CheckStatus::fail ? "FAIL" : "skip";
    os << tag << ' ' << c.group << ": " << c.name;
    if (!c.detail.empty() && c.status != CheckStatus::pass) os << " (" << c.detail << ')';
    os << '\n';
  }
  os << report.count(CheckStatus::pass) << " passed, " << report.count(CheckStatus::fail) << " failed, "
     << report.count(CheckStatus::skip) << " skipped\n";
  return os.str();
}

}  // namespace qmc::cli
