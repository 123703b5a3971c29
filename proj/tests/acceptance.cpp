// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every failing check is a documented misprint of the
// printed reference values (listed in the output), 1 otherwise.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qmc/errors.hpp"
#include "qmc/ffpoly.hpp"
#include "qmc/gfengine.hpp"
#include "qmc/oracle.hpp"
#include "qmc/qcount.hpp"
#include "qmc/regression.hpp"
#include "qmc/sequences.hpp"
#include "qmc/verify.hpp"

using namespace qmc;

namespace {

PrimePower pp(std::int64_t q) { return PrimePower::from_value(q); }

struct Criterion {
  int id;
  std::string title;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> misprints;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void misprint(bool ok, const std::string& what) {
    ++checks;
    if (!ok) misprints.push_back(what);
  }
  void absorb(const cli::VerifyReport& r) {
    for (const auto& c : r.checks) {
      if (c.status == cli::CheckStatus::skip) continue;
      check(c.status == cli::CheckStatus::pass, c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
  }
};

std::string show(const BigInt& got, const std::string& want) { return "got " + got.str() + ", printed " + want; }

void regression(Criterion& c) {
  const cli::ComputeOptions opts;
  for (const cli::RegressionEntry& e : cli::regression_table()) {
    const PrimePower q = pp(e.q);
    const cli::SequenceInfo* info = cli::find_sequence(e.sequence);
    std::string label = std::string(e.sequence) + " q=" + std::to_string(e.q);
    if (e.k) label += " k=" + std::to_string(*e.k);
    std::vector<std::pair<std::size_t, BigInt>> got;
    if (info->triangle) {
      for (std::size_t n = e.n_start; got.size() < e.values.size(); ++n)
        for (const BigInt& v : cli::compute_row(e.sequence, q, n)) got.emplace_back(n, v);
    } else {
      for (std::size_t i = 0; i < e.values.size(); ++i) {
        const std::size_t n = e.n_start + i;
        if ((e.sequence == "min_centralizer" || e.sequence == "max_class") && n > 3) continue;
        got.emplace_back(n, cli::compute_term(e.sequence, q, e.k, n, opts));
      }
    }
    for (std::size_t i = 0; i < got.size() && i < e.values.size(); ++i) {
      const auto& [n, value] = got[i];
      const std::string want(e.values[i]);
      const std::string what = label + " n=" + std::to_string(n) + ": " + show(value, want);
      bool corrected = false;
      for (const auto& [cn, fixed] : e.corrections) corrected |= cn == n && value == BigInt(std::string(fixed));
      if (corrected) {
        c.misprint(value == BigInt(want), what);
      } else {
        c.check(value == BigInt(want), what);
      }
    }
  }
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const BigInt Q(q);
    c.check(diagonalizable_count(pp(q), 2) == (Q * Q * Q * Q - Q * Q + 2 * Q) / 2, "d_2 closed form q=" + std::to_string(q));
  }
  // Smallest centralizers: gamma_n / max_class by exhaustive search for n <= 3,
  // the printed largest-class list for 4 <= n <= 6.
  const auto field = oracle::make_field(pp(2));
  const char* printed[] = {"1", "2", "3", "6", "12", "21", "42", "84", "147", "294"};
  const char* max_class[] = {"1", "3", "56", "3360", "833280", "959938560"};
  for (std::size_t n = 1; n <= 6; ++n) {
    const BigInt size = n <= 3 ? BigInt(oracle::max_class_size(field, n)) : BigInt(max_class[n - 1]);
    c.check(gamma(pp(2), n) / size == BigInt(printed[n - 1]),
            "A082877 n=" + std::to_string(n) + ": " + show(gamma(pp(2), n) / size, printed[n - 1]));
  }
}

void cross_route(Criterion& c) {
  c.absorb(cli::cross_route_checks());
  for (auto [q, max_n] : {std::pair{2, 4}, std::pair{4, 2}}) {
    for (std::size_t n = 1; n <= static_cast<std::size_t>(max_n); ++n) {
      const auto count = oracle::count_matching(oracle::make_field(pp(q)), n,
                                                [](const oracle::FqMatrix& a) { return (a * a).is_identity(); });
      c.check(involution_count_char2(pp(q), n) == count,
              "char 2 involutions vs oracle q=" + std::to_string(q) + " n=" + std::to_string(n));
    }
  }
}

void identities(Criterion& c) {
  for (std::int64_t q : {2, 3, 4}) {
    const std::string qs = " q=" + std::to_string(q);
    for (std::size_t N : {12u, 16u}) {
      const TruncSeries inv =
          pow(euler_inverse_factor(pp(q), 1, N), BigInt(q - 1)) *
          nu_weighted_product(
              pp(q), [&](std::size_t d) { return d == 1 ? TruncSeries::one(N) : euler_inverse_factor(pp(q), d, N); }, N);
      c.check(inv == geometric(1, 1, N), "invertible product = 1/(1-u)" + qs + " N=" + std::to_string(N));
      const TruncSeries zeta = nu_weighted_product(
          pp(q),
          [&](std::size_t d) {
            return TruncSeries::one(N) - TruncSeries::monomial(ExactRational(BigInt(1), ipow(BigInt(q), d)), d, N);
          },
          N);
      c.check(zeta == TruncSeries::one(N) - TruncSeries::monomial(1, 1, N), "zeta product = 1-u" + qs + " N=" + std::to_string(N));
    }
  }
  for (std::int64_t q : {2, 3}) {
    const std::string qs = " q=" + std::to_string(q);
    std::vector<ExactRational> sums(11);
    for (std::size_t n = 0; n <= 10; ++n)
      for (const Partition& lam : partitions_of(static_cast<std::int64_t>(n)))
        sums[n] += ExactRational(BigInt(1), kung_centralizer_order(q, lam));
    c.check(TruncSeries(sums) == euler_inverse_factor(pp(q), 1, 10), "partition sum = Euler factor" + qs);
    for (std::size_t n = 1; n <= 8; ++n) {
      c.check(sums[n] * gamma(pp(q), n) == ExactRational(ipow(BigInt(q), n * (n - 1))),
              "Fine-Herstein" + qs + " n=" + std::to_string(n));
    }
  }
  for (std::int64_t q : {2, 3, 4, 5}) {
    std::vector<BigInt> prod{1};
    for (std::size_t n = 0; n <= 10; ++n) {
      bool ok = true;
      for (std::size_t k = 0; k <= n; ++k) {
        const std::uint64_t e = k < 2 ? 0 : k * (k - 1) / 2;
        ok &= prod[k] == ipow(BigInt(q), e) * gaussian_binomial(pp(q), static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
      }
      c.check(ok, "q-binomial theorem q=" + std::to_string(q) + " n=" + std::to_string(n));
      const BigInt qi = ipow(BigInt(q), n);
      prod.push_back(0);
      for (std::size_t k = prod.size() - 1; k >= 1; --k) prod[k] += qi * prod[k - 1];
    }
  }
}

void limits(Criterion& c) {
  const auto expect = [&](LimitKind kind, std::int64_t q, int digits, const std::string& printed, bool known) {
    const std::string got = limit_eval(kind, pp(q), digits);
    const std::string what = to_string(kind) + " q=" + std::to_string(q) + ": got " + got + ", printed " + printed;
    known ? c.misprint(got == printed, what) : c.check(got == printed, what);
  };
  expect(LimitKind::invertible, 2, 5, "0.28878", false);
  expect(LimitKind::invertible, 3, 5, "0.56012", false);
  // The printed product (1 - 2^-5) prod_{r>=3} (1 - 2^-r) is 0.74603..., and so
  // are the exact ratios a_n / 2^{n^2} for large n.
  expect(LimitKind::cyclic, 2, 4, "0.7403", true);
}

// |x_n - L| / L at n = 10 is below 10% and shrinks from n = 6 to n = 10.
void trend(Criterion& c, const std::string& name, const std::function<double(std::size_t)>& ratio, double limit) {
  double previous = INFINITY;
  bool monotone = true;
  for (std::size_t n = 6; n <= 10; ++n) {
    const double err = std::fabs(ratio(n) - limit) / limit;
    monotone &= err <= previous + 1e-12;  // some ratios reach rounding level early
    previous = err;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, " (relative gap %.3g at n=10)", previous);
  c.check(monotone && previous < 0.10, name + buf);
}

void asymptotics(Criterion& c) {
  for (std::int64_t q : {2, 3}) {
    const PrimePower Q = pp(q);
    const std::string qs = " q=" + std::to_string(q);
    const double prod = std::stod(limit_eval(LimitKind::invertible, Q, 15));
    const auto all = gf_counts({GFTag::conjclasses_all}, Q, 10);
    const auto gl = gf_counts({GFTag::conjclasses_gl}, Q, 10);
    trend(c, "classes of M_n / q^n -> prod (1 - q^-r)^-1" + qs,
          [&](std::size_t n) { return all[n].convert_to<double>() / std::pow(double(q), double(n)); }, 1 / prod);
    trend(c, "linear derangements / gamma_n -> prod (1 - q^-r)" + qs,
          [&](std::size_t n) { return (linear_derangement_recursive(Q, n).convert_to<double>()) / gamma(Q, n).convert_to<double>(); },
          prod);
    trend(c, "classes of GL_n / classes of M_n -> prod (1 - q^-r)" + qs,
          [&](std::size_t n) { return gl[n].convert_to<double>() / all[n].convert_to<double>(); }, prod);
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "printed sequence values reproduce exactly"},
      {2, "independent routes agree exactly"},
      {3, "exhaustive enumeration matches every applicable count"},
      {4, "product, partition and q-binomial identities hold exactly"},
      {5, "limit constants at the printed precision"},
      {6, "finite-n ratios trend towards their limits"},
  };
  const std::vector<std::function<void(Criterion&)>> runs{
      regression, cross_route, [](Criterion& c) { c.absorb(cli::oracle_checks()); }, identities, limits, asymptotics};

  bool unexpected = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion& c = criteria[i];
    try {
      runs[i](c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool pass = c.failures.empty() && c.misprints.empty();
    std::printf("%s criterion %d: %s [%zu checks]\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), c.checks);
    for (const auto& f : c.failures) std::printf("    mismatch: %s\n", f.c_str());
    for (const auto& f : c.misprints) std::printf("    misprinted reference: %s\n", f.c_str());
    unexpected |= !c.failures.empty();
  }
  return unexpected ? 1 : 0;
}
