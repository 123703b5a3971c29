#include "qmc/cli.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qmc/errors.hpp"
#include "qmc/gfengine.hpp"
#include "qmc/sequences.hpp"
#include "qmc/verify.hpp"

namespace qmc::cli {

namespace {

struct SeqArgs {
  std::string name;
  std::int64_t q = 2;
  std::optional<std::int64_t> k;
  std::optional<std::size_t> min_n;
  std::size_t max_n = 10;
  std::string format = "plain";
  std::optional<std::size_t> order;
  std::optional<std::uint64_t> oracle_budget;
  unsigned jobs = 1;
};

std::optional<std::uint64_t> env_budget() {
  const char* v = std::getenv("QMC_ORACLE_BUDGET");
  if (!v || !*v) return std::nullopt;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("QMC_ORACLE_BUDGET is not a number: ") + v);
  }
}

ComputeOptions compute_options(const SeqArgs& a) {
  ComputeOptions opts;
  opts.order = a.order.value_or(std::max(kDefaultOrder, a.max_n));
  if (auto b = a.oracle_budget ? a.oracle_budget : env_budget()) {
    opts.oracle_budget = *b;
    opts.pair_budget = std::max(*b, opts.pair_budget);
  }
  opts.jobs = std::max(1u, a.jobs);
  return opts;
}

const SequenceInfo& lookup(const std::string& name) {
  const SequenceInfo* info = find_sequence(name);
  if (!info) throw std::invalid_argument("unknown sequence '" + name + "' (see `qmc list`)");
  return *info;
}

void add_seq_options(CLI::App* cmd, SeqArgs& a) {
  cmd->add_option("name", a.name, "Sequence name")->required();
  cmd->add_option("--q", a.q, "Field order, a prime power");
  cmd->add_option("--k", a.k, "Exponent for power_identity, or column for triangles");
  cmd->add_option("--min-n", a.min_n, "First n");
  cmd->add_option("--max-n", a.max_n, "Last n");
  cmd->add_option("--order", a.order, "Series truncation order (default: max(16, max-n))");
  cmd->add_option("--oracle-budget", a.oracle_budget, "Matrix budget for exhaustive sequences");
  cmd->add_option("--jobs", a.jobs, "Worker threads for exhaustive sweeps");
}

int run_seq(const SeqArgs& a, std::ostream& out) {
  const SequenceInfo& info = lookup(a.name);
  const PrimePower q = PrimePower::from_value(a.q);
  std::size_t n_min = a.min_n.value_or(info.min_n);
  if (!a.min_n && a.format == "bfile" && !info.triangle) {
    if (auto ref = oeis_for(a.name, q, a.k)) n_min = std::max<std::size_t>(n_min, static_cast<std::size_t>(ref->offset));
  }
  const SequenceSpec spec = make_spec(a.name, q, a.k, n_min, a.max_n);
  const std::vector<BigInt> values = compute_values(spec, compute_options(a));
  if (a.format == "json") {
    out << emit_json(spec, values) << '\n';
  } else if (a.format == "bfile") {
    out << emit_bfile(spec, values);
  } else {
    out << emit_plain(values) << '\n';
  }
  return 0;
}

int run_table(const SeqArgs& a, std::ostream& out) {
  const SequenceInfo& info = lookup(a.name);
  const PrimePower q = PrimePower::from_value(a.q);
  const ComputeOptions opts = compute_options(a);
  for (std::size_t n = a.min_n.value_or(info.min_n); n <= a.max_n; ++n) {
    out << n << ':';
    if (info.triangle) {
      for (const BigInt& v : compute_row(a.name, q, n)) out << ' ' << v;
    } else {
      out << ' ' << compute_term(a.name, q, a.k, n, opts);
    }
    out << '\n';
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of matrix classes over finite fields"};
  app.require_subcommand(1);

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print a sequence");
  add_seq_options(seq_cmd, seq);
  seq_cmd->add_option("--format", seq.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "bfile"}));

  SeqArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print one line per n");
  add_seq_options(table_cmd, table);

  std::string limit_kind;
  std::int64_t limit_q = 2;
  int digits = 10;
  auto* limit_cmd = app.add_subcommand("limit", "Limiting proportion as n grows");
  limit_cmd->add_option("kind", limit_kind,
                        "invertible, linear_derangement_frac, projective_frac, cyclic or conj_ratio")
      ->required();
  limit_cmd->add_option("--q", limit_q, "Field order, a prime power");
  limit_cmd->add_option("--digits", digits, "Digits after the point")->check(CLI::Range(1, 50));

  VerifyOptions vopts;
  bool verbose = false;
  bool no_oracle = false;
  std::optional<std::uint64_t> verify_budget;
  auto* verify_cmd = app.add_subcommand("verify", "Check reference values, cross-route identities and the oracle");
  verify_cmd->add_flag("--verbose,-v", verbose, "List passing checks too");
  verify_cmd->add_flag("--no-oracle", no_oracle, "Skip exhaustive enumeration");
  verify_cmd->add_option("--max-n", vopts.cross_max_n, "Largest n for cross-route checks");
  verify_cmd->add_option("--oracle-budget", verify_budget, "Matrix budget for the oracle");
  verify_cmd->add_option("--jobs", vopts.compute.jobs, "Worker threads for the oracle");

  auto* list_cmd = app.add_subcommand("list", "List sequence names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*seq_cmd) return run_seq(seq, out);
    if (*table_cmd) return run_table(table, out);
    if (*limit_cmd) {
      const auto kind = parse_limit_kind(limit_kind);
      if (!kind) throw std::invalid_argument("unknown limit kind '" + limit_kind + "'");
      out << limit_eval(*kind, PrimePower::from_value(limit_q), digits) << '\n';
      return 0;
    }
    if (*verify_cmd) {
      vopts.run_oracle = !no_oracle;
      if (auto b = verify_budget ? verify_budget : env_budget()) vopts.compute.oracle_budget = *b;
      const VerifyReport report = run_verify(vopts);
      out << format_report(report, verbose);
      return report.ok() ? 0 : 1;
    }
    if (*list_cmd) {
      for (const SequenceInfo& s : sequence_catalog()) out << s.name << "  " << s.description << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qmc::cli
