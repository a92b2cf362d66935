#ifndef QHARMONIC_CLI_HPP
#define QHARMONIC_CLI_HPP

// Command-line front end. `main_entry` is the whole program minus process
// plumbing so it can be driven in-process by tests.
//
//   qharmonic verify   --identity ID --n N --m M [--mode symbolic|sampled] [--samples S] [--seed X]
//   qharmonic sweep    --identity ID --n NMAX --m MMAX [--mode ...] [--samples S] [--seed X] [--threads T]
//   qharmonic table    --family F --n N [--m M]
//   qharmonic matrix   --size K
//   qharmonic selftest [--quick] [--seed X]
//
// Every command takes --format text|json|csv. Exit status: 0 success,
// 1 failed verification, 2 usage error.

#include <qharmonic/report_io.hpp>
#include <qharmonic/selftest.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qharmonic::cli {

enum class Command { verify, sweep, table, matrix, selftest };
enum class Format { text, json, csv };

struct CliConfig {
  Command command = Command::verify;
  std::optional<Identity> identity;
  std::string family;
  long n = 1;
  long m = 1;
  std::size_t size = 1;
  Mode mode = Mode::symbolic;
  std::size_t samples = 5;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  Format format = Format::text;
  bool quick = false;
  bool corrupt_gaussian = false; // selftest negative control
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline const std::vector<std::string>& table_families()
{
  static const std::vector<std::string> families{"power_sum",   "mhs_full",   "mhs_endpoint", "q_power_sum",
                                                 "q_mhs_full", "q_mhs_endpoint", "gaussian"};
  return families;
}

namespace detail {

inline void print_reports(const std::vector<IdentityReport>& reports, Format format, std::ostream& out)
{
  switch (format) {
  case Format::text:
    for (const auto& r : reports)
      out << to_text(r) << '\n';
    break;
  case Format::csv:
    out << kCsvHeader << '\n';
    for (const auto& r : reports)
      out << to_csv_row(r) << '\n';
    break;
  case Format::json:
    break;
  }
}

inline int report_verdicts(const std::vector<IdentityReport>& reports, std::ostream& err)
{
  int status = kExitOk;
  for (const auto& r : reports)
    if (!r.equal) {
      err << "verification failed: " << to_string(r.identity) << " at (n=" << r.n << ", m=" << r.m << ")\n";
      status = kExitFailed;
    }
  return status;
}

inline VerifyOptions verify_options(const CliConfig& c) { return {c.samples, c.seed, c.threads}; }

inline int run_verify(const CliConfig& c, std::ostream& out, std::ostream& err)
{
  const auto report = verify(*c.identity, c.n, c.m, c.mode, verify_options(c));
  if (c.format == Format::json)
    out << to_json(report).dump(2) << '\n';
  else
    print_reports({report}, c.format, out);
  return report_verdicts({report}, err);
}

inline int run_sweep(const CliConfig& c, std::ostream& out, std::ostream& err)
{
  const auto reports = sweep(*c.identity, c.n, c.m, c.mode, verify_options(c));
  if (c.format == Format::json) {
    json arr = json::array();
    for (const auto& r : reports)
      arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  } else {
    print_reports(reports, c.format, out);
  }
  return report_verdicts(reports, err);
}

inline int run_table(const CliConfig& c, std::ostream& out)
{
  std::vector<std::pair<long, std::variant<BigRat, RatFunc, Poly>>> rows;
  const std::string& f = c.family;
  if (f == "gaussian") {
    const GaussianTable table(static_cast<std::size_t>(c.n));
    for (long k = 0; k <= c.n; ++k)
      rows.emplace_back(k, table(c.n, k));
  } else if (f == "mhs_endpoint" || f == "q_mhs_endpoint") {
    if (f == "mhs_endpoint") {
      const auto row = endpoint_sums(ClassicalArith{}, c.n, c.m);
      for (long k = 1; k <= c.n; ++k)
        rows.emplace_back(k, row[static_cast<std::size_t>(k - 1)]);
    } else {
      const auto row = endpoint_sums(SymbolicQ(0), c.n, c.m);
      for (long k = 1; k <= c.n; ++k)
        rows.emplace_back(k, row[static_cast<std::size_t>(k - 1)]);
    }
  } else {
    // Cumulative families: value at k is the sum with upper bound k.
    for (long k = 1; k <= c.n; ++k) {
      if (f == "power_sum")
        rows.emplace_back(k, power_sum(k, c.m));
      else if (f == "mhs_full")
        rows.emplace_back(k, mhs_full(k, c.m));
      else if (f == "q_power_sum")
        rows.emplace_back(k, q_power_sum(k, c.m));
      else
        rows.emplace_back(k, q_mhs_full(k, c.m));
    }
  }

  const auto as_json = [](const auto& v) { return std::visit([](const auto& x) { return to_json_value(x); }, v); };
  const auto as_text = [](const auto& v) {
    return std::visit(
        [](const auto& x) -> std::string {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, BigRat>)
            return to_string(x);
          else
            return x.to_string();
        },
        v);
  };
  switch (c.format) {
  case Format::text:
    for (const auto& [k, v] : rows)
      out << as_text(v) << '\n';
    break;
  case Format::csv:
    out << "k,value\n";
    for (const auto& [k, v] : rows) {
      const json j = as_json(v);
      out << k << ',' << csv_escape(j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
    break;
  case Format::json: {
    json values = json::array();
    for (const auto& [k, v] : rows)
      values.push_back({{"k", k}, {"value", as_json(v)}});
    json doc{{"family", f}, {"n", c.n}, {"values", values}};
    if (f != "gaussian")
      doc["m"] = c.m;
    out << doc.dump(2) << '\n';
    break;
  }
  }
  return kExitOk;
}

inline int run_matrix(const CliConfig& c, std::ostream& out, std::ostream& err)
{
  const GaussianTable table(c.size - 1);
  const QMatrix t = build_matrix(table, MatrixKind::T, c.size);
  const QMatrix t_inv = build_matrix(table, MatrixKind::T_inv, c.size);
  const QMatrix s = build_matrix(table, MatrixKind::S, c.size);
  const QMatrix u = build_matrix(table, MatrixKind::U, c.size);
  const QMatrix v = build_matrix(table, MatrixKind::V, c.size);
  const QMatrix t_inv_u = t_inv * u;
  const QMatrix v_t_inv_u = v * t_inv_u;

  const bool inverse_ok = t * t_inv == QMatrix::identity(c.size);
  const bool closed_form_ok = t_inv_u == build_matrix(table, MatrixKind::T_inv_U, c.size);
  const bool s_ok = v_t_inv_u == s;

  const std::vector<std::pair<std::string, const QMatrix*>> shown{
      {"T", &t}, {"T_inv", &t_inv}, {"S", &s}, {"V*T_inv*U", &v_t_inv_u}};
  const std::vector<std::pair<std::string, bool>> verdicts{
      {"T*T_inv = I", inverse_ok}, {"T_inv*U = closed form", closed_form_ok}, {"S = V*T_inv*U", s_ok}};

  switch (c.format) {
  case Format::text:
    for (const auto& [name, mat] : shown)
      out << name << ":\n" << to_text(*mat);
    for (const auto& [name, ok] : verdicts)
      out << name << ": " << (ok ? "true" : "false") << '\n';
    break;
  case Format::csv:
    out << "matrix,row,col,value\n";
    for (const auto& [name, mat] : shown)
      for (std::size_t i = 0; i < mat->size(); ++i)
        for (std::size_t j = 0; j < mat->size(); ++j)
          out << csv_escape(name) << ',' << i << ',' << j << ',' << csv_escape(to_json_value((*mat)(i, j)).dump())
              << '\n';
    break;
  case Format::json: {
    json doc{{"size", c.size}};
    for (const auto& [name, mat] : shown)
      doc[name] = to_json_value(*mat);
    json v_json;
    for (const auto& [name, ok] : verdicts)
      v_json[name] = ok;
    doc["verdicts"] = v_json;
    doc["equal"] = inverse_ok && closed_form_ok && s_ok;
    out << doc.dump(2) << '\n';
    break;
  }
  }
  if (inverse_ok && closed_form_ok && s_ok)
    return kExitOk;
  err << "matrix identity failed at size " << c.size << '\n';
  return kExitFailed;
}

inline int run_selftest_command(const CliConfig& c, std::ostream& out, std::ostream& err)
{
  SelftestOptions opts;
  opts.bounds = c.quick ? SelftestBounds::quick() : SelftestBounds{};
  opts.seed = c.seed;
  if (c.corrupt_gaussian) {
    const GaussianTable clean(20);
    opts.table = std::make_shared<const GaussianTable>(clean.with_perturbed_entry(4, 2, Poly::q()));
  }
  const SelftestResult result = run_selftest(opts);
  if (c.format == Format::json) {
    json checks = json::array();
    for (const auto& ch : result.checks)
      checks.push_back({{"name", ch.name},
                        {"passed", !ch.counterexample},
                        {"counterexample", ch.counterexample ? json(*ch.counterexample) : json(nullptr)}});
    out << json{{"passed", result.ok()}, {"checks", checks}}.dump(2) << '\n';
  } else {
    for (const auto& ch : result.checks) {
      out << (ch.counterexample ? "[FAIL] " : "[PASS] ") << ch.name;
      if (ch.counterexample)
        out << ": " << *ch.counterexample;
      out << '\n';
    }
  }
  if (const auto* failure = result.first_failure()) {
    err << "selftest failed: " << failure->name << ": " << *failure->counterexample << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

} // namespace detail

inline int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
  switch (config.command) {
  case Command::verify: return detail::run_verify(config, out, err);
  case Command::sweep: return detail::run_sweep(config, out, err);
  case Command::table: return detail::run_table(config, out);
  case Command::matrix: return detail::run_matrix(config, out, err);
  case Command::selftest: return detail::run_selftest_command(config, out, err);
  }
  return kExitUsage;
}

/// Parses argv into a config. Returns the exit code to use instead when
/// parsing ends the program (help, or a usage error).
inline std::variant<CliConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                               std::ostream& err)
{
  CliConfig cfg;
  CLI::App app{"Exact verification of classical and q-analogue harmonic-sum identities", "qharmonic"};
  app.require_subcommand(1);

  std::string identity, mode = "symbolic", format = "text";
  const std::vector<std::string> identity_names{"hernandez", "dilcher", "dilcher_q", "hernandez_q"};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_verify_flags = [&](CLI::App* sub, const char* n_help, const char* m_help) {
    sub->add_option("--identity", identity, "hernandez, dilcher, dilcher_q or hernandez_q")
        ->required()
        ->check(CLI::IsMember(identity_names));
    sub->add_option("--n", cfg.n, n_help)->required()->check(CLI::PositiveNumber);
    sub->add_option("--m", cfg.m, m_help)->required()->check(CLI::PositiveNumber);
    sub->add_option("--mode", mode, "symbolic or sampled")->check(CLI::IsMember({"symbolic", "sampled"}));
    sub->add_option("--samples", cfg.samples, "Sample points per cell (sampled mode)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{10000}));
    sub->add_option("--seed", cfg.seed, "Seed for the sample points");
    add_format(sub);
  };

  auto* verify_cmd = app.add_subcommand("verify", "Verify one identity instance");
  add_verify_flags(verify_cmd, "Upper summation bound n", "Weight m");
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify every (n, m) up to the given bounds");
  add_verify_flags(sweep_cmd, "Largest n", "Largest m");
  sweep_cmd->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");

  auto* table_cmd = app.add_subcommand("table", "Print a column of sums for k = 1..n (gaussian: k = 0..n)");
  table_cmd->add_option("--family", cfg.family, "Sum family")->required()->check(CLI::IsMember(table_families()));
  table_cmd->add_option("--n", cfg.n, "Largest k")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--m", cfg.m, "Weight m")->check(CLI::PositiveNumber);
  add_format(table_cmd);

  auto* matrix_cmd = app.add_subcommand("matrix", "Show T, T_inv, S and V*T_inv*U and check S = V*T_inv*U");
  matrix_cmd->add_option("--size", cfg.size, "Matrix size")->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  add_format(matrix_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the property suite");
  selftest_cmd->add_flag("--quick", cfg.quick, "Reduced bounds");
  selftest_cmd->add_option("--seed", cfg.seed, "Seed for random properties");
  selftest_cmd->add_flag("--corrupt-gaussian", cfg.corrupt_gaussian, "Negative control: perturb one Gaussian entry")
      ->group("");
  add_format(selftest_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (!identity.empty())
    cfg.identity = parse_identity(identity);
  cfg.mode = parse_mode(mode);
  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

  if (verify_cmd->parsed())
    cfg.command = Command::verify;
  else if (sweep_cmd->parsed())
    cfg.command = Command::sweep;
  else if (table_cmd->parsed())
    cfg.command = Command::table;
  else if (matrix_cmd->parsed())
    cfg.command = Command::matrix;
  else
    cfg.command = Command::selftest;
  return cfg;
}

inline int main_entry(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
  auto parsed = parse_args(argc, argv, out, err);
  if (const int* code = std::get_if<int>(&parsed))
    return *code;
  try {
    return run(std::get<CliConfig>(parsed), out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

} // namespace qharmonic::cli

#endif // QHARMONIC_CLI_HPP
