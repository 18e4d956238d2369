#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "mzv/errors.hpp"
#include "mzv/exactalg.hpp"
#include "mzv/json_io.hpp"
#include "mzv/numerics.hpp"
#include "mzv/renorm_integrals.hpp"
#include "mzv/stuffle.hpp"
#include "suites.hpp"

namespace mzv::cli {

namespace {

using json_io::json;
using numerics::EvalResult;

enum class Format { human, json, csv };

struct Options {
  unsigned precision = 64;
  std::string format = "human";

  Format kind() const { return format == "json" ? Format::json : format == "csv" ? Format::csv : Format::human; }
  PrecisionContext ctx() const { return PrecisionContext(precision); }
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

std::string truncation_text(const EvalResult::Truncation& t, const PrecisionContext& ctx) {
  if (const auto* m = std::get_if<std::uint64_t>(&t)) return std::to_string(*m);
  return format(std::get<RealX>(t), ctx);
}

// EvalResult plus optional labelled extras (target values and the like).
void print_result(std::ostream& out, const Options& opt, const EvalResult& r, const std::string& truncation_name,
                  const std::vector<std::pair<std::string, std::string>>& extras = {}) {
  const PrecisionContext ctx = opt.ctx();
  switch (opt.kind()) {
    case Format::json: {
      json j = json_io::to_json(r, ctx);
      for (const auto& [k, v] : extras) j[k] = v;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      out << "value,error_estimate,truncation";
      for (const auto& extra : extras) out << ',' << csv_cell(extra.first);
      out << '\n' << format(r.value, ctx) << ',' << format(r.error_estimate, ctx) << ','
          << truncation_text(r.truncation, ctx);
      for (const auto& extra : extras) out << ',' << csv_cell(extra.second);
      out << '\n';
      break;
    }
    case Format::human:
      out << "value          = " << format(r.value, ctx) << '\n'
          << "error_estimate = " << format(r.error_estimate, ctx) << '\n'
          << truncation_name << std::string(15 - std::min<std::size_t>(14, truncation_name.size()), ' ') << "= "
          << truncation_text(r.truncation, ctx) << '\n';
      for (const auto& [k, v] : extras) out << k << std::string(15 - std::min<std::size_t>(14, k.size()), ' ') << "= " << v << '\n';
      break;
  }
}

}  // namespace

int report_checks(std::ostream& out, const std::string& format, const std::string& title,
                  const std::vector<CheckRow>& rows) {
  const bool all = std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
  switch (Options{64, format}.kind()) {
    case Format::json: {
      json checks = json::array();
      for (const auto& r : rows)
        checks.push_back({{"identity", r.identity}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"difference", r.difference},
                          {"pass", r.pass}});
      out << json{{"suite", title}, {"checks", checks}, {"pass", all}}.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "identity,lhs,rhs,difference,pass\n";
      for (const auto& r : rows)
        out << csv_cell(r.identity) << ',' << csv_cell(r.lhs) << ',' << csv_cell(r.rhs) << ',' << csv_cell(r.difference)
            << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
      break;
    case Format::human:
      for (const auto& r : rows) {
        out << (r.pass ? "PASS  " : "FAIL  ") << r.identity << '\n'
            << "      lhs  " << r.lhs << '\n'
            << "      rhs  " << r.rhs << '\n'
            << "      diff " << r.difference << '\n';
      }
      out << title << ": " << std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; }) << '/'
          << rows.size() << " passed\n";
      break;
  }
  return all ? kOk : kCheckFailed;
}

namespace {

int cmd_coeffs(std::ostream& out, const Options& opt, int n_max) {
  const PrecisionContext ctx = opt.ctx();
  std::map<int, RealX> atoms;
  std::vector<std::pair<ZetaPolynomial, std::string>> rows;
  {
    PrecisionScope scope(ctx);
    atoms.emplace(1, constants::euler_gamma());
    for (int k = 2; k <= n_max; ++k) atoms.emplace(k, numerics::zeta_ref(RealX(k), ctx));
    for (int n = 0; n <= n_max; ++n) {
      ZetaPolynomial p = exactalg::recip_gamma_coeff(n);
      rows.emplace_back(p, format(eval_zeta_polynomial(p, atoms), ctx));
    }
  }
  switch (opt.kind()) {
    case Format::json: {
      json list = json::array();
      for (std::size_t n = 0; n < rows.size(); ++n)
        list.push_back({{"n", n}, {"exact", json_io::to_json(rows[n].first)}, {"decimal", rows[n].second}});
      out << json{{"precision", opt.precision}, {"coefficients", list}}.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,exact,decimal\n";
      for (std::size_t n = 0; n < rows.size(); ++n)
        out << n << ',' << csv_cell(rows[n].first.to_string()) << ',' << rows[n].second << '\n';
      break;
    case Format::human:
      for (std::size_t n = 0; n < rows.size(); ++n)
        out << "a_" << n << " = " << rows[n].first.to_string() << "\n    ≈ " << rows[n].second << '\n';
      break;
  }
  return kOk;
}

int cmd_renorm(std::ostream& out, const Options& opt, const std::string& which, const std::string& x_text,
               const std::string& r_text, int y_first, int y_last, const std::string& schedule_out) {
  const PrecisionContext ctx = opt.ctx();
  std::optional<renorm::RenormResult> res;
  {
    PrecisionScope scope(ctx);
    const RealX x = parse_real(x_text);
    const RealX r = parse_real(r_text);
    const auto schedule = renorm::YSchedule::dyadic(y_first, y_last);
    if (which == "gamma")
      res = renorm::gamma_renorm(x, schedule, r, ctx);
    else if (which == "varpi")
      res = renorm::varpi_renorm(x, schedule, r, ctx);
    else if (which == "ci")
      res = renorm::ci_renorm(x, schedule, r, ctx);
    else
      res = renorm::ci2_renorm(x, schedule, ctx);
  }
  if (!schedule_out.empty()) {
    std::ofstream csv(schedule_out);
    if (!csv) throw std::invalid_argument("cannot write " + schedule_out);
    csv << "y,raw,window\n";
    for (const auto& row : res->rows)
      csv << format(row.y, ctx) << ',' << format(row.raw, ctx) << ',' << format(row.window, ctx) << '\n';
  }
  std::string powers;
  for (const RealX& p : res->detected_powers) powers += (powers.empty() ? "" : " ") + format(p, PrecisionContext(16));
  print_result(out, opt, res->eval, "smallest_y", {{"y_powers", powers}});
  return kOk;
}

int cmd_mzv(std::ostream& out, const Options& opt, const std::string& spec, std::uint64_t m, std::uint64_t N) {
  const PrecisionContext ctx = opt.ctx();
  if (spec.starts_with("ones:")) {
    const int n = std::stoi(spec.substr(5));
    const EvalResult r = numerics::mzv_ones_limit(n, m, ctx);
    const std::string closed = exactalg::recip_gamma_coeff(n).to_string();
    const std::string target = format(numerics::mzv_ones_closed_form(n, ctx), ctx);
    print_result(out, opt, r, "m", {{"closed_form", closed}, {"target", target}});
    return kOk;
  }
  const stuffle::Composition comp = stuffle::Composition::parse(spec);
  if (comp.is_symbolic()) throw DomainError("mzv needs numeric arguments");
  std::vector<Rational> args;
  for (const auto& t : comp.args()) args.push_back(t.value());
  const EvalResult r = numerics::mzv_numeric(args, N, ctx);
  std::vector<std::pair<std::string, std::string>> extras;
  if (args.size() == 1) {
    PrecisionScope scope(ctx);
    extras.emplace_back("target", format(numerics::zeta_ref(to_real(args[0]), ctx), ctx));
  }
  print_result(out, opt, r, "N", extras);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Renormalized multiple zeta values and related limits"};
  app.name("mzv-renorm");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--precision", opt.precision, "working precision in decimal digits")
      ->envname("MZV_PRECISION")
      ->check(CLI::Range(PrecisionContext::kMinDigits, PrecisionContext::kMaxDigits));
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"human", "json", "csv"}));

  int n_max = 4;
  auto* coeffs = app.add_subcommand("coeffs", "renormalized ζ(1,...,1) closed forms a_0..a_n");
  coeffs->add_option("n_max", n_max, "largest n")->check(CLI::Range(0, 12));

  std::string s_text = "0.5";
  std::uint64_t m = 15000;
  bool skip_one = false;
  auto* zeta_line = app.add_subcommand("zeta-line", "counterweighted partial sums for ζ(s), s > 0");
  zeta_line->add_option("--s", s_text, "exponent s (decimal, p/q)");
  zeta_line->add_option("--m", m, "truncation m")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1'000'000'000'000}));
  zeta_line->add_flag("--skip-one", skip_one, "stop the first sum at m-1");

  std::string suite;
  auto* checks = app.add_subcommand("check-identities", "run an identity suite");
  checks->add_option("suite", suite, "reflection2 | reflection3 | renorm-ones | det-trace")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kSuiteNames), std::end(kSuiteNames))));

  std::string which, x_text = "0", r_text = "1", schedule_out;
  int y_first = 4, y_last = 24;
  auto* integral = app.add_subcommand("renorm-integral", "renormalized integral at a singular point");
  integral->add_option("which", which, "gamma | varpi | ci | ci2")
      ->required()
      ->check(CLI::IsMember({"gamma", "varpi", "ci", "ci2"}));
  integral->add_option("--x", x_text, "evaluation point");
  integral->add_option("--r", r_text, "window parameter r (rational, e, e^q)");
  integral->add_option("--y-first", y_first, "schedule starts at 2^-first");
  integral->add_option("--y-last", y_last, "schedule ends at 2^-last");
  integral->add_option("--schedule-out", schedule_out, "write the per-y table as CSV");

  std::string mzv_spec;
  std::uint64_t mzv_m = 10000, mzv_N = 10000;
  auto* mzv = app.add_subcommand("mzv", "ζ(s_1,...,s_k) or the renormalized all-ones value");
  mzv->add_option("args", mzv_spec, "\"2,1\" or \"ones:<n>\"")->required();
  mzv->add_option("--m", mzv_m, "truncation for ones:<n>")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100'000'000}));
  mzv->add_option("--N", mzv_N, "truncation for compositions")->check(CLI::Range(std::uint64_t{10}, std::uint64_t{100'000'000}));

  auto* repro = app.add_subcommand("repro", "reproduce every published number");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(out, opt, n_max);
    if (zeta_line->parsed()) {
      const PrecisionContext ctx = opt.ctx();
      EvalResult r;
      std::vector<std::pair<std::string, std::string>> extras;
      {
        PrecisionScope scope(ctx);
        const RealX s = parse_real(s_text);
        r = numerics::zeta_line_eval(s, m, skip_one, ctx);
        if (s > 1) extras.emplace_back("zeta_ref", format(numerics::zeta_ref(s, ctx), ctx));
      }
      print_result(out, opt, r, "m", extras);
      return kOk;
    }
    if (checks->parsed()) return report_checks(out, opt.format, suite, run_suite(suite, opt.ctx()));
    if (integral->parsed()) return cmd_renorm(out, opt, which, x_text, r_text, y_first, y_last, schedule_out);
    if (mzv->parsed()) return cmd_mzv(out, opt, mzv_spec, mzv_m, mzv_N);
    if (repro->parsed()) return report_checks(out, opt.format, "repro", run_repro(opt.ctx()));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mzv::cli
