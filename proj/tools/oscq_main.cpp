#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "oscq/checks.hpp"
#include "oscq/intertwiner.hpp"
#include "oscq/lattice.hpp"
#include "oscq/oscillator.hpp"
#include "oscq/reduced.hpp"

namespace {

using nlohmann::json;
using oscq::op::VerificationReport;

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void append_escaped(std::string& out, const std::string& text) {
  out += '"';
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
          out += buffer;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

// Deterministic serialization: keys sorted (json objects are ordered maps),
// floats printed with 17 significant digits.
void append_json(std::string& out, const json& j) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        append_escaped(out, it.key());
        out += ':';
        append_json(out, it.value());
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& element : j) {
        if (!first) out += ',';
        first = false;
        append_json(out, element);
      }
      out += ']';
      break;
    }
    case json::value_t::string: append_escaped(out, j.get<std::string>()); break;
    case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
    case json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
    case json::value_t::number_float: out += format_double(j.get<double>()); break;
    default: out += "null";
  }
}

void print_json(const json& j) {
  std::string out;
  append_json(out, j);
  out += '\n';
  std::fputs(out.c_str(), stdout);
}

json report_json(const VerificationReport& report, json config) {
  json checks = json::array();
  for (const auto& check : report.checks()) {
    checks.push_back({{"name", check.name},
                      {"residual", check.max_abs_residual},
                      {"tolerance", check.tolerance},
                      {"pass", check.pass}});
  }
  return {{"config", std::move(config)},
          {"checks", std::move(checks)},
          {"summary", {{"passed", report.passed()}, {"failed", report.failed()}}}};
}

void print_report_text(const VerificationReport& report) {
  for (const auto& check : report.checks()) {
    std::printf("%s  residual=%.3e  tol=%.3e  %s\n", check.pass ? "PASS" : "FAIL",
                check.max_abs_residual, check.tolerance, check.name.c_str());
  }
  std::printf("summary: %d passed, %d failed\n", report.passed(), report.failed());
}

int run_spectrum(int n_max, double hbar, const std::string& format) {
  const auto action = oscq::osc::build_action_ops(n_max, hbar);
  const auto basis = oscq::lattice::oscillator_basis(n_max);
  if (format == "csv" || format == "text") {
    std::string out = "m,n,A1,A2,E,L\n";
    for (const auto& ix : basis) {
      const int k = oscq::lattice::basis_index(ix.m, ix.n);
      out += std::to_string(ix.m) + "," + std::to_string(ix.n) + "," +
             format_double(action.qa1.at(k, k).real()) + "," +
             format_double(action.qa2.at(k, k).real()) + "," +
             format_double(action.qe.at(k, k).real()) + "," +
             format_double(action.ql.at(k, k).real()) + "\n";
    }
    std::fputs(out.c_str(), stdout);
    return 0;
  }
  json records = json::array();
  for (const auto& ix : basis) {
    const int k = oscq::lattice::basis_index(ix.m, ix.n);
    records.push_back({{"m", ix.m},
                       {"n", ix.n},
                       {"A1", action.qa1.at(k, k).real()},
                       {"A2", action.qa2.at(k, k).real()},
                       {"E", action.qe.at(k, k).real()},
                       {"L", action.ql.at(k, k).real()}});
  }
  print_json({{"config", {{"format", format}, {"hbar", hbar}, {"nmax", n_max}}},
              {"records", std::move(records)}});
  return 0;
}

int run_bcoeff(int q, double hbar, const std::string& format) {
  const auto coeffs = oscq::red::b_coefficients(q);
  const auto chain_name = [q](int p) {
    return ((p - q) % 2 == 0) ? "even" : "odd";
  };
  if (format == "csv" || format == "text") {
    std::string out = "p,chain,b_sq,b\n";
    for (int p = -q; p <= q + 2; ++p) {
      const auto b_sq = coeffs.at(p);
      out += std::to_string(p) + "," + chain_name(p) + "," + std::to_string(b_sq) + "," +
             format_double(hbar * std::sqrt(static_cast<double>(b_sq))) + "\n";
    }
    std::fputs(out.c_str(), stdout);
    return 0;
  }
  json rows = json::array();
  for (int p = -q; p <= q + 2; ++p) {
    const auto b_sq = coeffs.at(p);
    rows.push_back({{"p", p},
                    {"chain", chain_name(p)},
                    {"b_sq", b_sq},
                    {"b", hbar * std::sqrt(static_cast<double>(b_sq))}});
  }
  print_json({{"config", {{"format", format}, {"hbar", hbar}, {"q", q}}},
              {"rows", std::move(rows)}});
  return 0;
}

int run_multiplicity(int n_max, double hbar, const std::string& format) {
  const auto rows = oscq::qred::multiplicity_report(n_max, hbar);
  if (format == "csv" || format == "text") {
    std::string out = "q,dim_Hq,dim_Hq0,dim_Hq1,commutant_Hq,commutant_Hqtilde\n";
    for (const auto& row : rows) {
      out += std::to_string(row.q) + "," + std::to_string(row.dim_Hq) + "," +
             std::to_string(row.dim_Hq0) + "," + std::to_string(row.dim_Hq1) + "," +
             std::to_string(row.commutant_Hq) + "," + std::to_string(row.commutant_Hqtilde);
      if (format == "text" && row.dim_Hq1 > 0) out += "  # surplus chain only in the reduced side";
      out += "\n";
    }
    std::fputs(out.c_str(), stdout);
    return 0;
  }
  json records = json::array();
  for (const auto& row : rows) {
    records.push_back({{"q", row.q},
                       {"dim_Hq", row.dim_Hq},
                       {"dim_Hq0", row.dim_Hq0},
                       {"dim_Hq1", row.dim_Hq1},
                       {"commutant_Hq", row.commutant_Hq},
                       {"commutant_Hqtilde", row.commutant_Hqtilde}});
  }
  print_json({{"config", {{"format", format}, {"hbar", hbar}, {"nmax", n_max}}},
              {"rows", std::move(records)}});
  return 0;
}

int run_verify(const std::string& scope, const oscq::checks::Options& opts, int mutate,
               const std::string& format) {
  VerificationReport report;
  if (scope == "oscillator") {
    report = oscq::checks::check_oscillator(opts, mutate);
  } else if (scope == "reduced") {
    report = oscq::checks::check_reduced(opts);
  } else if (scope == "intertwine") {
    report = oscq::checks::check_intertwine(opts);
  } else if (scope == "classical") {
    report = oscq::checks::check_classical(opts);
  } else if (scope == "su2") {
    report = oscq::checks::check_su2(opts);
  } else {
    report = oscq::checks::check_all(opts, mutate);
  }
  if (format == "text") {
    print_report_text(report);
  } else {
    print_json(report_json(report, {{"format", format},
                                    {"hbar", opts.hbar},
                                    {"mutate", mutate},
                                    {"nmax", opts.n_max},
                                    {"q", opts.q_max},
                                    {"scope", scope},
                                    {"seed", opts.seed},
                                    {"tol", opts.tol}}));
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-D harmonic oscillator quantization toolkit: joint spectra, shifting"
               " coefficients, reduction multiplicities, and identity verification"};
  app.require_subcommand(1);

  double hbar = 1.0;
  double tol = 1e-10;
  int n_max = 20;
  int q = 50;
  std::uint64_t seed = 12345;
  int mutate = -1;
  std::string format = "json";
  std::string scope = "all";

  const auto add_common = [&](CLI::App* sub, bool with_csv) {
    sub->add_option("--hbar", hbar, "Planck constant over 2 pi")->check(CLI::PositiveNumber);
    auto formats = with_csv ? std::vector<std::string>{"json", "csv", "text"}
                            : std::vector<std::string>{"json", "text"};
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "joint (A1,A2) and (E,L) spectra");
  spectrum->add_option("--nmax", n_max, "shell cutoff")->check(CLI::NonNegativeNumber);
  add_common(spectrum, true);

  CLI::App* bcoeff = app.add_subcommand("bcoeff", "shifting coefficient table b_p for one orbit");
  int bq = 2;
  bcoeff->add_option("--q", bq, "orbit label")->check(CLI::NonNegativeNumber);
  add_common(bcoeff, true);

  CLI::App* multiplicity =
      app.add_subcommand("multiplicity", "matched/surplus components per orbit");
  int mult_nmax = 8;
  multiplicity->add_option("--nmax", mult_nmax, "largest orbit label")
      ->check(CLI::NonNegativeNumber);
  add_common(multiplicity, true);

  CLI::App* verify = app.add_subcommand("verify", "run the identity verification battery");
  verify->add_option("scope", scope, "which checks to run")
      ->check(CLI::IsMember({"oscillator", "reduced", "intertwine", "classical", "su2", "all"}));
  verify->add_option("--nmax", n_max, "oscillator shell cutoff")->check(CLI::NonNegativeNumber);
  verify->add_option("--q", q, "reduced su(2) sweep bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--tol", tol, "tolerance for identity checks")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed for randomized trials");
  verify->add_option("--mutate", mutate,
                     "fault injection: flip the sign of the k-th stored pi matrix element")
      ->check(CLI::NonNegativeNumber);
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*spectrum) return run_spectrum(n_max, hbar, format);
    if (*bcoeff) return run_bcoeff(bq, hbar, format);
    if (*multiplicity) return run_multiplicity(mult_nmax, hbar, format);
    oscq::checks::Options opts;
    opts.hbar = hbar;
    opts.tol = tol;
    opts.n_max = n_max;
    opts.q_max = q;
    opts.seed = seed;
    if (mutate >= 0 && scope != "oscillator" && scope != "all") {
      std::fprintf(stderr, "--mutate applies to the oscillator or all scopes only\n");
      return 2;
    }
    return run_verify(scope, opts, mutate, format);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
