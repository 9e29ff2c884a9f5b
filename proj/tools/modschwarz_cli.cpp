// modschwarz-cli: batch front end. Exit 0 when every check passes, 1 when a
// verification fails (the check is named on stderr), 2 on usage errors.

#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"

namespace {

using modschwarz::report::Report;

constexpr int kUsageError = 2;
constexpr int kVerificationFailure = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  long m = 0;
  long n = 0;
  std::size_t terms = 40;
  std::string tau = "0+2i";
  std::string format = "json";
  int precision = 53;
};

/// Parses "x+yi", "x-yi", "yi" or "x".
std::complex<long double> parse_tau(const std::string& text) {
  static const std::regex full(R"(^\s*([-+]?[0-9.eE]+)\s*([-+])\s*([0-9.eE]*)\s*i\s*$)");
  static const std::regex imag(R"(^\s*([-+]?[0-9.eE]*)\s*i\s*$)");
  static const std::regex real(R"(^\s*([-+]?[0-9.eE]+)\s*$)");
  const auto number = [&](const std::string& s, const std::string& fallback) {
    const std::string v = s.empty() || s == "+" || s == "-" ? s + fallback : s;
    std::size_t used = 0;
    const long double x = std::stold(v, &used);
    if (used != v.size()) throw UsageError("cannot parse tau: " + text);
    return x;
  };
  try {
    std::smatch g;
    if (std::regex_match(text, g, full)) {
      const long double im = number(g[3].str(), "1");
      return {number(g[1].str(), ""), g[2].str() == "-" ? -im : im};
    }
    if (std::regex_match(text, g, imag)) return {0, number(g[1].str(), "1")};
    if (std::regex_match(text, g, real)) return {number(g[1].str(), ""), 0};
  } catch (const std::logic_error&) {
  }
  throw UsageError("cannot parse tau \"" + text + "\"; expected x+yi");
}

void require_parameters(const RunConfig& cfg) {
  try {
    modschwarz::validate_parameters(cfg.m, cfg.n);
  } catch (const modschwarz::Error& e) {
    throw UsageError(e.what());
  }
  if (cfg.terms < 2) throw UsageError("--terms must be at least 2");
}

Report dispatch(const std::string& command, const RunConfig& cfg) {
  namespace rep = modschwarz::report;
  if (command == "selftest") return rep::selftest_report();
  require_parameters(cfg);
  if (command == "solve") return rep::solve_report(cfg.m, cfg.n, cfg.terms);
  if (command == "verify") return rep::verify_report(cfg.m, cfg.n, cfg.terms);
  if (command == "vvmf") return rep::vvmf_report(cfg.m, cfg.n, cfg.terms);

  if (cfg.n >= cfg.m) throw UsageError("eval needs n < m for the closed hypergeometric form");
  const std::complex<long double> tau = parse_tau(cfg.tau);
  if (!(tau.imag() > 0)) throw UsageError("tau must lie in the upper half-plane");
  if (cfg.precision == 53)
    return rep::eval_report(cfg.m, cfg.n, std::complex<double>(tau), cfg.terms, cfg.precision);
  if (cfg.precision == 64) return rep::eval_report(cfg.m, cfg.n, tau, cfg.terms, cfg.precision);
  throw UsageError("--precision must be 53 (double) or 64 (long double)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solutions of the modular Schwarzian equation {h} = s E4"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_common = [&](CLI::App* sub, bool needs_pair) {
    if (needs_pair) {
      sub->add_option("--m", cfg.m, "denominator m >= 7")->required();
      sub->add_option("--n", cfg.n, "numerator n >= 1, gcd(m, n) = 1")->required();
      sub->add_option("--terms", cfg.terms, "truncation order N")->capture_default_str();
    }
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };
  add_common(app.add_subcommand("solve", "build and verify h for {h} = -(1/2)(n/m)^2 E4"), true);
  add_common(app.add_subcommand("verify", "run every invariant check for (m, n)"), true);
  add_common(app.add_subcommand("vvmf", "minimal-weight form and its raised levels"), true);
  CLI::App* eval = app.add_subcommand("eval", "evaluate h at tau by both routes");
  add_common(eval, true);
  eval->add_option("--tau", cfg.tau, "point in the upper half-plane, x+yi")->capture_default_str();
  eval->add_option("--precision", cfg.precision, "53 (double) or 64 (long double)")->capture_default_str();
  add_common(app.add_subcommand("selftest", "run the acceptance grid"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Report report = dispatch(command, cfg);
    const auto tree = report.to_json();
    if (cfg.format == "json")
      std::cout << tree.dump(2) << '\n';
    else
      std::cout << modschwarz::report::render_text(tree);
    if (const auto failure = report.first_failure()) {
      std::cerr << "verification failed: " << *failure << '\n';
      return kVerificationFailure;
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
}
