// qcsa-workbench: verify | table | lattice | minpoly | dagger
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qcsa/workbench.hpp"

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_to(std::string const& path, std::string const& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void check_n(int n) {
  if (n < 3 || n % 2 == 0)
    throw UsageError("N must be an odd integer > 1, got " + std::to_string(n));
}

// "pair" -> "pair:<lambda>,<mu>" and so on when the parameters come from flags.
std::string family_text(std::string family, std::string const& alpha, std::string const& beta,
                        std::string const& lambda, std::string const& mu) {
  if (family.find(':') != std::string::npos) return family;
  if (family == "pair") return family + ":" + lambda + "," + mu;
  if (family == "line") return family + ":" + alpha + "," + beta;
  if (family == "fline") return family + ":" + beta;
  return family;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coideal subalgebras of u_q(sl2) and O_q(SL2) at odd roots of unity"};
  app.require_subcommand(1);

  qcsa::RunConfig cfg;
  std::string out, dot;
  std::string alpha = "0", beta = "0", lambda, mu, family;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "odd order N of q")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  add_common(verify);
  verify->add_option("--samples", cfg.samples, "samples per family")->capture_default_str();
  verify->add_option("--suites", cfg.suites, "comma-separated suite names")->delimiter(',');
  verify->add_option("--out", out, "JSON report path (stdout if omitted)");
  bool no_timing = false;
  verify->add_flag("--no-timing", no_timing, "zero all elapsed times for byte-stable reports");

  auto* table = app.add_subcommand("table", "print both classification tables");
  add_common(table);
  table->add_option("--out", out, "output path");

  auto* lattice = app.add_subcommand("lattice", "emit the coideal subalgebra lattice as DOT");
  add_common(lattice);
  lattice->add_option("--dot", dot, "DOT output path (stdout if omitted)");

  auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of E + alpha F~ + beta K");
  add_common(minpoly);
  minpoly->add_option("--alpha", alpha)->capture_default_str();
  minpoly->add_option("--beta", beta)->capture_default_str();

  auto* dagger = app.add_subcommand("dagger", "compute A^dagger for one family instance");
  add_common(dagger);
  dagger->add_option("--family", family, "full, K, E, F, Kr:r, KrE:r, KrF:r, pair, line, fline")
      ->required();
  dagger->add_option("--alpha", alpha);
  dagger->add_option("--beta", beta);
  dagger->add_option("--lambda", lambda);
  dagger->add_option("--mu", mu, "defaults to 1 / ((1 - q^2) lambda)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) {
      cfg.timing = !no_timing;
      qcsa::validate_config(cfg);
      auto report = qcsa::run_verify(cfg);
      write_to(out, qcsa::report_json(report));
      auto s = report.summary();
      std::cerr << "pass " << s.pass << ", fail " << s.fail << ", recorded-discrepancy "
                << s.discrepancy << "\n";
      for (auto const& c : report.checks)
        if (c.status == qcsa::Status::Fail) std::cerr << "FAIL " << c.id << ": " << c.witness << "\n";
      return report.ok() ? 0 : 1;
    }
    check_n(cfg.n);
    if (*table) write_to(out, qcsa::render_tables(cfg.n, cfg.seed));
    if (*lattice) {
      qcsa::Uqsl2 uq(cfg.n);
      write_to(dot, qcsa::lattice_dot(qcsa::build_lattice(uq, cfg.seed)));
    }
    if (*minpoly) std::cout << qcsa::minpoly_text(cfg.n, alpha, beta);
    if (*dagger) {
      if (family == "pair" && lambda.empty()) throw UsageError("family pair needs --lambda");
      if (family == "pair" && mu.empty()) {
        // mu is determined by (1 - q^2) lambda mu = 1.
        qcsa::Uqsl2 uq(cfg.n);
        auto l = qcsa::parse_scalar(lambda, uq.field());
        if (l.is_zero()) throw UsageError("lambda must be nonzero");
        mu = qcsa::format_scalar(((qcsa::CycScalar(1) - uq.q() * uq.q()) * l).inverse());
      }
      std::cout << qcsa::dagger_text(cfg.n, family_text(family, alpha, beta, lambda, mu));
    }
  } catch (qcsa::ConfigError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (qcsa::ParseError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return 0;
}
