// Batch verifier: syv-verify <check>... [flags]; exit 0 = all pass, 1 = some
// check failed, 2 = usage error, 3 = internal error.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "syv/cli.hpp"

namespace {

constexpr int kUsage = 2;

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of super Yangian and W-superalgebra identities"};
  syv::VerifyConfig cfg;
  std::string config_path, report_path;
  int m = 0, n = 0, s = 0;
  std::vector<int> u, q;
  app.add_option("checks", cfg.checks, "checks to run: " + join(syv::check_names()) + ", all");
  app.add_option("--config", config_path, "JSON config document (command-line flags override it)");
  auto* om = app.add_option("--m", m, "even rank of gl(m|n)");
  auto* on = app.add_option("--n", n, "odd rank of gl(m|n)");
  auto* ou = app.add_option("--u", u, "even column heights, e.g. 5,2")->delimiter(',');
  auto* oq = app.add_option("--q", q, "odd column heights, e.g. 4,2")->delimiter(',');
  auto* os = app.add_option("--s", s, "column index s");
  auto* od = app.add_option("--degree", cfg.degree, "degree bound D of the vacuum basis");
  auto* ov = app.add_option("--variant", cfg.variants, "printed variant: " + join(syv::variant_names()));
  auto* oj = app.add_option("--jobs", cfg.jobs, "parallelism width (checks run sequentially)");
  auto* osa = app.add_option("--sample", cfg.sample, "main-theorem: restrict to this many basis vectors");
  app.add_flag("--timings", cfg.timings, "add wall times to the report");
  app.add_option("--report", report_path, "write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw syv::ConfigError("cannot read " + config_path);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw syv::ConfigError(std::string("config: ") + e.what());
      }
      syv::VerifyConfig base = syv::VerifyConfig::from_json(j);
      if (!cfg.checks.empty()) base.checks = cfg.checks;
      if (*od) base.degree = cfg.degree;
      if (*ov) base.variants = cfg.variants;
      if (*oj) base.jobs = cfg.jobs;
      if (*osa) base.sample = cfg.sample;
      base.timings = base.timings || cfg.timings;
      cfg = base;
    }
    if (*om) cfg.m = m;
    if (*on) cfg.n = n;
    if (*ou) cfg.u = u;
    if (*oq) cfg.q = q;
    if (*os) cfg.s = s;

    syv::RunResult res = syv::run(cfg);
    std::string doc = res.report.dump(2) + "\n";
    if (report_path.empty()) {
      std::cout << doc;
    } else {
      std::ofstream out(report_path);
      if (!out) throw syv::ConfigError("cannot write " + report_path);
      out << doc;
      for (const auto& c : res.report["checks"])
        std::cout << c["name"].get<std::string>() << ": " << c["status"].get<std::string>() << "\n";
    }
    return res.pass ? 0 : 1;
  } catch (const syv::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
