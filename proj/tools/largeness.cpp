// largeness: build power-quotient complexes, their cyclic covers and A/B
// splits, and check the largeness criterion.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "largeness/cli.hpp"

int main(int argc, char** argv) {
  using namespace largeness;

  CLI::App app{"Largeness certificates for high-power quotients of free groups"};
  app.require_subcommand(1);

  std::string                job_path;
  RunOptions                 options;
  std::vector<std::int64_t>  orders;
  std::optional<std::int64_t> n, p;

  auto add_common = [&](CLI::App* sub, bool needs_job) {
    auto* opt = sub->add_option("--job", job_path, "job file (JSON)");
    if (needs_job) {
      opt->required()->check(CLI::ExistingFile);
    }
    sub->add_option("--out", options.out_dir, "directory for certificate files");
    sub->add_option("--n", n, "override n");
    sub->add_option("--p", p, "override p");
    sub->add_flag("--no-dedup", options.no_dedup, "keep every lifted 2-cell");
    sub->add_flag("--claims", options.claims, "print the claims report");
  };

  add_common(app.add_subcommand("build", "dump the complex"), true);
  add_common(app.add_subcommand("homology", "print the d_p table"), true);
  add_common(app.add_subcommand("certify", "write a certificate and print the verdict"), true);
  add_common(app.add_subcommand("sweep", "certify every n in the range"), true);
  add_common(app.add_subcommand("claims", "print the claims report"), true);
  auto* reduce_m = app.add_subcommand("reduce-m", "lcm of element orders");
  add_common(reduce_m, false);
  reduce_m->add_option("orders", orders, "orders of the g_i in G/H");

  CLI11_PARSE(app, argc, argv);
  options.n       = n;
  options.p       = p;
  options.threads = threads_from_environment();

  auto* sub = app.get_subcommands().front();
  JobSpec job;
  try {
    if (!job_path.empty()) {
      std::ifstream     f(job_path);
      std::stringstream buf;
      buf << f.rdbuf();
      job = parse_job(buf.str());
    }
  } catch (JobError const& ex) {
    std::cerr << "error: " << job_path << ": " << ex.what() << '\n';
    return exit_error;
  }
  if (!orders.empty()) {
    job.orders = orders;
  }
  return run(sub->get_name(), job, options, std::cout, std::cerr);
}
