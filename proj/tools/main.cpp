#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ocmf/job.hpp"

namespace {

void add_pipeline_flags(CLI::App* cmd, ocmf::JobConfig& c, std::string& qprec) {
  cmd->add_option("--p", c.p, "prime (11, 17 or 19)")->capture_default_str();
  cmd->add_option("--weight", c.weight, "weight k (0 or even >= 4)")->capture_default_str();
  cmd->add_option("--dim", c.dim, "basis half-size d (matrix is (2d+1)x(2d+1))")->capture_default_str();
  cmd->add_option("--prec", c.precision, "p-adic precision N")->capture_default_str();
  cmd->add_option("--qprec", qprec, "q-adic precision or 'auto'")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"U_p on overconvergent p-adic modular forms for p = 11, 17, 19"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ocmf::kVersion));

  ocmf::JobConfig c;
  std::string qprec = "auto";
  std::string json_path;
  std::string cache_dir;
  std::uint64_t seed = 0;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
    cmd->add_option("--cache-dir", cache_dir, "q-series cache directory (default $OCMF_CACHE_DIR)");
  };

  auto* charpoly = app.add_subcommand("charpoly", "characteristic series det(1 - t U_p)");
  auto* slopes = app.add_subcommand("slopes", "Newton polygon slopes with classicality flags");
  auto* eigen = app.add_subcommand("eigen", "lowest-slope cuspidal eigenform by power iteration");
  auto* clay = app.add_subcommand("clay", "conjectural slope formulas");
  auto* compare = app.add_subcommand("compare", "compare formula slopes with computed slopes");
  auto* stabilize = app.add_subcommand("stabilize", "coefficient stabilization across dimensions");

  for (auto* cmd : {charpoly, slopes, eigen, compare, stabilize}) {
    add_pipeline_flags(cmd, c, qprec);
    common(cmd);
  }
  eigen->add_option("--iters", c.iterations, "iterations")->capture_default_str();
  eigen->add_option("--seed", seed, "random unit start with this seed (default: index +1 vector)");
  clay->add_option("--p", c.p, "prime (5, 11, 17 or 19)")->capture_default_str();
  clay->add_option("--count", c.count, "number of indices (default two periods)");
  common(clay);
  compare->add_option("--count", c.count, "number of formula indices (default two periods)");
  compare->add_option("--window", c.window, "slopes compared (default all usable)");
  stabilize->add_option("--dims", c.dims, "ascending dimensions (default dim, dim+2)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (auto* cmd : app.get_subcommands())
    if (auto parsed = ocmf::parse_command(cmd->get_name())) c.command = *parsed;
  if (qprec != "auto") {
    try {
      std::size_t used = 0;
      c.qprec = std::stoi(qprec, &used);
      if (used != qprec.size()) throw std::invalid_argument(qprec);
    } catch (const std::exception&) {
      std::cerr << "config error: --qprec must be an integer or 'auto'\n";
      return 2;
    }
  }
  if (eigen->count("--seed")) c.seed = seed;
  if (!json_path.empty()) c.json_path = json_path;
  if (!cache_dir.empty()) c.cache_dir = cache_dir;

  const auto out = ocmf::run(c);
  for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
  if (c.json_path) {
    const std::string body = out.report.dump(2) + "\n";
    if (*c.json_path == "-") {
      std::cout << body;
    } else {
      std::ofstream f(*c.json_path);
      if (!f || !(f << body)) {
        std::cerr << "cannot write " << *c.json_path << "\n";
        return 1;
      }
    }
  }
  if (!c.json_path || *c.json_path != "-") (out.exit_code == 0 ? std::cout : std::cerr) << out.text;
  return out.exit_code;
}
