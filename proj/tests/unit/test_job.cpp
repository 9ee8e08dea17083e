#include "doctest.h"

#include <cstdlib>
#include <filesystem>

#include "ocmf/error.hpp"
#include "ocmf/job.hpp"

using namespace ocmf;

namespace {

JobConfig config(Command c, int p, int weight, int dim, int prec) {
  JobConfig j;
  j.command = c;
  j.p = p;
  j.weight = weight;
  j.dim = dim;
  j.precision = prec;
  return j;
}

}  // namespace

TEST_CASE("config validation exits with 2") {
  ::unsetenv("OCMF_CACHE_DIR");
  CHECK(run(config(Command::Slopes, 13, 0, 4, 8)).exit_code == 2);
  CHECK(run(config(Command::Slopes, 11, 2, 4, 8)).exit_code == 2);
  CHECK(run(config(Command::Slopes, 11, 0, 0, 8)).exit_code == 2);
  CHECK(run(config(Command::Slopes, 11, 0, 4, 0)).exit_code == 2);
  CHECK(run(config(Command::Compare, 11, 4, 4, 8)).exit_code == 2);
  auto dims = config(Command::Stabilize, 11, 0, 4, 8);
  dims.dims = {6, 4};
  CHECK(run(dims).exit_code == 2);
  const auto out = run(config(Command::Clay, 13, 0, 1, 1));
  CHECK(out.exit_code == 2);
  CHECK(out.report["error"]["kind"] == "config");
  CHECK(validate(config(Command::Clay, 5, 0, 1, 1)) == std::nullopt);
}

TEST_CASE("module errors exit with 1 and a structured error") {
  auto c = config(Command::Charpoly, 11, 0, 4, 8);
  c.qprec = 20;
  const auto out = run(c);
  CHECK(out.exit_code == 1);
  CHECK(out.report["error"]["kind"] == "precision_shortfall");
  CHECK(out.report["error"]["message"].get<std::string>().find("qprec") != std::string::npos);
}

TEST_CASE("clay p = 5") {
  auto c = config(Command::Clay, 5, 0, 1, 1);
  c.count = 1;
  const auto out = run(c);
  CHECK(out.exit_code == 0);
  const auto& preds = out.report["clay"]["predictions"];
  REQUIRE(preds.size() == 1);
  CHECK(preds[0]["slope"] == "1");
}

TEST_CASE("charpoly report") {
  const auto out = run(config(Command::Charpoly, 11, 0, 6, 13));
  REQUIRE(out.exit_code == 0);
  const auto& cs = out.report["char_series"];
  CHECK(cs.size() == 14);
  CHECK(cs[0]["coeff"] == "1");
  CHECK(cs[5]["coeff"] == "5939670233629");
  CHECK(cs[5]["valuation"] == "10");
  CHECK(cs[6]["valuation"] == ">=13");
  for (const auto& e : cs) CHECK(e["coeff"].is_string());
  CHECK(out.report["precision_report"]["precision"] == 13);
  CHECK(out.report["params"]["qprec"] == "auto");
  CHECK(out.report["versions"]["schema"] == kSchemaVersion);
  CHECK(out.text.find("c_5") != std::string::npos);
}

TEST_CASE("slopes report at p = 17, k = 4") {
  const auto out = run(config(Command::Slopes, 17, 4, 6, 13));
  REQUIRE(out.exit_code == 0);
  CHECK(out.report["cuspidal_slopes"] == nlohmann::json::array({"1", "1", "1", "1", "3", "4"}));
  const auto& s = out.report["slopes"];
  CHECK(s[0]["slope"] == "0");
  CHECK(s[0]["cuspidal"] == false);
  CHECK(s[1]["slope"] == "1");
  CHECK(s[1]["mult"] == 4);
  CHECK(s[1]["classical"] == "yes");
  CHECK(s[2]["classical"] == "boundary");
  CHECK(s[3]["classical"] == "unknown");
}

TEST_CASE("determinism apart from the timestamp") {
  auto c = config(Command::Eigen, 19, 0, 4, 6);
  c.seed = 7;
  const auto a = run(c), b = run(c);
  REQUIRE(a.exit_code == 0);
  CHECK(strip_timestamp(a.report).dump() == strip_timestamp(b.report).dump());
  CHECK(a.report["eigen"]["seed"] == "7");
  CHECK(a.report.contains("timestamp"));
}

TEST_CASE("cache transparency") {
  const auto dir = std::filesystem::temp_directory_path() / ("ocmf-job-cache-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  auto c = config(Command::Stabilize, 11, 0, 3, 6);
  c.dims = {3, 4};
  const auto plain = run(c);
  c.cache_dir = dir.string();
  const auto cold = run(c);
  const auto warm = run(c);
  std::filesystem::remove_all(dir);
  REQUIRE(plain.exit_code == 0);
  CHECK(cold.warnings.empty());
  auto strip = [](nlohmann::json j) {
    j = strip_timestamp(j);
    j.erase("params");
    return j.dump();
  };
  CHECK(strip(cold.report) == strip(plain.report));
  CHECK(strip(warm.report) == strip(plain.report));
  CHECK(plain.report["stabilization"]["pairs"].size() == 1);
}

TEST_CASE("compare report") {
  const auto out = run(config(Command::Compare, 11, 0, 6, 13));
  REQUIRE(out.exit_code == 0);
  const auto& cmp = out.report["clay"]["comparison"];
  CHECK(cmp["window"] == 5);
  CHECK(cmp["match"] == true);
}

TEST_CASE("command names") {
  for (auto c : {Command::Charpoly, Command::Slopes, Command::Eigen, Command::Clay, Command::Compare,
                 Command::Stabilize})
    CHECK(parse_command(to_string(c)) == c);
  CHECK_FALSE(parse_command("frobnicate").has_value());
}
