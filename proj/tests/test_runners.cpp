#include <doctest.h>

#include "fraclab/errors.hpp"
#include "fraclab/runners.hpp"

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace fraclab;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  const fs::path d = fs::temp_directory_path() /
                     ("fraclab_test_" + tag + "_" +
                      std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("config parser: flat keys, comments, sections") {
  const auto cfg = parse_config(
      "# comment\n"
      "B = 1.5\n"
      "gamma=2   # trailing comment\n"
      "\n"
      "[mc]\n"
      "seed = 7\n");
  CHECK(cfg.at("B") == "1.5");
  CHECK(cfg.at("gamma") == "2");
  CHECK(cfg.at("mc.seed") == "7");
  CHECK(cfg.size() == 3);

  CHECK_THROWS_WITH_AS(parse_config("B = 1\nnonsense line\n"),
                       doctest::Contains("line 2"), Error);
}

TEST_CASE("shortest double formatting round-trips") {
  for (double v : {0.1, -M_PI, 1.0 / 3.0, 1e-300, 6.02e23, 0.0, -0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("FNV-1a digest of known strings") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("spectral-table runs are byte-identical across reruns") {
  const std::string cfg = "B = 1\ngamma = 1\nk_points = 64\n";
  const auto d1 = fresh_dir("st1");
  const auto d2 = fresh_dir("st2");
  RunOptions opt{"spectral-table", cfg, d1.string(), 5};
  const auto r1 = run_subcommand(opt);
  REQUIRE(r1.exit_code == 0);
  opt.out_dir = d2.string();
  const auto r2 = run_subcommand(opt);
  REQUIRE(r2.exit_code == 0);

  CHECK(fs::exists(d1 / "spectral_table.csv"));
  CHECK(fs::exists(d1 / "manifest.json"));
  CHECK(slurp(d1 / "spectral_table.csv") == slurp(d2 / "spectral_table.csv"));

  // the manifest records the config digest
  const std::string manifest = slurp(d1 / "manifest.json");
  CHECK(manifest.find(fnv1a_hex(cfg)) != std::string::npos);
  CHECK(manifest.find("spectral_table.csv") != std::string::npos);
  fs::remove_all(d1);
  fs::remove_all(d2);
}

TEST_CASE("configuration errors map to exit code 2") {
  const auto d = fresh_dir("err");
  // missing required field intensity
  auto r = run_subcommand({"spectral-table", "gamma = 1\n", d.string(), 1});
  CHECK(r.exit_code == 2);
  CHECK(r.message.find("B") != std::string::npos);

  r = run_subcommand({"no-such-command", "", d.string(), 1});
  CHECK(r.exit_code == 2);

  r = run_subcommand(
      {"levy-exponent",
       "B = 1\ngamma = 1\ndelta = 0.75\ntheta_min = 5\ntheta_max = 1\n",
       d.string(), 1});
  CHECK(r.exit_code == 2);

  r = run_subcommand({"spectral-table", "B = 1\ngamma = oops\n", d.string(), 1});
  CHECK(r.exit_code == 2);
  fs::remove_all(d);
}

TEST_CASE("levy-exponent subcommand writes the table") {
  const auto d = fresh_dir("levy");
  const auto r = run_subcommand(
      {"levy-exponent",
       "B = 1\ngamma = 1\ndelta = 0.75\ntheta_points = 5\n", d.string(), 1});
  REQUIRE(r.exit_code == 0);
  const std::string csv = slurp(d / "levy_exponent.csv");
  CHECK(csv.find("theta,phi_quad,phi_fast") != std::string::npos);
  CHECK(!r.outputs.empty());
  fs::remove_all(d);
}

TEST_CASE("verify-all runs a selected criterion") {
  const auto d = fresh_dir("verify");
  const auto r = run_subcommand({"verify-all", "criteria = 1\n", d.string(),
                                 20260824ULL});
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(d / "verify_all.json"));
  CHECK(r.message.find("pass") != std::string::npos);
  fs::remove_all(d);
}

TEST_CASE("mc-charfn subcommand end to end") {
  const auto d = fresh_dir("charfn");
  const auto r = run_subcommand(
      {"mc-charfn",
       "B = 1\ngamma = 1\ndelta = 0.75\nN = 1000\nt = 1\ntheta = 0.5,1\n"
       "M = 100\n",
       d.string(), 99});
  REQUIRE(r.exit_code == 0);
  CHECK(fs::exists(d / "mc_charfn.csv"));
  CHECK(fs::exists(d / "manifest.json"));
  fs::remove_all(d);
}
