#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kCli = RATEVOL_CLI_PATH;

struct RunResult {
  int exit_code;
  std::string out_dir;
};

// Runs the binary with a fresh output directory; stdout/stderr discarded.
RunResult run(const std::string& args, const std::string& tag) {
  const std::string dir = "/tmp/ratevol_cli_" + tag;
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cmd =
      kCli + " " + args + " --out " + dir + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return {WEXITSTATUS(status), dir};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("simulate is byte-identical under the same seed") {
  auto a = run("simulate --kind msm --K 5 --n 500 --seed 42", "det_a");
  auto b = run("simulate --kind msm --K 5 --n 500 --seed 42", "det_b");
  auto c = run("simulate --kind msm --K 5 --n 500 --seed 43", "det_c");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  REQUIRE(c.exit_code == 0);
  // provenance footers differ only through the seed, which is part of the
  // command line; compare the data body
  auto strip = [](std::string s) {
    return s.substr(0, s.rfind("# provenance"));
  };
  CHECK(strip(slurp(a.out_dir + "/sim_msm.csv")) ==
        strip(slurp(b.out_dir + "/sim_msm.csv")));
  CHECK(strip(slurp(a.out_dir + "/sim_msm.csv")) !=
        strip(slurp(c.out_dir + "/sim_msm.csv")));
}

TEST_CASE("missing input file exits with code 2") {
  auto r = run("fit --input /nonexistent/file.csv --models cev-normal --seed 1",
               "missing");
  CHECK(r.exit_code == 2);
}

TEST_CASE("unknown options and kinds exit with code 4") {
  auto a = run("simulate --kind bogus --seed 1", "bogus_kind");
  CHECK(a.exit_code == 4);
  auto b = run("simulate --kind msm", "no_seed");
  CHECK(b.exit_code == 4);  // stochastic command without --seed
  auto c = run("frobnicate", "bad_cmd");
  CHECK(c.exit_code == 4);
}

TEST_CASE("dyadic cascade with p = 0.5 emits the uniform measure") {
  auto r = run("cascade --kind dyadic --p 0.5 --depth 4 --seed 3", "uniform");
  REQUIRE(r.exit_code == 0);
  auto text = slurp(r.out_dir + "/cascade_dyadic.csv");
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "boundary,cumulative_mass");
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    const double boundary = std::stod(line.substr(0, comma));
    const double theta = std::stod(line.substr(comma + 1));
    CHECK(theta == doctest::Approx(boundary).epsilon(1e-10));
    ++rows;
  }
  CHECK(rows == 17);  // 2^4 cells -> 17 boundaries
}

TEST_CASE("every artifact carries a provenance footer") {
  auto r = run("cascade --kind dyadic --p 0.3 --depth 3 --seed 5", "prov");
  REQUIRE(r.exit_code == 0);
  auto text = slurp(r.out_dir + "/cascade_dyadic.csv");
  CHECK(text.find("# provenance config_hash=") != std::string::npos);
  CHECK(text.find("seed=5") != std::string::npos);
}

TEST_CASE("scaling with a construction emits the analytic oracle column") {
  auto r = run("scaling --construction dyadic --p 0.3 --depth 9 "
               "--realizations 5 --seed 7",
               "scaling");
  REQUIRE(r.exit_code == 0);
  auto text = slurp(r.out_dir + "/zeta_table.csv");
  CHECK(text.find("q,zeta,se,analytic,abs_gap") != std::string::npos);
  CHECK(text.find("max_abs_gap") != std::string::npos);
}

TEST_CASE("fit on a simulated series round-trips through compare") {
  auto sim = run("simulate --kind cev --n 2000 --seed 11 --sigma 0.02 "
                 "--gamma 0.3 --r0 5",
                 "roundtrip_sim");
  REQUIRE(sim.exit_code == 0);
  const std::string input = sim.out_dir + "/sim_cev.csv";
  auto fit = run("fit --input " + input +
                     " --models cev-normal,cev-t --starts 2 --seed 13 --no-se",
                 "roundtrip_fit");
  REQUIRE(fit.exit_code == 0);
  auto table = slurp(fit.out_dir + "/fit_table.txt");
  CHECK(table.find("cev-normal") != std::string::npos);

  auto cmp = run("compare --reference " + fit.out_dir +
                     "/cev-normal.perobs.csv --alt " + fit.out_dir +
                     "/cev-t.perobs.csv",
                 "roundtrip_cmp");
  REQUIRE(cmp.exit_code == 0);
  auto report = slurp(cmp.out_dir + "/compare_table.txt");
  CHECK(report.find("reference") != std::string::npos);
  CHECK(report.find("Vuong") != std::string::npos);
}

TEST_CASE("config file values are used and flags override them") {
  const std::string cfg = "/tmp/ratevol_cli_cfg.ini";
  {
    std::ofstream out(cfg);
    out << "[simulate]\n"
        << "kind=msm\n"
        << "K=4\n"
        << "n=50\n"
        << "seed=21\n";
  }
  auto a = run("--config " + cfg + " simulate", "cfg_a");
  REQUIRE(a.exit_code == 0);
  auto body = slurp(a.out_dir + "/sim_msm.csv");
  int rows = 0;
  for (char ch : body)
    if (ch == '\n') ++rows;
  CHECK(rows == 52);  // header + 50 + footer

  // flag overrides the config value
  auto b = run("--config " + cfg + " simulate --n 20", "cfg_b");
  REQUIRE(b.exit_code == 0);
  auto body_b = slurp(b.out_dir + "/sim_msm.csv");
  int rows_b = 0;
  for (char ch : body_b)
    if (ch == '\n') ++rows_b;
  CHECK(rows_b == 22);
}
