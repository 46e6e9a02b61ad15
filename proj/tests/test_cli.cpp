#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rabipat/cli.hpp"
#include "rabipat/csv.hpp"

namespace fs = std::filesystem;
using namespace rabipat;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rabipat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "rabipat");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    out_.str("");
    err_.str("");
    return cli::main_entry(int(argv.size()), argv.data(), out_, err_);
  }

  // Runs the installed binary through the shell, for environment handling.
  int run_binary(const std::string& env, const std::string& args) {
    const std::string cmd = env + " " + RABIPAT_CLI_PATH + " " + args + " > " + path("stdout.txt") + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

const char* kSpectrum = R"({"model": "anisotropic",
  "params": {"omega0": 1, "Omega": 100, "xi1": 0.1, "k_over_kc": 0.5}, "levels": 4})";

}  // namespace

TEST(Csv, NumbersUseSeventeenDigits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(-2.5e-300), "-2.5e-300");
  EXPECT_EQ(format_number(2.0 / 3.0), "0.66666666666666663");
  Table t;
  t.header = {"a"};
  t.add_row({std::string("x,y")});
  EXPECT_THROW(write_csv(t), std::exception);
  EXPECT_THROW(t.add_row({1.0, 2.0}), std::exception);
}

TEST(Csv, RoundTripIsByteIdentical) {
  Table t;
  t.comments = {"rabipat test", "config_hash: fnv1a64:0"};
  t.header = {"label", "value", "other"};
  t.add_row({std::string("ok"), 1.0 / 3.0, -0.0});
  t.add_row({std::string("odd"), std::nan(""), INFINITY});
  t.add_row({std::string("tiny"), 5e-324, 1.7976931348623157e308});
  const std::string text = write_csv(t);
  const Table back = read_csv(text);
  EXPECT_EQ(write_csv(back), text);
  EXPECT_EQ(std::get<double>(back.rows[0][1]), 1.0 / 3.0);
  EXPECT_EQ(back.comments, t.comments);
}

TEST(Csv, Fnv1a) {
  EXPECT_EQ(hex64(fnv1a64("")), "cbf29ce484222325");
  EXPECT_EQ(hex64(fnv1a64("a")), "af63dc4c8601ec8c");
}

TEST_F(CliTest, SpectrumWritesCsvWithPreamble) {
  const auto cfg = write("s.json", kSpectrum);
  ASSERT_EQ(run({"spectrum", "--config", cfg, "--out", path("s.csv")}), cli::kExitOk) << err_.str();
  const std::string text = slurp(path("s.csv"));
  EXPECT_EQ(text.rfind("# rabipat 1.0.0\n", 0), 0u);
  EXPECT_NE(text.find("# config_hash: fnv1a64:"), std::string::npos);
  const Table t = read_csv(text);
  EXPECT_EQ(t.rows.size(), 4u);
  EXPECT_EQ(write_csv(t), text);
}

TEST_F(CliTest, ConfigHashIgnoresKeyOrder) {
  const auto a = write("a.json", R"({"model": "anisotropic", "params": {"omega0": 1, "Omega": 4, "xi1": 0.1, "xi2": 0.2}})");
  const auto b = write("b.json", R"({"params": {"xi2": 0.2, "xi1": 0.1, "Omega": 4, "omega0": 1}, "model": "anisotropic"})");
  ASSERT_EQ(run({"spectrum", "--config", a, "--out", path("a.csv")}), 0);
  ASSERT_EQ(run({"spectrum", "--config", b, "--out", path("b.csv")}), 0);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
}

TEST_F(CliTest, MalformedConfigWritesNothing) {
  const auto cfg = write("bad.json", R"({"model": "anisotropic", "params": {)");
  EXPECT_EQ(run({"spectrum", "--config", cfg, "--out", path("o.csv")}), cli::kExitConfig);
  EXPECT_FALSE(fs::exists(path("o.csv")));
}

TEST_F(CliTest, UnknownKeysAreRejected) {
  const auto top = write("top.json", R"({"model": "anisotropic", "colour": 1,
    "params": {"omega0": 1, "Omega": 4, "xi1": 0.1, "xi2": 0.2}})");
  EXPECT_EQ(run({"spectrum", "--config", top, "--out", path("o.csv")}), cli::kExitConfig);
  EXPECT_NE(err_.str().find("colour"), std::string::npos);
  const auto nested = write("nested.json", R"({"model": "anisotropic",
    "params": {"omega0": 1, "Omega": 4, "xi1": 0.1, "xi2": 0.2}, "cutoff": {"tolE": 1}})");
  EXPECT_EQ(run({"spectrum", "--config", nested, "--out", path("o.csv")}), cli::kExitConfig);
  const auto param = write("param.json", R"({"model": "anisotropic",
    "params": {"omega0": 1, "Omega": 4, "xi1": 0.1, "xi3": 0.2}})");
  EXPECT_EQ(run({"spectrum", "--config", param, "--out", path("o.csv")}), cli::kExitConfig);
  const auto invalid = write("invalid.json", R"({"model": "anisotropic",
    "params": {"omega0": -1, "Omega": 4, "xi1": 0.1, "xi2": 0.2}})");
  EXPECT_EQ(run({"spectrum", "--config", invalid, "--out", path("o.csv")}), cli::kExitConfig);
  EXPECT_FALSE(fs::exists(path("o.csv")));
}

TEST_F(CliTest, EmptyValidateConfigPrintsUsage) {
  for (const char* text : {"{}", "", "  \n"}) {
    const auto cfg = write("empty.json", text);
    EXPECT_EQ(run({"validate", "--config", cfg}), cli::kExitConfig) << '"' << text << '"';
    EXPECT_NE(err_.str().find("usage:"), std::string::npos) << err_.str();
  }
}

TEST_F(CliTest, BadInvocation) {
  EXPECT_EQ(run({"spectrum", "--config", path("missing.json"), "--out", path("o.csv")}), cli::kExitConfig);
  EXPECT_EQ(run({"bogus", "--config", path("x.json"), "--out", path("o.csv")}), cli::kExitConfig);
  const auto cfg = write("s.json", kSpectrum);
  EXPECT_EQ(run({"spectrum", "--config", cfg}), cli::kExitConfig);
  EXPECT_EQ(run({"spectrum", "--config", cfg, "--out", path("o.csv"), "--threads", "0"}), cli::kExitConfig);
}

TEST_F(CliTest, UnconvergedSweepExitsThreeWithPartialOutput) {
  const auto cfg = write("pd.json", R"({"model": "anisotropic",
    "params": {"omega0": 1, "Omega": 100, "xi1": 0.1},
    "axes": [{"name": "k_over_kc", "values": [0.2, 1.4]}],
    "cutoff": {"n_start": 2, "n_max": 4}})");
  EXPECT_EQ(run({"phase-diagram", "--config", cfg, "--out", path("pd.csv")}), cli::kExitNumerical);
  const Table t = read_csv(slurp(path("pd.csv")));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(std::get<std::string>(t.rows[1][std::size_t(t.column("status"))]), "unconverged");
}

TEST_F(CliTest, PhaseDiagramMatchesSpectrumGap) {
  const auto pd = write("pd.json", R"({"model": "anisotropic",
    "params": {"omega0": 1, "Omega": 100, "xi1": 0.1},
    "axes": [{"name": "k_over_kc", "values": [0.5, 1.0]}]})");
  ASSERT_EQ(run({"phase-diagram", "--config", pd, "--out", path("pd.csv"), "--threads", "2"}), 0) << err_.str();
  const auto sp = write("s.json", kSpectrum);
  ASSERT_EQ(run({"spectrum", "--config", sp, "--out", path("s.csv")}), 0);
  const Table grid = read_csv(slurp(path("pd.csv")));
  const Table levels = read_csv(slurp(path("s.csv")));
  const auto gap = std::get<double>(grid.rows[0][std::size_t(grid.column("gap"))]);
  const auto e0 = std::get<double>(levels.rows[0][std::size_t(levels.column("energy"))]);
  const auto e1 = std::get<double>(levels.rows[1][std::size_t(levels.column("energy"))]);
  EXPECT_EQ(gap, e1 - e0);
  // the critical gap is far smaller than the normal-phase one
  EXPECT_LT(std::get<double>(grid.rows[1][std::size_t(grid.column("gap"))]), 0.5 * gap);
}

TEST_F(CliTest, AnalyticBranches) {
  const auto cfg = write("a.json", R"({"model": "squeezed-frame",
    "params": {"delta_c": 1, "delta_q": 23.56, "r": 1.4142135623730951},
    "coupling": {"values": [0.5, 1.0, 1.5]}})");
  ASSERT_EQ(run({"analytic", "--config", cfg, "--out", path("a.csv")}), 0) << err_.str();
  const Table t = read_csv(slurp(path("a.csv")));
  auto at = [&](std::size_t r, const char* c) { return t.rows[r][std::size_t(t.column(c))]; };
  EXPECT_EQ(std::get<std::string>(at(0, "regime")), "normal");
  EXPECT_EQ(std::get<std::string>(at(1, "regime")), "critical");
  EXPECT_EQ(std::get<double>(at(1, "eps_np")), 0.0);
  EXPECT_EQ(std::get<double>(at(0, "N_c")), 0.0);
  EXPECT_GT(std::get<double>(at(2, "N_c")), 0.0);
  const auto banned = write("b.json", R"({"model": "squeezed-frame",
    "params": {"delta_c": 1, "delta_q": 23.56, "r": 1, "g": 0.1}, "coupling": {"values": [0.5]}})");
  EXPECT_EQ(run({"analytic", "--config", banned, "--out", path("b.csv")}), cli::kExitConfig);
}

TEST_F(CliTest, ValidateInjectedAssemblyIsAnInvariantViolation) {
  const auto ok = write("ok.json", R"({"suites": ["reconstruction", "negative-control"], "draws": 10, "cutoff": 12})");
  EXPECT_EQ(run({"validate", "--config", ok, "--out", path("ok.csv"), "--seed", "3"}), cli::kExitOk) << out_.str();
  EXPECT_NE(out_.str().find("PASS"), std::string::npos);
  const std::string text = slurp(path("ok.csv"));
  EXPECT_NE(text.find("erratum pattern-assembly"), std::string::npos);
  EXPECT_EQ(write_csv(read_csv(text)), text);

  const auto bad = write("bad.json", R"({"suites": ["reconstruction"], "draws": 5, "cutoff": 12,
    "inject_printed_assembly": true})");
  EXPECT_EQ(run({"validate", "--config", bad, "--out", path("bad.csv")}), cli::kExitInternal);
  EXPECT_NE(out_.str().find("FAIL"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("bad.csv")));
}

TEST_F(CliTest, SeedMakesValidateReproducible) {
  const auto cfg = write("v.json", R"({"suites": ["reconstruction"], "draws": 8, "cutoff": 10})");
  ASSERT_EQ(run({"validate", "--config", cfg, "--out", path("a.csv"), "--seed", "42"}), 0);
  ASSERT_EQ(run({"validate", "--config", cfg, "--out", path("b.csv"), "--seed", "42"}), 0);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
}

TEST_F(CliTest, ThreadsFromEnvironment) {
  const auto cfg = write("pd.json", R"({"model": "anisotropic",
    "params": {"omega0": 1, "Omega": 100, "xi1": 0.1},
    "axes": [{"name": "k_over_kc", "start": 0, "stop": 0.8, "points": 5}]})");
  const std::string args = "phase-diagram --config " + cfg + " --out ";
  EXPECT_EQ(run_binary("RABIPAT_THREADS=3", args + path("env.csv")), 0);
  EXPECT_EQ(run_binary("RABIPAT_THREADS=1", args + path("one.csv")), 0);
  EXPECT_EQ(slurp(path("env.csv")), slurp(path("one.csv")));
  EXPECT_EQ(run_binary("RABIPAT_THREADS=zero", args + path("bad.csv")), cli::kExitConfig);
  EXPECT_FALSE(fs::exists(path("bad.csv")));
  EXPECT_EQ(run_binary("RABIPAT_THREADS=zero", args + path("flag.csv") + " --threads 2"), 0);
}
