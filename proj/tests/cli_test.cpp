#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli_app.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ndi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ndi::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Runs the built executable; stderr is folded into stdout.
Outcome run_binary(const std::string& args) {
  const std::string cmd = std::string(NDI_TOOL_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}, {}};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, {}};
}

std::string data(const char* name) { return (fs::path(NDI_TEST_DATA_DIR) / name).string(); }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("ndi_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name, const std::string& content = {}) const {
    const auto p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p;
  }

 private:
  fs::path path_;
};

TEST(Cli, NdiKarateJson) {
  const auto r = run_cli({"ndi", data("karate.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["network"]["n"], 34);
  EXPECT_NEAR(j["network"]["ndi"].get<double>(), 1.19664, 1e-9);
  EXPECT_EQ(j["nodes"].size(), 34u);
  EXPECT_TRUE(j.contains("nsi"));
}

TEST(Cli, NdiCsvAndSideOutputs) {
  TempDir tmp;
  const auto svg = tmp.file("plot.svg");
  const auto ndm = tmp.file("ndm.csv");
  const auto r = run_cli({"ndi", data("karate.txt"), "--format", "csv", "--svg", svg.string(),
                          "--ndm-csv", ndm.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 5), "node,");
  EXPECT_TRUE(fs::exists(svg));
  EXPECT_GT(fs::file_size(ndm), 0u);
}

TEST(Cli, ConventionFlagChangesNdi) {
  const auto a = nlohmann::json::parse(run_cli({"ndi", data("karate.txt")}).out);
  const auto b = run_cli({"ndi", data("karate.txt"), "--convention", "nondiag-nm1"});
  ASSERT_EQ(b.code, 0);
  const auto jb = nlohmann::json::parse(b.out);
  EXPECT_EQ(jb["network"]["convention"], "nondiag-nm1");
  EXPECT_NE(a["network"]["ndi"], jb["network"]["ndi"]);
}

TEST(Cli, RegularGraphIsDegenerate) {
  TempDir tmp;
  const auto c6 = tmp.file("c6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  const auto r = run_cli({"ndi", c6.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["network"]["ndi"], 1.0);
  EXPECT_TRUE(j["network"]["degenerate"].get<bool>());
  EXPECT_EQ(j["network"]["dissimilar_count"], 0);
}

TEST(Cli, DisconnectedInputNeedsLcc) {
  TempDir tmp;
  const auto g = tmp.file("split.txt", "a b\nb c\nc a\nc d\nx y\n");
  const auto r = run_cli({"ndi", g.string()});
  EXPECT_EQ(r.code, ndi::cli::kInputError);
  EXPECT_NE(r.err.find("graph has 2 components"), std::string::npos) << r.err;
  const auto lcc = run_cli({"ndi", g.string(), "--lcc"});
  ASSERT_EQ(lcc.code, 0) << lcc.err;
  EXPECT_EQ(nlohmann::json::parse(lcc.out)["network"]["n"], 4);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_cli({"ndi", "/nonexistent.txt"}).code, ndi::cli::kInputError);
  EXPECT_EQ(run_cli({"ndi", data("karate.txt"), "--convention", "median"}).code, ndi::cli::kInputError);
  EXPECT_EQ(run_cli({"bogus"}).code, ndi::cli::kInputError);
  TempDir tmp;
  const auto bad = tmp.file("bad.txt", "0 1\n2\n");
  const auto r = run_cli({"nsi", bad.string()});
  EXPECT_EQ(r.code, ndi::cli::kInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, NsiMethodsAgree) {
  const auto a = nlohmann::json::parse(run_cli({"nsi", data("karate.txt")}).out);
  const auto b = nlohmann::json::parse(run_cli({"nsi", data("karate.txt"), "--nsi-method", "bsearch"}).out);
  EXPECT_NEAR(a["nsi"]["nsi"].get<double>(), 0.8453, 0.01);
  EXPECT_NEAR(a["nsi"]["nsi"].get<double>(), b["nsi"]["nsi"].get<double>(), 1e-5);
  EXPECT_EQ(b["nsi"]["method"], "binary_search");
}

TEST(Cli, CentralityCsv) {
  const auto r = run_cli({"centrality", data("karate.txt"), "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "node,deg,evc,bwc,clc");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 35);
}

TEST(Cli, FitFromSummaryCsv) {
  const auto r = run_cli({"fit", data("published_summary.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["fits"].size(), 2u);
  EXPECT_NEAR(j["fits"][0]["r_squared"].get<double>(), 0.4083, 0.01);
  EXPECT_NEAR(j["fits"][1]["r_squared"].get<double>(), 0.5382, 0.01);
}

TEST(Cli, BatchOfRegularGraphs) {
  TempDir tmp;
  std::string k5, c8;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5 += std::to_string(i) + " " + std::to_string(j) + "\n";
  for (int i = 0; i < 8; ++i) c8 += std::to_string(i) + " " + std::to_string((i + 1) % 8) + "\n";
  tmp.file("k5.txt", k5);
  tmp.file("c8.txt", c8);
  const auto manifest = tmp.file("m.csv", "name,path\nK5,k5.txt\nC8,c8.txt\nMissing,nope.txt\n");
  const auto r = run_cli({"batch", manifest.string(), "--svg", (tmp.file("plot")).string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["networks"].size(), 2u);
  for (const auto& n : j["networks"]) {
    EXPECT_NEAR(n["lambda_sp"].get<double>(), 1.0, 1e-6);
    EXPECT_EQ(n["ndi"], 1.0);
  }
  ASSERT_EQ(j["failures"].size(), 1u);
  EXPECT_EQ(j["failures"][0]["kind"], "input");
  EXPECT_TRUE(j["study"].contains("error"));
  EXPECT_TRUE(fs::exists(tmp.file("plot_lambda_sp.svg")));
}

TEST(Cli, BatchAllFailedIsError) {
  TempDir tmp;
  const auto manifest = tmp.file("m.csv", "name,path\nA,nope.txt\n");
  EXPECT_EQ(run_cli({"batch", manifest.string()}).code, ndi::cli::kInputError);
}

TEST(Cli, BatchFitFromCsv) {
  const auto r = run_cli({"batch", "--fit-from-csv", data("published_summary.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["study"]["fits"][0]["r_squared"].get<double>(), 0.4083, 0.01);
}

TEST(CliBinary, KarateEndToEndAndDeterministic) {
  const auto a = run_binary("ndi " + data("karate.txt"));
  const auto b = run_binary("ndi " + data("karate.txt"));
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NEAR(nlohmann::json::parse(a.out)["network"]["ndi"].get<double>(), 1.19664, 1e-9);
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(run_binary("ndi /nonexistent.txt").code, 1);
  EXPECT_EQ(run_binary("--help").code, 0);
}

}  // namespace
