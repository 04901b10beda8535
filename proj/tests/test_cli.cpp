#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PLACTIC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(PLACTIC_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "plactic_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, PtabSampleWord) {
  const auto r = run("ptab \"3^0.8 1^0.5 4^1.1 1^0.9 2^1.6 3^0.7 1^0.7 2^0.2\"");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("shape"), json({"3.7", "1.9", "0.9"}));
  EXPECT_EQ(j.at("reading_word"), "3^0.7 4^0.2 2^0.7 3^0.3 4^0.9 1^2.1 2^1.1 3^0.5");
}

TEST(Cli, PtabSmallCases) {
  auto r = run("ptab \"\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out).at("rows").empty());
  r = run("ptab \"2^0.5 1^0.8\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("rows"), json({"1^0.8", "2^0.5"}));
  r = run("ptab --trace \"1^0.3 2^0.2 1^0.2\"");
  ASSERT_EQ(r.code, 0);
  const auto t = json::parse(r.out).at("trace");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].at("kind"), "K1");
  EXPECT_EQ(t[0].at("lx"), "0.3");
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("ptab \"1^1 2-3\"").code, 2);
  EXPECT_EQ(run("ptab").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("rsk /nonexistent/matrix.csv").code, 2);
  EXPECT_EQ(run("insert \"2^0.2 1^0.1\" \"1^1\"").code, 2);
  EXPECT_EQ(run("delete \"1^0.8 2^0.5\" --shape 5").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, InsertDeleteRoundTrip) {
  auto r = run("insert \"3^0.8 4^1.1 1^1.4 2^1.6 3^0.7\" \"1^0.7 2^0.2\"");
  ASSERT_EQ(r.code, 0);
  const auto ins = json::parse(r.out);
  EXPECT_EQ(ins.at("reading_word"), "3^0.7 4^0.2 2^0.7 3^0.3 4^0.9 1^2.1 2^1.1 3^0.5");
  r = run("delete \"" + ins.at("reading_word").get<std::string>() + "\" --shape 3.7,1.9");
  ASSERT_EQ(r.code, 0);
  const auto del = json::parse(r.out);
  EXPECT_EQ(del.at("row"), "1^0.7 2^0.2");
  EXPECT_EQ(del.at("tableau").at("reading_word"), "3^0.8 4^1.1 1^1.4 2^1.6 3^0.7");
}

TEST(Cli, GreeneAndOracle) {
  auto r = run("greene --k 2 --oracle \"2^0.5 1^0.8\"");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("a_k"), "1.3");
  EXPECT_EQ(j.at("oracle"), "1.3");
  EXPECT_EQ(run("greene --oracle \"1^20\"").code, 2);
}

TEST(Cli, KnuthEqualAndTraceReplay) {
  auto r = run("knuth-equal \"1^0.3 2^0.2 1^0.2\" \"2^0.2 1^0.5\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out).at("equivalent").get<bool>());
  r = run("knuth-equal \"1^1\" \"2^1\"");
  EXPECT_FALSE(json::parse(r.out).at("equivalent").get<bool>());

  const std::string w = "\"3^0.8 1^0.5 4^1.1 1^0.9 2^1.6 3^0.7 1^0.7 2^0.2\"";
  const auto trace_file = scratch("trace.json");
  ASSERT_EQ(run("knuth-trace " + w + " -o " + trace_file.string()).code, 0);
  r = run("knuth-trace " + w + " --replay " + trace_file.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out).at("valid").get<bool>());

  // A tampered certificate is rejected.
  auto doc = json::parse(slurp(trace_file));
  doc.at("trace")[0]["lx"] = "0.05";
  std::ofstream(trace_file) << doc.dump();
  r = run("knuth-trace " + w + " --replay " + trace_file.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(json::parse(r.out).at("valid").get<bool>());
}

TEST(Cli, RskSampleMatrixAllAlgorithms) {
  const auto r = run("rsk --algo all --emit-gt " + data("sample_matrix.csv"));
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j.at("agreement").get<bool>());
  EXPECT_FALSE(j.contains("timing_ms"));
  const std::vector<double> printed{2.71, 1.81, 0.61};
  ASSERT_EQ(j.at("shape").size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(std::stod(j.at("shape")[i].get<std::string>()), printed[i], 0.02);
  }
  EXPECT_EQ(j.at("gt").at("P").at("size"), 4);
  EXPECT_EQ(j.at("gt").at("Q").at("size"), 3);
  EXPECT_TRUE(json::parse(run("rsk --timing " + data("sample_matrix.csv")).out).contains("timing_ms"));
}

TEST(Cli, RskOutputIsDeterministic) {
  const auto a = run("rsk --algo all --emit-gt " + data("sample_matrix.csv"));
  const auto b = run("rsk --algo all --emit-gt " + data("sample_matrix.csv"));
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, RskSingleEntryAndInverse) {
  const auto m = scratch("one.csv");
  std::ofstream(m) << "0.4\n";
  auto r = run("rsk " + m.string());
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("P").at("rows"), json({"1^0.4"}));
  EXPECT_EQ(j.at("Q").at("rows"), json({"1^0.4"}));

  const auto out = scratch("sample_rsk.json");
  ASSERT_EQ(run("rsk " + data("sample_matrix.csv") + " -o " + out.string()).code, 0);
  r = run("rsk-inverse " + out.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.16,0.29,0.68,0.44\n0.29,0.7,0.38,0.45\n0.32,0.29,0.43,0.7\n");
  r = run("rsk-inverse --format json " + out.string());
  EXPECT_EQ(json::parse(r.out).at("m"), 3);
  r = run("rsk-inverse --p \"2^0.5 1^1\" --q \"2^0.5 1^1\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.5,0.5\n0.5,0\n");
  EXPECT_EQ(run("rsk-inverse --p \"1^1\" --q \"1^2\"").code, 2);
}

TEST(Cli, GtBothWays) {
  auto r = run("gt --n 5 \"3^0.8 4^1.1 1^1.4 2^1.6 3^0.7\"");
  ASSERT_EQ(r.code, 0);
  const auto g = json::parse(r.out);
  EXPECT_EQ(g.at("rows")[2], json({"3.7", "0.8", "0"}));
  const auto pattern = scratch("gt.json");
  std::ofstream(pattern) << g.dump();
  r = run("gt --inverse @" + pattern.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("reading_word"), "3^0.8 4^1.1 1^1.4 2^1.6 3^0.7");
  EXPECT_EQ(run("gt --inverse '[[\"1\"],[\"0\",\"1\"]]'").code, 2);
}

TEST(Cli, VizWritesSvg) {
  const auto svg = scratch("t.svg");
  ASSERT_EQ(run("viz \"3^0.8 4^1.1 1^1.4 2^1.6 3^0.7\" -o " + svg.string()).code, 0);
  const auto text = slurp(svg);
  EXPECT_NE(text.find("data-length=\"3.7\""), std::string::npos);
  EXPECT_NE(text.find("data-length=\"1.9\""), std::string::npos);
  // A word that is not a tableau is rendered through P(w).
  const auto r = run("viz \"2^0.5 1^0.8\" --ppu 10");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("width=\"8.000\""), std::string::npos);
  EXPECT_NE(run("viz \"\"").out.find("<svg"), std::string::npos);
}

TEST(Cli, Fuzz) {
  auto r = run("fuzz --seed 0 --cases 100");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out).at("ok").get<bool>());
  r = run("fuzz --cases 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("cases"), 0);
  r = run("fuzz --cases 30 --inject-fault maximal-leading-points");
  ASSERT_EQ(r.code, 1);
  const auto j = json::parse(r.out);
  ASSERT_FALSE(j.at("failures").empty());
  for (const auto& f : j.at("failures")) {
    EXPECT_EQ(f.at("property"), "triple-agreement");
    EXPECT_LE(f.at("matrix").at("m").get<int>(), 2);
    EXPECT_LE(f.at("matrix").at("n").get<int>(), 2);
  }
  EXPECT_EQ(run("fuzz --seed 3 --cases 10").out, run("fuzz --seed 3 --cases 10").out);
}
