#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "metdim/verify.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("metdim_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Run cli(const std::string& args) {
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = std::string(METDIM_BINARY) + " " + args + " 2>" + err.string();
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

}  // namespace

TEST(Cli, ConstructJohnsonPartition) {
  const auto r = cli("construct --family johnson --n 9 --k 3 --method johnson-partition -o " + path("j93.txt"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("predicted_size 7"), std::string::npos);
  std::ifstream in(path("j93.txt"));
  EXPECT_EQ(metdim::read_candidate_set(in).members.size(), 7u);
  EXPECT_EQ(cli("verify -i " + path("j93.txt")).code, 0);
}

TEST(Cli, ConstructToroidal) {
  const auto r = cli("construct --family kneser --n 100 --k 4 --method toroidal:10,10 -o " + path("t.txt"));
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path("t.txt"));
  const auto set = metdim::read_candidate_set(in);
  EXPECT_EQ(set.members.size(), 200u);
  EXPECT_EQ(set.n, 100);
  const auto bad = cli("construct --method toroidal:9,10 --k 4");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("10"), std::string::npos);
}

TEST(Cli, ConstructThenVerifyPipelines) {
  const char* runs[] = {"--family kneser --n 9 --k 3 --method kneser-partition",
                        "--family johnson --n 10 --k 4 --method matrix-basic",
                        "--family kneser --n 10 --k 4 --method kneser-diam3",
                        "--family johnson --n 11 --k 2 --method kneser-partition"};
  int i = 0;
  for (const char* args : runs) {
    const std::string file = path("pipe" + std::to_string(i++) + ".txt");
    ASSERT_EQ(cli(std::string("construct ") + args + " -o " + file).code, 0) << args;
    EXPECT_EQ(cli("verify -i " + file).code, 0) << args;
  }
}

TEST(Cli, DesignKinds) {
  const auto fano = cli("design --kind pg:2 -o " + path("fano.txt"));
  ASSERT_EQ(fano.code, 0) << fano.err;
  EXPECT_NE(fano.out.find("resolves J(7,3) and K(7,3)"), std::string::npos) << fano.out;
  const auto sts = cli("design --kind sts:13 -o " + path("sts13.txt"));
  EXPECT_NE(sts.out.find("blocks 26"), std::string::npos);
  EXPECT_NE(sts.out.find("K(13,3)"), std::string::npos);
  const auto had = cli("design --kind hadamard:3");
  EXPECT_NE(had.err.find("2-(11,5,2)"), std::string::npos) << had.err;
  EXPECT_NE(had.err.find("resolves J(11,5) and K(11,5)"), std::string::npos);
  EXPECT_EQ(cli("design --kind pg:6").code, 2);
  EXPECT_EQ(cli("design --load " + path("fano.txt")).code, 0);
}

TEST(Cli, LoadedGeometryAsCandidate) {
  const auto r = cli(std::string("design --load ") + METDIM_TEST_DATA + "/gq_2_4.txt --as-candidate kneser -o " +
                        path("gq.txt"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pg(2,4,1)"), std::string::npos);
  EXPECT_EQ(cli("verify -i " + path("gq.txt")).code, 0);
}

TEST(Cli, VerifyExitCodes) {
  ASSERT_EQ(cli("design --kind pg:2 --as-candidate kneser -o " + path("fano_k.txt")).code, 0);
  EXPECT_EQ(cli("verify -i " + path("fano_k.txt")).code, 0);
  ASSERT_EQ(cli("design --kind pg:3 --as-candidate kneser -o " + path("pg3.txt")).code, 0);
  const auto fail = cli("verify -i " + path("pg3.txt") + " --workers 4");
  EXPECT_EQ(fail.code, 1);
  EXPECT_NE(fail.out.find("witness_u="), std::string::npos);

  std::ofstream(path("trunc.txt")) << "# kneser 7 3\n1 2 3\n4 5\n";
  const auto trunc = cli("verify -i " + path("trunc.txt"));
  EXPECT_EQ(trunc.code, 2);
  EXPECT_NE(trunc.err.find("line 3"), std::string::npos) << trunc.err;
  EXPECT_EQ(cli("verify -i " + path("missing.txt")).code, 2);
  EXPECT_EQ(cli("verify").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
}

TEST(Cli, VerifyJsonRoundTrips) {
  ASSERT_EQ(cli("design --kind pg:3 --as-candidate kneser -o " + path("pg3j.txt")).code, 0);
  const auto r = cli("verify --json -i " + path("pg3j.txt") + " --report " + path("rep.json"));
  EXPECT_EQ(r.code, 1);
  const auto report = metdim::report_from_json(r.out);
  EXPECT_FALSE(report.resolved);
  EXPECT_EQ(metdim::report_from_json(slurp(path("rep.json"))), report);
}

TEST(Cli, ExactAndBounds) {
  const auto j62 = cli("exact --family johnson --n 6 --k 2 --json");
  ASSERT_EQ(j62.code, 0) << j62.err;
  EXPECT_EQ(nlohmann::json::parse(j62.out).at("dimension").get<int>(), 4);
  const auto j63 = cli("exact --family johnson --n 6 --k 3");
  EXPECT_EQ(j63.code, 0);
  EXPECT_NE(j63.out.find("dimension 4"), std::string::npos);
  const auto slow = cli("exact --family johnson --n 12 --k 3 --timeout 0.05");
  EXPECT_EQ(slow.code, 3);
  EXPECT_NE(slow.out.find("timeout-partial"), std::string::npos);
  EXPECT_EQ(cli("exact --family kneser --n 30 --k 4").code, 2);

  const auto b = cli("bounds --family kneser --n 13 --k 3 --json");
  ASSERT_EQ(b.code, 0);
  bool sts = false;
  for (const auto& row : nlohmann::json::parse(b.out))
    sts = sts || (row.at("name") == "steiner-triple-system" && row.at("value") == 26);
  EXPECT_TRUE(sts);
  EXPECT_EQ(cli("bounds --family kneser --n 6 --k 3").code, 2);
}
