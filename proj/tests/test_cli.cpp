#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ABELIAN_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

json run_json(const std::string& args) {
  auto r = run(args);
  EXPECT_EQ(r.status, 0) << args;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, Lambda) {
  auto three = run_json("lambda --count 3");
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[2]["q"], 7);
  EXPECT_EQ(three[0]["factors_of_q_minus_1"], json::array());
  EXPECT_EQ(three[1]["factors_of_q_minus_1"], json({2}));
  EXPECT_EQ(three[2]["factors_of_q_minus_1"], json({2, 3}));
  EXPECT_EQ(run_json("lambda --count 0"), json::array());
  EXPECT_EQ(run_json("lambda --count 10").back()["q"], 67);
}

TEST(Cli, LocalDegree) {
  auto s = run_json("local-degree --conductor 7 --prime 2");
  EXPECT_EQ(s, (json{{"prime", 2}, {"e", 1}, {"f", 3}, {"g", 2}, {"local_degree", 3}}));
  EXPECT_EQ(run_json("local-degree --conductor 1 --prime 13")["local_degree"], 1);
  auto r = run_json("local-degree --conductor 7 --subgroup '' --prime 7");
  EXPECT_EQ(r["e"], 6);
  EXPECT_EQ(r["f"], 1);
  EXPECT_EQ(r["local_degree"], 6);
  EXPECT_EQ(run_json("local-degree --conductor 7 --subgroup 2 --prime 2")["local_degree"], 1);
}

TEST(Cli, ConstructCyclic) {
  auto cubic = run_json("construct-cyclic --q 3");
  EXPECT_EQ(cubic["trace"]["chosen_ells"], json({7}));
  EXPECT_EQ(cubic["field"]["conductor"], 7);
  EXPECT_EQ(cubic["field"]["degree"], 3);

  auto quintic = run_json("construct-cyclic --q 5 --split 2,3");
  EXPECT_EQ(quintic["trace"]["chosen_ells"], json({11, 31, 41}));
  EXPECT_EQ(quintic["field"]["degree"], 5);

  auto quad = run_json(R"(construct-cyclic --q 2 --avoid '{"conductor": 3, "subgroup_generators": []}')");
  EXPECT_EQ(quad["field"], (json{{"conductor", 5}, {"subgroup_generators", {4}}, {"degree", 2}, {"canonical", true}}));

  const std::string path = std::string(::testing::TempDir()) + "avoid.json";
  std::ofstream(path) << R"({"conductor": 3, "subgroup_generators": []})";
  EXPECT_EQ(run_json("construct-cyclic --q 2 --avoid " + path)["field"], quad["field"]);
}

TEST(Cli, Realize) {
  auto u = run_json("realize --kind unbounded --depth 4 --probe 2");
  EXPECT_EQ(u["local_degree_table"][0]["local_degree"], 330);
  auto b = run_json("realize --kind bounded --depth 1 --primes 2");
  for (const auto& [name, ok] : b["verdicts"].items()) EXPECT_TRUE(ok.get<bool>()) << name;
  EXPECT_EQ(b["claimed_bounds"][0]["bound"], 2);
  EXPECT_EQ(b["claimed_bounds"][0]["computed"], 1);
  auto empty = run_json("realize --kind bounded --depth 0");
  EXPECT_EQ(empty["compositum"]["conductor"], 1);
  EXPECT_EQ(empty["components"], json::array());
}

TEST(Cli, Dedekind) {
  EXPECT_EQ(run_json("dedekind --poly 1,0,1 --prime 2")["index_divisible"], false);
  EXPECT_EQ(run_json("dedekind --poly=-8,-2,-1,1 --prime 2")["index_divisible"], true);
  EXPECT_EQ(run_json("dedekind --poly=-1,1 --prime 5")["splitting"], json::parse(R"([{"e":1,"f":1}])"));

  const std::string path = std::string(::testing::TempDir()) + "family.json";
  std::ofstream(path) << R"([{"label":"i","poly":[1,0,1]},{"label":"zeta8","poly":[1,0,0,0,1]}])";
  auto scan = run_json("dedekind --family " + path + " --prime 2 --bound 1");
  EXPECT_EQ(scan["degree_bound"], 4);
  EXPECT_EQ(scan["refutation_count"], 0);
}

TEST(Cli, EisensteinDiscriminant) {
  for (auto [p, d] : {std::pair{2, 148}, {3, 621}, {5, 3325}}) {
    auto doc = run_json("eisenstein-disc --p " + std::to_string(p));
    EXPECT_EQ(doc["discriminant"], d);
    EXPECT_EQ(doc["eisenstein"], true);
    EXPECT_EQ(doc["matches_closed_form"], true);
  }
  EXPECT_EQ(run_json("eisenstein-disc --p 5")["factorization"], "5^2*133");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("lambda --count 2").status, 0);
  EXPECT_EQ(run("local-degree --conductor 7 --prime 4").status, 2);
  EXPECT_EQ(run("local-degree --conductor 0 --prime 2").status, 2);
  EXPECT_EQ(run("dedekind --poly 1,0,2 --prime 2").status, 2);
  EXPECT_EQ(run("no-such-command").status, 2);
  EXPECT_EQ(run("lambda --count x").status, 2);
  EXPECT_EQ(run("construct-cyclic --q 5 --split 2,3 --search-bound 40").status, 3);
  EXPECT_EQ(run("--prime-search-bound 40 construct-cyclic --q 5 --split 2,3").status, 3);
  EXPECT_EQ(run("--modulus-cap 5 local-degree --conductor 7 --prime 2").status, 4);
  EXPECT_EQ(run("MODULUS_CAP=5").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, EnvironmentAndFlagPrecedence) {
  EXPECT_EQ(run("local-degree --conductor 7 --prime 2").status, 0);
  const std::string env = "env MODULUS_CAP=5 ";
  auto r = run("--modulus-cap 100 local-degree --conductor 7 --prime 2");
  EXPECT_EQ(r.status, 0);
  FILE* pipe = popen((env + ABELIAN_CLI + " local-degree --conductor 7 --prime 2 2>/dev/null").c_str(), "r");
  const int raw = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(raw), 4);
  pipe = popen((env + ABELIAN_CLI + " --modulus-cap 100 local-degree --conductor 7 --prime 2 >/dev/null 2>&1").c_str(), "r");
  EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 0);
}

TEST(Cli, TableFormat) {
  auto r = run("--format table local-degree --conductor 7 --prime 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "e: 1\nf: 3\ng: 2\nlocal_degree: 3\nprime: 2\n");
}

TEST(Cli, ByteIdenticalReruns) {
  for (const char* args : {"lambda --count 10", "realize --kind unbounded --depth 4 --probe 2,3,5",
                           "realize --kind bounded --depth 3 --primes 2,3,5", "construct-cyclic --q 7 --split 2,11",
                           "--seed 5 dedekind --poly=-8,-2,-1,1 --prime 2"}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out) << args;
  }
}
