#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

using namespace kschur;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json result_of(const Outcome& r) { return json::parse(r.out); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::map<std::vector<int>, std::int64_t> terms_of(const json& j) {
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& t : j.at("terms")) out[t.at("index").get<std::vector<int>>()] = t.at("coeff").get<std::int64_t>();
  return out;
}

// Runs with the disk cache disabled and the in-memory cache dropped.
void reset_cache() {
  unsetenv(kCacheEnvVar);
  set_kostka_source(nullptr);
}

class CacheDir {
 public:
  explicit CacheDir(const std::string& name) : path_(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path_);
  }
  ~CacheDir() {
    std::filesystem::remove_all(path_);
    reset_cache();
  }
  void activate() const { setenv(kCacheEnvVar, path_.c_str(), 1); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, Core) {
  reset_cache();
  Outcome r = run({"core", "--k", "4", "--to-core", "--partition", "4,3,2,2,1,1"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(result_of(r)["result"], json({9, 5, 3, 2, 1, 1}));
  EXPECT_EQ(result_of(run({"core", "--k", "2", "--kconjugate", "--partition", "2,1"}))["result"], json({1, 1, 1}));
  r = run({"core", "--k", "3", "--from-core", "--partition", ""});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "{\"result\":[]}\n");
  EXPECT_EQ(result_of(run({"core", "--k", "4", "--from-core", "--partition", "9,5,3,2,1,1"}))["result"],
            json({4, 3, 2, 2, 1, 1}));
}

TEST(Cli, CoreErrors) {
  EXPECT_EQ(run({"core", "--k", "2", "--from-core", "--partition", "2,2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"core", "--k", "2", "--to-core", "--partition", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"core", "--k", "2", "--to-core", "--partition", "1,x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"core", "--k", "2", "--partition", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"core", "--k", "2", "--to-core", "--kconjugate", "--partition", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"core", "--k", "0", "--to-core", "--partition", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"core", "--k", "2", "--to-core", "--partition", "1", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  const Outcome bad = run({"frobnicate"});
  EXPECT_EQ(bad.code, cli::kExitUsage);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, Help) {
  const Outcome r = run({"--help"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, TabCounts) {
  EXPECT_EQ(run({"tab", "--k", "3", "--shape-core", "8,5,2,1", "--weight", "1,3,1,2,1,1", "--count"}).out,
            "{\"count\":3}\n");
  EXPECT_EQ(run({"tab", "--k", "2", "--shape", "2,1", "--weight", "1,1,1", "--count"}).out, "{\"count\":1}\n");
  EXPECT_EQ(run({"tab", "--k", "1", "--shape", "1", "--weight", "1", "--count"}).out, "{\"count\":1}\n");
  EXPECT_EQ(run({"tab", "--k", "2", "--shape", "2,1", "--inner", "1", "--weight", "1,1", "--count"}).out,
            "{\"count\":1}\n");
  EXPECT_EQ(run({"tab", "--k", "2", "--shape", "2,1", "--weight", "1,1,1", "--transposed", "--count"}).out,
            "{\"count\":" + std::to_string(transposed_skew_kostka(2, Partition{2, 1}, {}, Composition{1, 1, 1})) +
                "}\n");
}

TEST(Cli, TabListsTableaux) {
  const Outcome r = run({"tab", "--k", "3", "--shape-core", "8,5,2,1", "--weight", "1,3,1,2,1,1"});
  ASSERT_EQ(r.code, cli::kExitOk);
  std::vector<KTableau> got;
  for (const auto& line : lines(r.out)) got.push_back(tableau_from_json(json::parse(line)));
  auto expected = fixtures::k3_weight_131211();
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(got, expected);
}

TEST(Cli, TabErrors) {
  EXPECT_EQ(run({"tab", "--k", "2", "--shape", "2,1", "--weight", "1,1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"tab", "--k", "2", "--weight", "1,1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"tab", "--k", "2", "--shape", "2", "--shape-core", "2", "--weight", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"tab", "--k", "2", "--shape-core", "2,1", "--weight", "1,1,1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"tab", "--k", "2", "--shape", "3", "--weight", "3"}).code, cli::kExitUsage);
}

TEST(Render, TauExample) {
  EXPECT_EQ(render(fixtures::tau4_example().input), fixtures::tau4_input_rendered());
  const Outcome r = run({"tab", "--k", "2", "--shape", "2,1", "--inner", "1", "--weight", "1,1", "--render"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, render(enumerate(2, Partition{2, 1}, Partition{1}, Composition{1, 1}).front()));
  EXPECT_NE(r.out.find(". "), std::string::npos);
}

TEST(Cli, Kostka) {
  reset_cache();
  const json m = result_of(run({"kostka", "--k", "2", "--degree", "3"}));
  EXPECT_EQ(m["order"], json({{2, 1}, {1, 1, 1}}));
  EXPECT_EQ(m["K"], json({{1, 1}, {0, 1}}));
  const json inv = result_of(run({"kostka", "--k", "2", "--degree", "3", "--inverse"}));
  EXPECT_EQ(inv["inverse"], json({{1, -1}, {0, 1}}));
  EXPECT_FALSE(inv.contains("K"));
  EXPECT_EQ(run({"kostka", "--k", "2"}).code, cli::kExitUsage);
}

TEST(Cli, Expand) {
  Outcome r = run({"expand", "--k", "2", "--lambda", "2,1", "--basis", "schur"});
  EXPECT_EQ(r.code, cli::kExitOk);
  const std::map<std::vector<int>, std::int64_t> schur{{{2, 1}, 1}, {{3}, 1}};
  EXPECT_EQ(terms_of(result_of(r)), schur);
  r = run({"expand", "--k", "2", "--lambda", "1,1,1", "--from", "h", "--basis", "kschur"});
  const std::map<std::vector<int>, std::int64_t> ks{{{2, 1}, 1}, {{1, 1, 1}, 1}};
  EXPECT_EQ(terms_of(result_of(r)), ks);
  r = run({"expand", "--k", "2", "--lambda", "1,1,1", "--basis", "h"});
  const std::map<std::vector<int>, std::int64_t> h{{{2, 1}, -1}, {{1, 1, 1}, 1}};
  EXPECT_EQ(terms_of(result_of(r)), h);
  // e_1^3 - e_2 e_1, the image of h_1^3 - h_2 h_1 under ω, is s^(2)_(2,1).
  r = run({"expand", "--k", "2", "--lambda", "2,1", "--basis", "e"});
  const std::map<std::vector<int>, std::int64_t> e{{{2, 1}, -1}, {{1, 1, 1}, 1}};
  EXPECT_EQ(terms_of(result_of(r)), e);
  EXPECT_EQ(run({"expand", "--lambda", "2,1", "--basis", "schur"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"expand", "--k", "2", "--lambda", "3", "--from", "schur", "--basis", "kschur"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"expand", "--k", "2", "--lambda", "2,1", "--basis", "monomial"}).code, cli::kExitUsage);
}

TEST(Cli, Pieri) {
  Outcome r = run({"pieri", "--k", "2", "--mode", "h", "--ell", "1", "--lambda", "1,1"});
  EXPECT_EQ(r.code, cli::kExitOk);
  const std::map<std::vector<int>, std::int64_t> expected{{{1, 1, 1}, 1}};
  EXPECT_EQ(terms_of(result_of(r)), expected);
  r = run({"pieri", "--k", "2", "--mode", "e", "--ell", "1", "--lambda", "1,1"});
  EXPECT_EQ(symfunc_from_json(result_of(r)), multiply_e(1, SymFunc::element(Basis::kschur, Partition{1, 1}, 2)));
  EXPECT_EQ(run({"pieri", "--k", "2", "--mode", "h", "--ell", "3", "--lambda", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"pieri", "--k", "2", "--mode", "x", "--ell", "1", "--lambda", "1"}).code, cli::kExitUsage);
}

TEST(Cli, Omega) {
  Outcome r = run({"omega", "--k", "2", "--lambda", "2,1"});
  EXPECT_EQ(r.code, cli::kExitOk);
  const std::map<std::vector<int>, std::int64_t> expected{{{1, 1, 1}, 1}};
  EXPECT_EQ(terms_of(result_of(r)), expected);
  r = run({"omega", "--lambda", "2,1", "--basis", "h"});
  EXPECT_EQ(result_of(r)["basis"], "e");
  EXPECT_EQ(run({"omega", "--lambda", "2,1"}).code, cli::kExitUsage);
}

TEST(Cli, Tau) {
  const auto ex = fixtures::tau4_example();
  const std::string input = to_json(ex.input).dump();
  Outcome r = run({"tau", "--a", "4", "--tableau", input});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, to_json(ex.stage_2).dump() + "\n");

  r = run({"tau", "--a", "4", "--tableau", input, "--trace"});
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  const KTableau* stages[] = {&ex.stage_1a, &ex.stage_1b, &ex.stage_2};
  const char* names[] = {"1a", "1b", "2"};
  for (std::size_t i = 0; i < 3; ++i) {
    const json j = json::parse(ls[i]);
    EXPECT_EQ(j["stage"], names[i]);
    EXPECT_EQ(tableau_from_json(j["tableau"]), *stages[i]);
  }

  const auto file = std::filesystem::temp_directory_path() / "kschur-cli-tau.json";
  std::ofstream(file) << input;
  r = run({"tau", "--a", "4", "--input", file.string()});
  EXPECT_EQ(r.out, to_json(ex.stage_2).dump() + "\n");
  std::filesystem::remove(file);
}

TEST(Cli, TauErrors) {
  const std::string input = to_json(fixtures::tau4_example().input).dump();
  EXPECT_EQ(run({"tau", "--a", "5", "--tableau", input}).code, cli::kExitUsage);
  EXPECT_EQ(run({"tau", "--a", "0", "--tableau", input}).code, cli::kExitUsage);
  EXPECT_EQ(run({"tau", "--a", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"tau", "--a", "1", "--tableau", "{"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"tau", "--a", "1", "--input", "/nonexistent/kschur.json"}).code, cli::kExitUsage);
  KTableau broken = fixtures::tau4_example().input;
  broken.rows[0][0] = 2;
  EXPECT_EQ(run({"tau", "--a", "1", "--tableau", to_json(broken).dump()}).code, cli::kExitUsage);
}

TEST(Cli, VerifyPasses) {
  reset_cache();
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--suite", "tau", "--k", "3", "--max-degree", "7"},
        std::vector<std::string>{"verify", "--suite", "all", "--k", "1", "--max-degree", "5"},
        std::vector<std::string>{"verify", "--suite", "rectangle", "--k", "2", "--max-degree", "5"}}) {
    const Outcome r = run(args);
    EXPECT_EQ(r.code, cli::kExitOk) << r.out;
    for (const auto& line : lines(r.out)) {
      const json j = json::parse(line);
      EXPECT_TRUE(j["passed"].get<bool>()) << line;
      EXPECT_EQ(j["failures"], 0);
    }
  }
  EXPECT_EQ(lines(run({"verify", "--k", "1", "--max-degree", "3"}).out).size(), suite_names().size());
  EXPECT_EQ(run({"verify", "--suite", "nope", "--k", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "tau"}).code, cli::kExitUsage);
}

TEST(Cli, VerifyReportsFailures) {
  // An edited cache entry is still unitriangular, so it loads; the direct
  // recount disagrees with it.
  CacheDir dir("kschur-cli-bad-cache");
  KostkaMatrix wrong = kostka_matrix(2, 3);
  wrong.K[0][1] = 5;
  std::filesystem::create_directories(dir.path());
  std::ofstream(kostka_cache_file(dir.path(), 2, 3)) << to_json(wrong).dump();
  dir.activate();
  const Outcome r = run({"verify", "--suite", "triangularity", "--k", "2", "--max-degree", "3"});
  EXPECT_EQ(r.code, cli::kExitVerifyFailed);
  const json j = json::parse(lines(r.out).front());
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_FALSE(j["counterexamples"].empty());
}

TEST(Cli, CacheDoesNotChangeOutput) {
  const std::vector<std::vector<std::string>> commands{
      {"kostka", "--k", "3", "--degree", "6"},
      {"kostka", "--k", "2", "--degree", "5", "--inverse"},
      {"expand", "--k", "3", "--lambda", "2,2,1,1", "--basis", "schur"},
      {"expand", "--k", "2", "--lambda", "2,1,1", "--basis", "e"},
      {"pieri", "--k", "3", "--mode", "e", "--ell", "2", "--lambda", "3,1"},
      {"omega", "--k", "3", "--lambda", "3,2,1"},
  };
  auto outputs = [&] {
    std::vector<std::string> out;
    for (const auto& c : commands) {
      const Outcome r = run(c);
      EXPECT_EQ(r.code, cli::kExitOk);
      out.push_back(r.out);
    }
    return out;
  };
  reset_cache();
  const auto plain = outputs();
  CacheDir dir("kschur-cli-cache");
  dir.activate();
  const auto cold = outputs();
  EXPECT_TRUE(std::filesystem::exists(kostka_cache_file(dir.path(), 3, 6)));
  const auto warm = outputs();
  EXPECT_EQ(cold, plain);
  EXPECT_EQ(warm, plain);
}

TEST(Json, TableauRoundTrip) {
  for (int k = 1; k <= 3; ++k)
    for (const auto& mu : k_bounded_partitions(5, k))
      for (Mode mode : {Mode::column_strict, Mode::transposed})
        for (const auto& t : enumerate(k, mu, {}, Composition{2, 1, 2}, mode)) {
          const json j = to_json(t);
          EXPECT_EQ(tableau_from_json(j), t);
          EXPECT_EQ(tableau_from_json(json::parse(j.dump())), t);
        }
  json bad = to_json(fixtures::tau4_example().input);
  bad["rows"][0].erase(0);
  EXPECT_THROW(tableau_from_json(bad), Error);
}

TEST(Json, ParsersRejectGarbage) {
  EXPECT_THROW(parse_partition("3,,1"), Error);
  EXPECT_THROW(parse_partition("1,2"), Error);
  EXPECT_THROW(parse_composition("-1"), Error);
  EXPECT_EQ(parse_composition("1,0,2"), (Composition{1, 0, 2}));
  EXPECT_EQ(partition_from_json(to_json(Partition{3, 1})), (Partition{3, 1}));
  EXPECT_EQ(cell_from_json(to_json(Cell{2, 3})), (Cell{2, 3}));
  const SkewShape sk = k_skew(Partition{2, 1}, 2);
  EXPECT_EQ(skew_from_json(to_json(sk)), sk);
}
