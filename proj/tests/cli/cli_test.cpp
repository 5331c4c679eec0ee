#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "hlv/arith/text.hpp"

namespace hlv::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
  [[nodiscard]] Json json() const { return Json::parse(out); }
};

Outcome hlv(std::vector<std::string> args) {
  args.insert(args.begin(), "hlv");
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.code = run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hlv-cli-test-" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(Cli, KernelRecord) {
  const Outcome o = hlv({"kernel", "--g", "1", "--mu", "1", "--no-cache"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const Json j = o.json();
  const Poly z = Poly::variable(Var::z);
  const Poly w = Poly::variable(Var::w);
  EXPECT_EQ(j["hlv"], to_canonical((z - w).pow(2)));
  EXPECT_EQ(j["mu"], "1");
  EXPECT_EQ(j["g"], 1);
  EXPECT_EQ(j["d_mu"], 2);
  for (const char* key : {"palindromic", "curious_duality", "connected_constant_term"}) {
    EXPECT_TRUE(j["checks"][key].get<bool>()) << key;
  }
}

TEST(Cli, EPolynomialEvaluation) {
  const Outcome o = hlv({"epoly", "--g", "1", "--mu", "1", "--eval-q", "3", "--no-cache"});
  ASSERT_EQ(o.code, kOk);
  EXPECT_EQ(o.json()["value"], 4);
  const Outcome four = hlv({"epoly", "--g", "0", "--mu", "1,1|1,1|1,1|1,1", "--eval-q", "5", "--no-cache"});
  EXPECT_EQ(four.json()["value"], 25 + 20 + 1);
}

TEST(Cli, KacAndMixedHodge) {
  const Outcome k = hlv({"kac", "--g", "1", "--dimvec", "2; 1", "--eval-q", "2", "--no-cache"});
  ASSERT_EQ(k.code, kOk);
  EXPECT_EQ(k.json()["mu"], "1,1");
  EXPECT_EQ(k.json()["value"], 6);
  const Outcome m = hlv({"mhp", "--g", "1", "--mu", "1", "--no-cache"});
  ASSERT_EQ(m.code, kOk);
  EXPECT_TRUE(m.json()["checks"]["curious_duality"].get<bool>());
}

TEST(Cli, Oracles) {
  const Outcome p = hlv({"oracle", "point-count", "--g", "0", "--mu", "1,1|1,1|1,1", "--q", "5", "--no-cache"});
  ASSERT_EQ(p.code, kOk) << p.out;
  EXPECT_EQ(p.json()["raw"], 120);
  EXPECT_EQ(p.json()["quotient"], 1);
  EXPECT_GT(p.json()["budget_steps"].get<long>(), 0);
  const Outcome k = hlv({"oracle", "kac-count", "--g", "1", "--dimvec", "2", "--q", "2", "--jobs", "2", "--no-cache"});
  ASSERT_EQ(k.code, kOk) << k.out;
  EXPECT_EQ(k.json()["count"], 2);
  // No generic tuple of four regular classes exists over F_5.
  EXPECT_EQ(hlv({"oracle", "point-count", "--g", "0", "--mu", "1,1|1,1|1,1|1,1", "--q", "5", "--no-cache"}).code,
            kComputationError);
  const Outcome big = hlv({"oracle", "point-count", "--g", "2", "--mu", "1,1,1", "--q", "7", "--no-cache"});
  EXPECT_EQ(big.code, kComputationError);
  EXPECT_EQ(big.json()["error"], "instance too large");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(hlv({}).code, kUsageError);
  EXPECT_EQ(hlv({"kernel", "--g", "1"}).code, kUsageError);
  EXPECT_EQ(hlv({"kernel", "--g", "1", "--mu", "2,x"}).code, kUsageError);
  EXPECT_EQ(hlv({"kernel", "--g", "-1", "--mu", "1"}).code, kUsageError);
  EXPECT_EQ(hlv({"kernel", "--g", "1", "--mu", "1", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(hlv({"oracle", "point-count", "--g", "1", "--mu", "1", "--q", "6"}).code, kUsageError);
  EXPECT_EQ(hlv({"kac", "--g", "1", "--mu", "1", "--dimvec", "1"}).code, kUsageError);
  EXPECT_EQ(hlv({"kac", "--g", "1", "--dimvec", "1; 2"}).code, kUsageError);
  const Outcome o = hlv({"expansion-check", "--g", "1", "--k", "1", "--y-convention", "other"});
  EXPECT_EQ(o.code, kUsageError);
  EXPECT_FALSE(o.err.empty());
  EXPECT_EQ(hlv({"--help"}).code, kOk);
}

TEST(Cli, Checks) {
  EXPECT_EQ(hlv({"hilbert-check", "--n-max", "4", "--trunc", "3", "--no-cache"}).code, kOk);
  EXPECT_EQ(hlv({"quasimodular-check", "--n-max", "3", "--u-order", "6", "--no-cache"}).code, kOk);
  EXPECT_EQ(hlv({"expansion-check", "--g", "1", "--k", "2", "--n-max", "3", "--no-cache"}).code, kOk);
  const Outcome printed = hlv({"expansion-check", "--g", "1", "--k", "1", "--n-max", "2", "--y-convention", "printed"});
  EXPECT_EQ(printed.code, kOk);
  EXPECT_FALSE(printed.json()["all_equal"].get<bool>());
  EXPECT_EQ(hlv({"optim-sweep", "--g", "2", "--mu", "1,1,1", "--no-cache"}).code, kOk);
  // For g = 1 and μ = (n) every term is identically 1, so the minimiser is not unique.
  const Outcome single = hlv({"optim-sweep", "--g", "1", "--mu", "3", "--no-cache"});
  EXPECT_EQ(single.code, kTheoremFailure);
  EXPECT_EQ(single.json()["cases"][0]["minimizers"].size(), 3u);
}

TEST(Cli, VerifyAllIsDeterministicAndCacheIndependent) {
  const fs::path dir = fresh_dir("verify");
  const std::vector<std::string> base{"verify", "all", "--n-max", "3", "--g-max", "2", "--k-max", "2"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return hlv(a);
  };
  const Outcome cold = with({"--cache-dir", dir.string()});
  ASSERT_EQ(cold.code, kOk) << cold.out.substr(0, 400);
  const Outcome warm = with({"--cache-dir", dir.string(), "--jobs", "3"});
  const Outcome none = with({"--no-cache"});
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_EQ(cold.out, none.out);
  EXPECT_TRUE(fs::exists(dir / "kernel-records.cache"));
  const Json j = cold.json();
  EXPECT_TRUE(j["summary"]["theorem_failures"].empty());
  EXPECT_TRUE(j["summary"]["conjecture_failures"].empty());
  EXPECT_EQ(j["summary"]["cases"], j["cases"].size());
  fs::remove_all(dir);
}

TEST(Cli, UnusableCacheFallsBack) {
  const fs::path blocker = fresh_dir("blocker");
  std::ofstream(blocker.string()) << "not a directory";
  const Outcome o = hlv({"kernel", "--g", "0", "--mu", "1|1", "--cache-dir", (blocker / "sub").string()});
  EXPECT_EQ(o.code, kOk);
  EXPECT_NE(o.err.find("warning"), std::string::npos);
  fs::remove_all(blocker);
}

TEST(Cli, CacheGetOrCompute) {
  const fs::path dir = fresh_dir("records");
  fs::create_directories(dir);
  const fs::path file = dir / "records.cache";
  int calls = 0;
  auto producer = [&] {
    ++calls;
    return std::string("1/1 q:2; 1/1");
  };
  {
    RecordCache cache(file, "TEST v1", 1);
    EXPECT_EQ(cache_get_or_compute(&cache, "H21", producer), "1/1 q:2; 1/1");
    EXPECT_EQ(cache_get_or_compute(&cache, "H21", producer), "1/1 q:2; 1/1");
    EXPECT_EQ(calls, 1);
  }
  {
    RecordCache cache(file, "TEST v1", 1);
    EXPECT_EQ(cache_get_or_compute(&cache, "H21", producer), "1/1 q:2; 1/1");
    EXPECT_EQ(calls, 1);
  }
  // Tamper with the payload so the checksum no longer matches.
  std::ifstream in(file);
  std::stringstream text;
  text << in.rdbuf();
  in.close();
  std::string s = text.str();
  s.replace(s.find("q:2"), 3, "q:3");
  std::ofstream(file) << s;
  {
    RecordCache cache(file, "TEST v1", 1);
    EXPECT_EQ(cache_get_or_compute(&cache, "H21", producer), "1/1 q:2; 1/1");
    EXPECT_EQ(calls, 2);
    EXPECT_EQ(cache.rejected(), 1);  // seen once, dropped by the rewrite
  }
  {
    RecordCache cache(file, "TEST v1", 1);
    EXPECT_EQ(cache.get("H21").value_or(""), "1/1 q:2; 1/1");
    EXPECT_EQ(cache.rejected(), 0);
  }
  EXPECT_EQ(cache_get_or_compute(nullptr, "H21", producer), "1/1 q:2; 1/1");
  EXPECT_EQ(calls, 3);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace hlv::cli
