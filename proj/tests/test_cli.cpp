#include "weylk/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace weylk;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("weylk_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::remove_all(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string str() const { return path_.string(); }
  std::size_t file_count() const {
    if (!std::filesystem::exists(path_)) return 0;
    return static_cast<std::size_t>(std::distance(std::filesystem::directory_iterator(path_), {}));
  }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"dual", "A", "2"}).exit_code, 0);
  EXPECT_EQ(run({"dual", "A", "0"}).exit_code, 2);
  EXPECT_EQ(run({"dual", "H", "2"}).exit_code, 2);
  EXPECT_EQ(run({"dual", "B", "3", "--isogeny", "weird"}).exit_code, 2);
  EXPECT_EQ(run({"clifford-check", "9"}).exit_code, 2);
  EXPECT_EQ(run({"clifford-check", "0"}).exit_code, 2);
  EXPECT_EQ(run({"ktheory", "E", "8"}).exit_code, 3);
  EXPECT_EQ(run({"ktheory", "A", "2", "--bogus"}).exit_code, 2);
  EXPECT_EQ(run({"dual", "A", "2", "--variant", "affine"}).exit_code, 2);
  EXPECT_EQ(run({"ktheory", "A", "2", "--variant", "both"}).exit_code, 2);
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"--help"}).exit_code, 0);
  EXPECT_EQ(run({"clifford-check", "2"}).exit_code, 0);
  EXPECT_EQ(run({"verify-duality", "G", "2"}).exit_code, 0);
}

TEST(Cli, ErrorsGoToStderr) {
  RunResult r = run({"dual", "A", "0"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, DualHumanOutput) {
  RunResult r = run({"dual", "B", "3", "--isogeny", "adj"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("C3 sc"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("f        2"), std::string::npos);
}

TEST(Cli, DualJson) {
  RunResult r = run({"dual", "A", "3", "--output", "json"});
  ASSERT_EQ(r.exit_code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("connection_index"), 4);
  EXPECT_EQ(j.at("group").at("center"), Json::array({4}));
  EXPECT_EQ(j.at("dual").at("pi1"), Json::array({4}));
  EXPECT_EQ(j.at("dual").at("isogeny_kind"), "adjoint");
  EXPECT_TRUE(j.at("pi1_times_center_is_f").get<bool>());
}

TEST(Cli, KTheoryJson) {
  RunResult r = run({"ktheory", "A", "2", "--variant", "affine", "--output", "json"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("k0").at("rank"), 5);
  EXPECT_EQ(j.at("k1").at("rank"), 1);
  EXPECT_EQ(j.at("chain_ranks"), Json::array({9, 6, 1}));
  EXPECT_EQ(j.at("torsion"), "certified");
}

TEST(Cli, DeterministicAndParallelInvariant) {
  for (auto args : std::vector<std::vector<std::string>>{{"ktheory", "B", "3", "--isogeny", "adj", "--output", "json"},
                                                         {"verify-duality", "A", "3", "--output", "json"}}) {
    RunResult a = run(args), b = run(args);
    auto par = args;
    par.push_back("--parallel");
    RunResult c = run(par);
    ASSERT_EQ(a.exit_code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
  }
}

TEST(Cli, CacheRoundTrip) {
  TempDir dir;
  std::vector<std::string> args{"ktheory", "C", "2", "--output", "json", "--cache-dir", dir.str()};
  RunResult first = run(args);
  ASSERT_EQ(first.exit_code, 0) << first.err;
  EXPECT_EQ(dir.file_count(), 1u);
  RunResult second = run(args);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(dir.file_count(), 1u);
  // a different variant is a different entry
  args.push_back("--variant");
  args.push_back("affine");
  ASSERT_EQ(run(args).exit_code, 0);
  EXPECT_EQ(dir.file_count(), 2u);
  // corrupt entries are recomputed
  for (auto& e : std::filesystem::directory_iterator(dir.str())) std::ofstream(e.path()) << "{not json";
  RunResult third = run({"ktheory", "C", "2", "--output", "json", "--cache-dir", dir.str()});
  EXPECT_EQ(third.out, first.out);
}

TEST(Cli, CacheKeysDifferByIsogeny) {
  RootDatum sc = build_root_datum({Series::A, 3}, Isogeny::sc());
  RootDatum adj = build_root_datum({Series::A, 3}, Isogeny::adj());
  EXPECT_NE(cli::cache_key("ktheory", sc, "extended"), cli::cache_key("ktheory", adj, "extended"));
  EXPECT_NE(cli::cache_key("ktheory", sc, "extended"), cli::cache_key("ktheory", sc, "affine"));
  EXPECT_EQ(cli::cache_key("ktheory", sc, "extended").size(), 16u);
  EXPECT_EQ(cli::fnv1a(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(cli::fnv1a("a"), 0xaf63dc4c8601ec8cull);
}

TEST(Cli, RootDatumJsonRoundTrip) {
  for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G})
    for (int n = 1; n <= 8; ++n) {
      CartanType t{s, n};
      if (!is_valid_type(t)) continue;
      for (auto& rd : all_isogeny_forms(t)) {
        Json j = to_json(rd);
        RootDatum back = root_datum_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back.cochar_lattice, rd.cochar_lattice) << t.str();
        EXPECT_EQ(back.char_lattice, rd.char_lattice) << t.str();
        EXPECT_EQ(to_json(back), j) << t.str();
      }
    }
}

TEST(Cli, RootDatumJsonRejectsBadInput) {
  Json good = to_json(build_root_datum({Series::B, 2}, Isogeny::adj()));
  Json missing = good;
  missing.erase("cochar_basis");
  EXPECT_THROW(root_datum_from_json(missing), InvalidArgument);
  Json bad_roots = good;
  bad_roots["roots"][0][0] = 7;
  EXPECT_THROW(root_datum_from_json(bad_roots), InvalidArgument);
  Json bad_char = good;
  bad_char["char_basis"] = Json::array({Json::array({2, 0}), Json::array({0, 2})});
  EXPECT_THROW(root_datum_from_json(bad_char), InvalidArgument);
  Json bad_rank = good;
  bad_rank["rank"] = 1;
  EXPECT_THROW(root_datum_from_json(bad_rank), InvalidArgument);
  EXPECT_THROW(root_datum_from_json(Json::parse("[1, 2]")), InvalidArgument);
}

TEST(Cli, CliffordCheckOutput) {
  RunResult r = run({"clifford-check", "3", "--output", "json"});
  ASSERT_EQ(r.exit_code, 0);
  Json j = Json::parse(r.out);
  EXPECT_TRUE(j.at("all_passed").get<bool>());
  EXPECT_GE(j.at("checks").size(), 10u);
}
