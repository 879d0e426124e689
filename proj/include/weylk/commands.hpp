#pragma once

// The weylk command-line front end. run() takes the arguments after the
// program name and returns the exit code with captured stdout/stderr, so the
// executable is a thin wrapper and tests can drive it in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.

#include "weylk/bredon.hpp"
#include "weylk/chernoracle.hpp"
#include "weylk/clifford.hpp"
#include "weylk/serialize.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace weylk {

enum class Command { dual, ktheory, verify_duality, clifford_check };

struct RunConfig {
  Command command = Command::dual;
  std::string series;
  int rank = 0;
  std::string isogeny = "sc";
  std::optional<std::string> variant;
  std::string output = "human";
  std::string cache_dir;  // empty: no caching
  bool parallel = false;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace cli {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string cache_key(const std::string& command, const RootDatum& rd, const std::string& params) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(command + "\n" + to_json(rd).dump() + "\n" + params)));
  return buf;
}

class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }

  std::optional<Json> load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path(key));
    if (!in) return std::nullopt;
    try {
      return Json::parse(in);
    } catch (const Json::exception&) {
      return std::nullopt;  // unreadable entries are recomputed
    }
  }

  void store(const std::string& key, const Json& payload) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::string tmp = path(key) + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << payload.dump();
    }
    std::filesystem::rename(tmp, path(key), ec);
  }

 private:
  std::string path(const std::string& key) const { return (std::filesystem::path(dir_) / (key + ".json")).string(); }
  std::string dir_;
};

inline RootDatum datum(const RunConfig& cfg) {
  CartanType t{parse_series(cfg.series), cfg.rank};
  t.validate();
  return build_root_datum(t, parse_isogeny(cfg.isogeny));
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

inline Json group_summary(const RootDatum& rd) {
  auto fc = fundamental_group_and_center(rd);
  return Json{{"datum", to_json(rd)},
              {"label", rd.type.str() + " " + rd.isogeny.str()},
              {"isogeny_kind", rd.isogeny.name()},
              {"pi1", to_json(fc.pi1)},
              {"center", to_json(fc.center)}};
}

inline int cmd_dual(const RunConfig& cfg, std::ostream& out) {
  RootDatum rd = datum(cfg);
  RootDatum dual = langlands_dual(rd);
  auto fc = fundamental_group_and_center(rd);
  auto dfc = fundamental_group_and_center(dual);
  const std::int64_t f = connection_index(rd.type);
  const bool product_ok = fc.pi1.order() * fc.center.order() == f;
  const bool self_dual = isomorphic(rd, dual);
  if (cfg.output == "json") {
    out << Json{{"group", group_summary(rd)},
                {"dual", group_summary(dual)},
                {"connection_index", f},
                {"pi1_times_center_is_f", product_ok},
                {"self_dual", self_dual}}
               .dump(2)
        << "\n";
  } else {
    out << "G        " << rd.type.str() << " " << rd.isogeny.str() << " (" << rd.isogeny.name() << ")\n"
        << "G dual   " << dual.type.str() << " " << dual.isogeny.str() << " (" << dual.isogeny.name() << ")\n"
        << "f        " << f << "\n"
        << "pi1(G)   " << fc.pi1.str() << "    Z(G)   " << fc.center.str() << "\n"
        << "pi1(G^v) " << dfc.pi1.str() << "    Z(G^v) " << dfc.center.str() << "\n"
        << "self-dual " << yes_no(self_dual) << "\n";
  }
  return 0;
}

inline Json ktheory_payload(const RootDatum& rd, Variant v, bool parallel) {
  EquivariantComplex x = build_equivariant_complex(rd, v);
  ChainComplex c = bredon_chain_complex(x, parallel);
  KGroups k = assemble_k_groups(homology(c, parallel), x.dim);
  Json j = to_json(k);
  j["group"] = group_label(rd, v);
  j["variant"] = variant_name(v);
  j["cells"] = x.cell_counts();
  j["chain_ranks"] = c.ranks;
  j["torsion"] = k.integral ? "certified" : "uncertified";
  return j;
}

inline int cmd_ktheory(const RunConfig& cfg, const Cache& cache, std::ostream& out) {
  RootDatum rd = datum(cfg);
  Variant v = parse_variant(cfg.variant.value_or("extended"));
  const std::string key = cache_key("ktheory", rd, variant_name(v));
  Json j;
  if (auto hit = cache.load(key)) {
    j = *hit;
  } else {
    j = ktheory_payload(rd, v, cfg.parallel);
    cache.store(key, j);
  }
  if (cfg.output == "json") {
    out << j.dump(2) << "\n";
    return 0;
  }
  auto group_str = [](const Json& g) {
    AbelianGroup a;
    a.rank = g.at("rank").get<std::size_t>();
    for (auto& t : g.at("torsion")) a.torsion.push_back(Integer(t.get<std::int64_t>()));
    return a.str();
  };
  out << "group        " << j.at("group").get<std::string>() << "\n"
      << "cells        " << join(j.at("cells").get<std::vector<std::size_t>>()) << "\n"
      << "chain ranks  " << join(j.at("chain_ranks").get<std::vector<std::size_t>>()) << "\n";
  const Json& h = j.at("homology");
  for (std::size_t p = 0; p < h.size(); ++p) out << "H_" << p << "          " << group_str(h[p]) << "\n";
  out << "K_0          " << group_str(j.at("k0")) << "\n"
      << "K_1          " << group_str(j.at("k1")) << "\n"
      << "integral     " << yes_no(j.at("integral").get<bool>())
      << (j.at("integral").get<bool>() ? "" : " (torsion uncertified)") << "\n";
  return 0;
}

inline Json verify_payload(const RootDatum& rd, bool parallel) {
  DualityReport r = verify_duality(rd, parallel);
  Json j = to_json(r);
  bool ok = r.all_hold();
  if (rd.rank() <= kDefaultGeometricRankCap) {
    KGroups k = k_theory(rd, Variant::extended, parallel);
    const bool match = static_cast<std::int64_t>(k.k0.rank) == r.ranks.even &&
                       static_cast<std::int64_t>(k.k1.rank) == r.ranks.odd;
    j["bredon"] = Json{{"k0_rank", k.k0.rank}, {"k1_rank", k.k1.rank}, {"matches_oracle", match}};
    ok = ok && match;
  } else {
    j["bredon"] = Json{{"skipped", "rank above the geometric cap"}};
  }
  j["all_hold"] = ok;
  return j;
}

inline int cmd_verify_duality(const RunConfig& cfg, const Cache& cache, std::ostream& out) {
  RootDatum rd = datum(cfg);
  const std::string key = cache_key("verify-duality", rd, "");
  Json j;
  if (auto hit = cache.load(key)) {
    j = *hit;
  } else {
    j = verify_payload(rd, cfg.parallel);
    cache.store(key, j);
  }
  const bool ok = j.at("all_hold").get<bool>();
  if (cfg.output == "json") {
    out << j.dump(2) << "\n";
  } else {
    auto pair = [](const Json& r) {
      return "(" + std::to_string(r.at("even").get<std::int64_t>()) + ", " +
             std::to_string(r.at("odd").get<std::int64_t>()) + ")";
    };
    out << "group       " << j.at("group").get<std::string>() << "  ranks " << pair(j.at("ranks")) << "\n"
        << "dual group  " << j.at("dual_group").get<std::string>() << "  ranks " << pair(j.at("dual_ranks")) << "\n"
        << "duality     " << (j.at("duality_holds").get<bool>() ? "holds" : "FAILS") << "\n";
    for (auto& c : j.at("affine_checks"))
      out << "affine      " << c.at("lhs").get<std::string>() << " " << pair(c.at("lhs_ranks")) << " vs "
          << c.at("rhs").get<std::string>() << " " << pair(c.at("rhs_ranks")) << ": "
          << (c.at("holds").get<bool>() ? "holds" : "FAILS") << "\n";
    const Json& b = j.at("bredon");
    if (b.contains("skipped"))
      out << "bredon      skipped (" << b.at("skipped").get<std::string>() << ")\n";
    else
      out << "bredon      K ranks (" << b.at("k0_rank").get<std::size_t>() << ", " << b.at("k1_rank").get<std::size_t>()
          << ") " << (b.at("matches_oracle").get<bool>() ? "match" : "MISMATCH") << "\n";
  }
  return ok ? 0 : 1;
}

inline int cmd_clifford_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.rank < 1 || cfg.rank > static_cast<int>(kCliffordMaxN))
    throw InvalidArgument("clifford-check supports 1 <= n <= " + std::to_string(kCliffordMaxN));
  auto results = clifford_check(static_cast<std::size_t>(cfg.rank));
  bool ok = true;
  Json checks = Json::array();
  for (auto& r : results) {
    ok = ok && r.passed;
    checks.push_back(Json{{"name", r.name}, {"passed", r.passed}});
    if (!r.passed) err << "failed: " << r.name << "\n";
  }
  if (cfg.output == "json") {
    out << Json{{"n", cfg.rank}, {"checks", checks}, {"all_passed", ok}}.dump(2) << "\n";
  } else {
    for (auto& r : results) out << (r.passed ? "pass  " : "FAIL  ") << r.name << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace cli

/// Runs one command; never throws.
inline RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunConfig cfg;
  CLI::App app{"Root data, Langlands duality and K-theory of affine Weyl groups", "weylk"};
  app.require_subcommand(1);
  std::string variant;

  auto type_args = [&](CLI::App* sub) {
    sub->add_option("series", cfg.series, "Cartan series A..G")->required();
    sub->add_option("rank", cfg.rank, "rank")->required();
    sub->add_option("--isogeny", cfg.isogeny, "sc, adj or custom:<v1>;<v2> (coroot coordinates)");
    sub->add_option("--output", cfg.output, "human or json")->check(CLI::IsMember({"human", "json"}));
  };
  auto pipeline_args = [&](CLI::App* sub) {
    sub->add_flag("--parallel", cfg.parallel, "compute classes and degrees concurrently");
    sub->add_option("--cache-dir", cfg.cache_dir, "cache directory (default: $WEYLK_CACHE)");
  };
  CLI::App* dual = app.add_subcommand("dual", "Langlands dual, connection index, fundamental group and center");
  type_args(dual);
  CLI::App* kt = app.add_subcommand("ktheory", "K-theory of the (extended) affine Weyl group via Bredon homology");
  type_args(kt);
  pipeline_args(kt);
  kt->add_option("--variant", variant, "affine or extended")->check(CLI::IsMember({"affine", "extended"}));
  CLI::App* vd = app.add_subcommand("verify-duality", "rational K-theory of G against its Langlands dual");
  type_args(vd);
  pipeline_args(vd);
  CLI::App* cc = app.add_subcommand("clifford-check", "algebraic identities in the Clifford algebra");
  cc->add_option("n", cfg.rank, "dimension of t (1..3)")->required();
  cc->add_option("--output", cfg.output, "human or json")->check(CLI::IsMember({"human", "json"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return {app.exit(e, out, err), out.str(), err.str()};
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return {2, out.str(), err.str()};
  }
  if (!variant.empty()) cfg.variant = variant;
  if (cfg.cache_dir.empty())
    if (const char* env = std::getenv("WEYLK_CACHE")) cfg.cache_dir = env;
  cli::Cache cache(cfg.cache_dir);

  int code = 0;
  try {
    if (dual->parsed()) {
      cfg.command = Command::dual;
      code = cli::cmd_dual(cfg, out);
    } else if (kt->parsed()) {
      cfg.command = Command::ktheory;
      code = cli::cmd_ktheory(cfg, cache, out);
    } else if (vd->parsed()) {
      cfg.command = Command::verify_duality;
      code = cli::cmd_verify_duality(cfg, cache, out);
    } else {
      cfg.command = Command::clifford_check;
      code = cli::cmd_clifford_check(cfg, out, err);
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    code = 2;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    code = 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    code = 1;
  }
  return {code, out.str(), err.str()};
}

}  // namespace weylk
