// Command-line front end over the C interface.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookbias/hookbias.h"

#ifndef HOOKBIAS_DEFAULT_DATA_DIR
#define HOOKBIAS_DEFAULT_DATA_DIR "data"
#endif

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct Range {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
};

// "5" or "2..8".
Range parse_range(const std::string& text) {
  auto parse_one = [&](const std::string& s) -> std::uint32_t {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || v > UINT32_MAX) throw CLI::ValidationError("range", "bad value '" + text + "'");
    return static_cast<std::uint32_t>(v);
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    std::uint32_t v = parse_one(text);
    return {v, v};
  }
  Range r{parse_one(text.substr(0, dots)), parse_one(text.substr(dots + 2))};
  if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range '" + text + "'");
  return r;
}

class LibraryError : public std::runtime_error {
 public:
  LibraryError(hb_status status, const std::string& message) : std::runtime_error(message), status(status) {}
  hb_status status;
};

class Session {
 public:
  Session() {
    if (hb_context_create(&ctx_) != HB_OK) throw std::runtime_error("cannot create library context");
  }
  ~Session() { hb_context_destroy(ctx_); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  hb_context* get() const { return ctx_; }

  void check(hb_status status) const {
    if (status != HB_OK) throw LibraryError(status, hb_last_error(ctx_));
  }

  // Takes ownership of a library-allocated string.
  static std::string take(char* s) {
    std::string out = s ? s : "";
    hb_string_free(s);
    return out;
  }

 private:
  hb_context* ctx_ = nullptr;
};

struct GlobalOptions {
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  unsigned workers = 1;
  std::string output;
};

void write_output(const GlobalOptions& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(g.output, std::ios::trunc);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + g.output);
}

std::string summarize(const std::string& report_json) {
  auto j = nlohmann::json::parse(report_json);
  std::ostringstream s;
  s << j.value("kind", "report") << ": " << j.value("status", "?") << " (checked " << j.value("checked", 0)
    << ", exceptions " << j["exceptions"].size() << ", counterexamples " << j["counterexamples"].size() << ")\n";
  return s.str();
}

int emit_report(const GlobalOptions& g, char* raw, int passed) {
  std::string report = Session::take(raw);
  write_output(g, g.format == "text" ? summarize(report) : report);
  return passed ? kExitPass : kExitFail;
}

std::vector<hb_violation> load_expected(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read expected-exceptions file " + path);
  auto j = nlohmann::json::parse(in);
  std::vector<hb_violation> out;
  for (const auto& e : j.at("expected_violations")) {
    out.push_back({e.at("t").get<std::uint32_t>(), e.at("n").get<std::uint32_t>()});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hook-length statistics of regular partitions: series, sets, maps and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  if (const char* env = std::getenv("HOOKBIAS_CACHE_DIR")) g.cache_dir = env;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", g.cache_dir, "Result cache directory (default: $HOOKBIAS_CACHE_DIR)");
  app.add_flag("--no-cache", g.no_cache, "Ignore the result cache");
  app.add_option("--workers", g.workers, "Worker threads (0 = all cores)");
  app.add_option("--output,-o", g.output, "Write the result to a file instead of stdout");

  // series
  std::string series_term = "kim";
  std::uint32_t series_t = 0, degree = 0;
  auto* series = app.add_subcommand("series", "Coefficients of the b_{t,2} series or a decomposition term");
  series->add_option("--term", series_term, "kim, or a decomposition term a..f")
      ->check(CLI::IsMember({"kim", "a", "b", "c", "d", "e", "f"}));
  series->add_option("--t", series_t, "t")->required();
  series->add_option("--degree", degree, "Truncation degree N")->required();

  // sets
  auto* sets = app.add_subcommand("sets", "OPO-overpartition sets");
  sets->require_subcommand(1);
  std::string set_id;
  std::uint32_t set_t = 0, set_n = 0, set_n_max = 0;
  auto* sets_enum = sets->add_subcommand("enumerate", "List every member of size n");
  sets_enum->add_option("--set", set_id, "A, A1, A2, Ahat3, Ahat4, B, C, D, E or F")->required();
  sets_enum->add_option("--t", set_t, "t")->required();
  sets_enum->add_option("--n", set_n, "n")->required();
  auto* sets_check = sets->add_subcommand("check", "Compare set sizes with series coefficients");
  sets_check->add_option("--set", set_id, "Set name")->required();
  sets_check->add_option("--t", set_t, "t")->required();
  sets_check->add_option("--n-max", set_n_max, "Largest n")->required();

  // inject
  std::string map_id, lambda;
  std::uint32_t map_t = 0;
  bool inverse = false;
  auto* inject = app.add_subcommand("inject", "Apply one map (or its inverse) to one object");
  inject->add_option("--map", map_id, "phi1, phi2, phi3, zeta1, zeta2 or zeta3")->required();
  inject->add_option("--t", map_t, "t")->required();
  inject->add_option("--lambda", lambda, "Object in part text format, e.g. \"10,~8,7,4,1\"")->required();
  inject->add_flag("--inverse", inverse, "Apply the inverse map instead");

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive verification runs");
  verify->require_subcommand(1);
  std::uint32_t vt = 0, v_n_max = 0, v_degree = 0, oracle_n_max = 60, ledger_n_max = 30;
  std::string t_range = "2..8", expected_path = std::string(HOOKBIAS_DEFAULT_DATA_DIR) + "/expected_exceptions.json";
  auto* vmap = verify->add_subcommand("map", "Check one map over its whole domain");
  vmap->add_option("--map", map_id, "Map name")->required();
  vmap->add_option("--t", vt, "t")->required();
  vmap->add_option("--n-max", v_n_max, "Largest n")->required();
  auto* vdec = verify->add_subcommand("decomposition", "Check the six-term decomposition");
  vdec->add_option("--t", vt, "t")->required();
  vdec->add_option("--degree", v_degree, "Truncation degree")->required();
  vdec->add_option("--oracle-n-max", oracle_n_max, "Exhaustive counting cross-check up to this n")->capture_default_str();
  auto* vconj = verify->add_subcommand("conjecture", "Check b_{t+1,2}(n) >= b_{t,2}(n)");
  vconj->add_option("--t", t_range, "t range, e.g. 2..8")->capture_default_str();
  vconj->add_option("--n-max", v_n_max, "Largest n")->required();
  vconj->add_option("--oracle-n-max", oracle_n_max, "Exhaustive counting cross-check up to this n")->capture_default_str();
  vconj->add_option("--ledger-n-max", ledger_n_max, "Set-cardinality ledger up to this n")->capture_default_str();
  vconj->add_option("--expected", expected_path, "JSON file of declared violations")->capture_default_str();
  auto* vseries = verify->add_subcommand("series", "Compare the b_{t,2} series with exhaustive counting");
  vseries->add_option("--t", t_range, "t range, e.g. 2..8")->capture_default_str();
  vseries->add_option("--n-max", v_n_max, "Largest n")->required();

  // table
  std::string table_t = "2..4", table_k = "1..3";
  std::uint32_t table_n_max = 0;
  auto* table = app.add_subcommand("table", "b_{t,k}(n) grid as CSV");
  table->add_option("--t", table_t, "t range")->capture_default_str();
  table->add_option("--k", table_k, "k range")->capture_default_str();
  table->add_option("--n-max", table_n_max, "Largest n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Session s;
    s.check(hb_context_set_workers(s.get(), g.workers));
    if (!g.no_cache && !g.cache_dir.empty()) s.check(hb_context_set_cache_dir(s.get(), g.cache_dir.c_str()));
    char* raw = nullptr;
    int passed = 0;

    if (series->parsed()) {
      hb_series* handle = nullptr;
      if (series_term == "kim") {
        s.check(hb_series_kim(s.get(), series_t, degree, &handle));
      } else {
        s.check(hb_series_term(s.get(), series_term[0], series_t, degree, &handle));
      }
      std::unique_ptr<hb_series, decltype(&hb_series_destroy)> owned(handle, hb_series_destroy);
      std::vector<std::string> coeffs;
      for (std::uint32_t n = 0; n <= degree; ++n) {
        s.check(hb_series_coeff_string(s.get(), handle, n, &raw));
        coeffs.push_back(Session::take(raw));
      }
      std::string out;
      if (g.format == "json") {
        // Coefficients stay strings so no value is ever rounded.
        nlohmann::json j = {{"series", series_term}, {"t", series_t}, {"degree", degree}, {"coefficients", coeffs}};
        out = j.dump(2) + "\n";
      } else {
        out = "n,coeff\n";
        for (std::uint32_t n = 0; n <= degree; ++n) out += std::to_string(n) + "," + coeffs[n] + "\n";
      }
      write_output(g, out);
      return kExitPass;
    }

    if (sets_enum->parsed()) {
      s.check(hb_set_enumerate(s.get(), set_id.c_str(), set_t, set_n, &raw));
      std::string lines = Session::take(raw);
      if (g.format == "json") {
        nlohmann::json members = nlohmann::json::array();
        std::istringstream in(lines);
        for (std::string line; std::getline(in, line);) members.push_back(line);
        lines = nlohmann::json{{"set", set_id}, {"t", set_t}, {"n", set_n}, {"members", members}}.dump(2) + "\n";
      }
      write_output(g, lines);
      return kExitPass;
    }
    if (sets_check->parsed()) {
      s.check(hb_check_set(s.get(), set_id.c_str(), set_t, set_n_max, &raw, &passed));
      return emit_report(g, raw, passed);
    }

    if (inject->parsed()) {
      if (inverse) {
        s.check(hb_invert(s.get(), map_id.c_str(), map_t, lambda.c_str(), &raw));
        nlohmann::json j = {{"map", map_id}, {"image", lambda}, {"preimage", Session::take(raw)}};
        write_output(g, j.dump() + "\n");
      } else {
        s.check(hb_inject(s.get(), map_id.c_str(), map_t, lambda.c_str(), &raw));
        write_output(g, Session::take(raw) + "\n");
      }
      return kExitPass;
    }

    if (vmap->parsed()) {
      s.check(hb_verify_map(s.get(), map_id.c_str(), vt, v_n_max, &raw, &passed));
      return emit_report(g, raw, passed);
    }
    if (vdec->parsed()) {
      s.check(hb_verify_decomposition(s.get(), vt, v_degree, oracle_n_max, &raw, &passed));
      return emit_report(g, raw, passed);
    }
    if (vconj->parsed()) {
      Range r = parse_range(t_range);
      auto expected = load_expected(expected_path);
      s.check(hb_verify_conjecture(s.get(), r.lo, r.hi, v_n_max, oracle_n_max, ledger_n_max, expected.data(),
                                   expected.size(), &raw, &passed));
      return emit_report(g, raw, passed);
    }
    if (vseries->parsed()) {
      Range r = parse_range(t_range);
      s.check(hb_verify_series_oracle(s.get(), r.lo, r.hi, v_n_max, &raw, &passed));
      return emit_report(g, raw, passed);
    }

    if (table->parsed()) {
      Range t = parse_range(table_t), k = parse_range(table_k);
      s.check(hb_table_csv(s.get(), t.lo, t.hi, k.lo, k.hi, table_n_max, &raw));
      write_output(g, Session::take(raw));
      return kExitPass;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << hb_status_name(e.status) << ": " << e.what() << "\n";
    switch (e.status) {
      case HB_ERR_PARSE:
      case HB_ERR_DOMAIN:
      case HB_ERR_INVALID_ARGUMENT: return kExitUsage;
      case HB_ERR_NOT_IN_IMAGE: return kExitFail;
      default: return kExitError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
