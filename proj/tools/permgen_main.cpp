// Command-line surface: reproducible estimation runs, exact verification
// suites, character-table export, counting reports, and series comparison.
//
// Exit codes: 0 success, 1 verification assertion failure, 2 usage error or
// guard violation.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "permgen/character.hpp"
#include "permgen/counting.hpp"
#include "permgen/experiments.hpp"
#include "permgen/jsonval.hpp"
#include "permgen/partition.hpp"
#include "permgen/verify.hpp"

using nlohmann::json;
using namespace permgen;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

uint64_t default_seed() {
  if (const char* env = std::getenv("PERMGEN_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw CLI::ValidationError("PERMGEN_SEED", "must be an unsigned integer");
    }
  }
  return 1;
}

json manifest(const std::string& subcommand, const json& config_echo, uint64_t seed,
              double runtime_ms, const std::vector<std::string>& outputs) {
  json out_paths = json::array();
  for (const auto& p : outputs) out_paths.push_back(p);
  return {
      {"subcommand", subcommand}, {"config", config_echo},
      {"seed", jexact(seed)},     {"tool_version", kVersion},
      {"timestamp", timestamp_utc()},
      {"runtime_ms", jf64(runtime_ms)},
      {"outputs", out_paths},
  };
}

// The payload subtree is byte-identical across reruns with the same config
// and seed; volatile fields (timestamp, runtime) live in the manifest only.
void emit(const json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << doc.dump(2) << "\n";
}

void write_tsv(const std::string& path, const std::string& header,
               const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << header << "\n";
  for (const auto& [a, b] : rows) out << a << "\t" << b << "\n";
}

std::string format_type_header(const Partition& p) { return p.to_string(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric-group generation workbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // --- estimate ------------------------------------------------------------
  auto* est = app.add_subcommand("estimate", "estimate the generation probability");
  ExperimentConfig est_cfg;
  est_cfg.trials = 10000;
  std::optional<uint64_t> est_seed;
  std::string est_json = "-";
  std::string est_group = "S";
  est->add_option("--n", est_cfg.n, "degree (>= 2)")->required();
  est->add_option("--trials", est_cfg.trials, "number of sampled tuples");
  est->add_option("--seed", est_seed, "RNG seed (default: PERMGEN_SEED or 1)");
  est->add_option("--generators", est_cfg.generators, "tuple size (2 or 3)")
      ->check(CLI::IsMember({2, 3}));
  est->add_option("--group", est_group, "sample from S or A")
      ->check(CLI::IsMember({"S", "A"}));
  est->add_flag("--exhaustive", est_cfg.exhaustive, "enumerate all tuples (n <= 4)");
  est->add_option("--workers", est_cfg.workers, "thread count (0 = all, 1 = serial)");
  est->add_option("--json", est_json, "output path ('-' = stdout)");

  // --- verify ----------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "run the exact verification suites");
  std::string suite = "all";
  VerifyLimits limits;
  ver->add_option("--suite", suite, "chars|lambda|counting|correlation|all")
      ->check(CLI::IsMember({"chars", "lambda", "counting", "correlation", "all"}));
  ver->add_option("--nmax", limits.chars_nmax, "orthogonality degree cap");
  ver->add_option("--lambda-nmax", limits.lambda_nmax, "closed-form scan cap");
  ver->add_option("--dim-nmax", limits.dim_bound_nmax, "dimension bound cap");
  ver->add_option("--mmax", limits.counting_mmax, "bounded-cycle cap");
  ver->add_option("--density-nmax", limits.density_nmax, "density report cap");
  ver->add_option("--workers", limits.workers, "thread count");

  // --- chars -----------------------------------------------------------------
  auto* chars = app.add_subcommand("chars", "export an exact character table as CSV");
  unsigned chars_n = 5;
  std::string chars_out = "-";
  int chars_workers = 0;
  chars->add_option("--n", chars_n, "degree")->required();
  chars->add_option("--out", chars_out, "CSV path ('-' = stdout)");
  chars->add_option("--workers", chars_workers, "thread count");

  // --- count -------------------------------------------------------------
  auto* count = app.add_subcommand("count", "exact counting quantities");
  std::string quantity;
  unsigned count_n = 0, count_m = 0, count_r = 0, count_order = 6, count_gens = 2;
  uint64_t count_nu = 1, count_N = 1;
  std::string count_json = "-";
  count->add_option("--quantity", quantity, "frakC|frakM|nuroots|bounded|kN|series")
      ->required()
      ->check(CLI::IsMember({"frakC", "frakM", "nuroots", "bounded", "kN", "series"}));
  count->add_option("--n", count_n, "degree");
  count->add_option("--nu", count_nu, "power (nuroots)");
  count->add_option("--m", count_m, "symbols (bounded)");
  count->add_option("--r", count_r, "max cycle length (bounded)");
  count->add_option("--N", count_N, "power range (kN)");
  count->add_option("--order", count_order, "series truncation order");
  count->add_option("--generators", count_gens, "series variant (2 or 3)")
      ->check(CLI::IsMember({2, 3}));
  count->add_option("--json", count_json, "output path ('-' = stdout)");

  // --- second-moment -----------------------------------------------------
  auto* sm = app.add_subcommand("second-moment", "power-walk hit statistic");
  ExperimentConfig sm_cfg;
  sm_cfg.trials = 1000;
  sm_cfg.window = 0;
  std::optional<uint64_t> sm_seed;
  std::string sm_json = "-", sm_tsv;
  sm->add_option("--n", sm_cfg.n, "degree")->required();
  sm->add_option("--N", sm_cfg.window, "walk length (default n^2)");
  sm->add_option("--trials", sm_cfg.trials, "trials");
  sm->add_option("--seed", sm_seed, "RNG seed");
  sm->add_option("--workers", sm_cfg.workers, "thread count");
  sm->add_option("--json", sm_json, "output path ('-' = stdout)");
  sm->add_option("--tsv", sm_tsv, "write the X histogram as two-column TSV");

  // --- words ---------------------------------------------------------------
  auto* words = app.add_subcommand("words", "word-tree hit statistic");
  ExperimentConfig words_cfg;
  words_cfg.trials = 1000;
  words_cfg.max_word_len = 4;
  std::optional<uint64_t> words_seed;
  std::string words_json = "-", words_tsv;
  words->add_option("--n", words_cfg.n, "degree")->required();
  words->add_option("--N", words_cfg.max_word_len, "maximum word length");
  words->add_option("--trials", words_cfg.trials, "trials");
  words->add_option("--seed", words_seed, "RNG seed");
  words->add_option("--workers", words_cfg.workers, "thread count");
  words->add_option("--json", words_json, "output path ('-' = stdout)");
  words->add_option("--tsv", words_tsv, "write identity frequency by length as TSV");

  // --- filter-stats --------------------------------------------------------
  auto* filter = app.add_subcommand("filter-stats",
                                    "density and rejection cost of the minimal-degree set");
  unsigned filter_n = 9;
  uint64_t filter_trials = 10000;
  std::optional<uint64_t> filter_seed;
  int filter_workers = 0;
  std::string filter_json = "-";
  filter->add_option("--n", filter_n, "degree")->required();
  filter->add_option("--trials", filter_trials, "trials");
  filter->add_option("--seed", filter_seed, "RNG seed");
  filter->add_option("--workers", filter_workers, "thread count");
  filter->add_option("--json", filter_json, "output path ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (est->parsed()) {
      est_cfg.seed = est_seed.value_or(default_seed());
      est_cfg.group = est_group[0];
      auto report = estimate_p(est_cfg);
      json doc{{"manifest", manifest("estimate", est_cfg.to_json(), est_cfg.seed,
                                     report.runtime_ms,
                                     est_json == "-" ? std::vector<std::string>{}
                                                     : std::vector<std::string>{est_json})},
               {"payload", report.payload()}};
      emit(doc, est_json);
      return 0;
    }

    if (ver->parsed()) {
      std::vector<CheckResult> results;
      if (suite == "chars") results = verify_chars(limits);
      else if (suite == "lambda") results = verify_lambda(limits);
      else if (suite == "counting") results = verify_counting(limits);
      else if (suite == "correlation") results = verify_correlation(limits);
      else results = verify_all(limits);

      json cfg{{"suite", suite},
               {"nmax", jexact(limits.chars_nmax)},
               {"lambda_nmax", jexact(limits.lambda_nmax)},
               {"dim_nmax", jexact(limits.dim_bound_nmax)},
               {"mmax", jexact(limits.counting_mmax)},
               {"density_nmax", jexact(limits.density_nmax)}};
      std::cout << json{{"manifest", manifest("verify", cfg, 0, 0, {})}}.dump() << "\n";
      size_t passed = 0, failed = 0, reports = 0;
      for (const auto& r : results) {
        std::cout << r.to_json().dump() << "\n";
        if (r.report_only) ++reports;
        else if (r.pass) ++passed;
        else ++failed;
      }
      std::cout << json{{"summary",
                         {{"passed", jexact(static_cast<uint64_t>(passed))},
                          {"failed", jexact(static_cast<uint64_t>(failed))},
                          {"report_only", jexact(static_cast<uint64_t>(reports))}}}}
                       .dump()
                << "\n";
      return all_passed(results) ? 0 : 1;
    }

    if (chars->parsed()) {
      const auto parts = partitions(chars_n);
      const auto table = character_table(chars_n, chars_workers);
      std::ostream* out = &std::cout;
      std::ofstream file;
      if (chars_out != "-") {
        file.open(chars_out);
        if (!file) throw std::runtime_error("cannot open output file: " + chars_out);
        out = &file;
      }
      *out << "partition";
      for (const auto& cls : parts) *out << "," << format_type_header(cls);
      *out << "\n";
      for (size_t r = 0; r < parts.size(); ++r) {
        *out << parts[r].to_string();
        for (size_t c = 0; c < parts.size(); ++c) *out << "," << table[r][c].str();
        *out << "\n";
      }
      return 0;
    }

    if (count->parsed()) {
      json value;
      json args;
      if (quantity == "frakC") {
        args["n"] = jexact(count_n);
        value = jexact(frak_c_size(count_n));
      } else if (quantity == "frakM") {
        args["n"] = jexact(count_n);
        value = jexact(frak_m_size(count_n));
      } else if (quantity == "nuroots") {
        args["n"] = jexact(count_n);
        args["nu"] = jexact(count_nu);
        value = jexact(count_nu_roots(count_n, count_nu));
      } else if (quantity == "bounded") {
        args["m"] = jexact(count_m);
        args["r"] = jexact(count_r);
        value = jexact(count_bounded_cycles(count_m, count_r));
      } else if (quantity == "kN") {
        args["n"] = jexact(count_n);
        args["N"] = jexact(count_N);
        value = jexact(k_of_n_roots(count_n, count_N));
      } else {  // series
        args["n"] = jexact(count_n);
        args["order"] = jexact(count_order);
        args["generators"] = jexact(count_gens);
        value = jf64(dixon_series(count_n, count_order, count_gens));
      }
      json doc{{"manifest", manifest("count", {{"quantity", quantity}}, 0, 0, {})},
               {"payload", {{"quantity", quantity}, {"args", args}, {"value", value}}}};
      emit(doc, count_json);
      return 0;
    }

    if (sm->parsed()) {
      sm_cfg.seed = sm_seed.value_or(default_seed());
      if (sm_cfg.window == 0) sm_cfg.window = sm_cfg.n * sm_cfg.n;
      auto report = second_moment_run(sm_cfg);
      std::vector<std::string> outputs;
      if (sm_json != "-") outputs.push_back(sm_json);
      if (!sm_tsv.empty()) outputs.push_back(sm_tsv);
      json doc{{"manifest", manifest("second-moment", sm_cfg.to_json(), sm_cfg.seed,
                                     report.runtime_ms, outputs)},
               {"payload", report.payload()}};
      emit(doc, sm_json);
      if (!sm_tsv.empty()) {
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& [x, c] : report.histogram)
          rows.emplace_back(std::to_string(x), std::to_string(c));
        write_tsv(sm_tsv, "x\ttrials", rows);
      }
      return 0;
    }

    if (words->parsed()) {
      words_cfg.seed = words_seed.value_or(default_seed());
      auto report = word_experiment(words_cfg);
      std::vector<std::string> outputs;
      if (words_json != "-") outputs.push_back(words_json);
      if (!words_tsv.empty()) outputs.push_back(words_tsv);
      json doc{{"manifest", manifest("words", words_cfg.to_json(), words_cfg.seed,
                                     report.runtime_ms, outputs)},
               {"payload", report.payload()}};
      emit(doc, words_json);
      if (!words_tsv.empty()) {
        std::vector<std::pair<std::string, std::string>> rows;
        uint64_t count_len = 1;
        for (size_t len = 0; len < report.identity_hits.size(); ++len) {
          if (len == 1) count_len = 4;
          else if (len > 1) count_len *= 3;
          const double freq = static_cast<double>(report.identity_hits[len]) /
                              (static_cast<double>(report.config.trials) * count_len);
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.12g", freq);
          rows.emplace_back(std::to_string(len), buf);
        }
        write_tsv(words_tsv, "length\tidentity_frequency", rows);
      }
      return 0;
    }

    if (filter->parsed()) {
      const uint64_t seed = filter_seed.value_or(default_seed());
      auto stats = min_degree_filter_stats(filter_n, filter_trials, seed, filter_workers);
      json cfg{{"n", jexact(filter_n)}, {"trials", jexact(filter_trials)}};
      json doc{{"manifest", manifest("filter-stats", cfg, seed, stats.runtime_ms,
                                     filter_json == "-" ? std::vector<std::string>{}
                                                        : std::vector<std::string>{filter_json})},
               {"payload", stats.payload()}};
      emit(doc, filter_json);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
