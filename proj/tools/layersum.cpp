// layersum: generate layered random-summation datasets, analyze them with
// streaming statistics and normality diagnostics, and export plot-ready data.
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "layersum/export_csv.hpp"
#include "layersum/raw_dump.hpp"
#include "layersum/report.hpp"
#include "layersum/table.hpp"
#include "layersum/version.hpp"

namespace fs = std::filesystem;
using namespace layersum;

namespace {

unsigned default_workers() {
  if (const char* env = std::getenv("LAYERSUM_WORKERS")) {
    unsigned value = 0;
    const auto end = env + std::string_view(env).size();
    if (std::from_chars(env, end, value).ec == std::errc{} && value >= 1)
      return value;
    std::cerr << "layersum: ignoring invalid LAYERSUM_WORKERS='" << env << "'\n";
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw >= 1 ? hw : 1;
}

std::uint64_t resolve_seed(const std::string& text) {
  if (text == "random") {
    std::random_device device;
    const std::uint64_t seed =
        (static_cast<std::uint64_t>(device()) << 32) ^ device();
    std::cerr << "layersum: chose random seed " << seed << "\n";
    return seed;
  }
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end)
    throw config_error("seed must be a 64-bit unsigned integer or 'random', got '" +
                       text + "'");
  return value;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CliOptions {
  std::string layer;
  std::uint64_t fixed_k = 1;
  std::uint64_t max_number = 100;
  std::uint64_t numbers = 1000;
  std::uint64_t sets = 10000;
  std::uint64_t additions = 10000;
  std::string seed;
  unsigned workers = 0;
  std::string out_dir = ".";
  std::string format = "json";
  std::vector<std::string> exports;
  unsigned bins = 100;
  std::string select;
  std::string dump_raw;
  std::string profile;
  std::string config_file;
  bool table02 = false;
};

int run_main(const CliOptions& opt, const CLI::App& app) {
  RunConfig cfg;
  bool seed_given = false;
  bool workers_given = false;

  if (!opt.config_file.empty()) {
    const std::string text = read_file(opt.config_file);
    cfg = parse_config_json(text);
    const auto file_json = nlohmann::json::parse(text);
    seed_given = file_json.contains("seed");
    workers_given = file_json.contains("workers");
  }
  if (app.count("--profile")) apply_profile(cfg, opt.profile);
  if (app.count("--layer")) cfg.layer = layer_from_string(opt.layer);
  if (app.count("--k")) cfg.fixed_k = opt.fixed_k;
  if (app.count("--max-number")) cfg.max_number = opt.max_number;
  if (app.count("--numbers")) cfg.total_numbers = opt.numbers;
  if (app.count("--sets")) cfg.total_sets = opt.sets;
  if (app.count("--additions")) cfg.total_additions = opt.additions;
  if (app.count("--seed")) {
    cfg.seed.value = resolve_seed(opt.seed);
    seed_given = true;
  }
  if (app.count("--workers"))
    cfg.workers = opt.workers;
  else if (!workers_given)
    cfg.workers = default_workers();

  if (!app.count("--layer") && opt.config_file.empty() && !opt.table02)
    throw config_error("layer is required (--layer {1|2|3|fixed})");
  if (!seed_given)
    throw config_error("seed is required (--seed N or --seed random)");
  if (cfg.layer == LayerKind::fixed && !app.count("--k") && opt.config_file.empty())
    throw config_error("k is required in fixed mode (--k N)");
  validate(cfg);

  const fs::path out_dir(opt.out_dir);

  if (opt.table02) {
    const std::vector<MetricsRow> rows = metrics_table(cfg);
    std::fputs(metrics_table_text(rows).c_str(), stdout);
    write_text_file(out_dir / "table02.csv", metrics_table_csv(rows));
    std::printf("wrote %s\n", (out_dir / "table02.csv").string().c_str());
    return 0;
  }

  // Work out which sets must keep their raw values around after analysis.
  const bool want_dump = !opt.dump_raw.empty();
  bool want_histogram = false;
  std::optional<SetSelection> selection;
  for (const std::string& kind : opt.exports)
    if (kind == "histogram") want_histogram = true;
  if (app.count("--select")) selection = parse_selection(opt.select);

  const SetSelection hist_selection =
      selection ? *selection : SetSelection{SetSelection::Mode::pooled, {}};
  const SetSelection box_selection =
      selection ? *selection : SetSelection{SetSelection::Mode::twelve, {}};

  std::vector<std::uint32_t> hist_indices;
  bool retain_all = want_dump;
  std::unordered_set<std::uint32_t> retain_some;
  if (want_histogram) {
    hist_indices = resolve_selection(
        hist_selection, static_cast<std::uint32_t>(cfg.total_sets));
    if (hist_selection.mode == SetSelection::Mode::pooled ||
        hist_selection.mode == SetSelection::Mode::all) {
      retain_all = true;
    } else {
      retain_some.insert(hist_indices.begin(), hist_indices.end());
    }
  }

  std::vector<SetResult> retained(retain_all ? cfg.total_sets : 0);
  std::vector<std::pair<std::uint32_t, std::vector<std::uint64_t>>> kept_values;
  SetSink sink;
  if (retain_all) {
    sink = [&](const SetResult& r) { retained[r.set_index - 1] = r; };
  } else if (!retain_some.empty()) {
    sink = [&](const SetResult& r) {
      if (retain_some.contains(r.set_index))
        kept_values.emplace_back(r.set_index, r.values);
    };
  }

  const RunReport report = run(cfg, sink);

  write_text_file(out_dir / "report.json", report_to_json(report));
  write_text_file(out_dir / "run_meta.json", run_meta_to_json(report));
  if (opt.format == "csv")
    write_text_file(out_dir / "summaries.csv", summaries_to_csv(report));

  auto values_of = [&](std::uint32_t set_index) -> const std::vector<std::uint64_t>& {
    if (retain_all) return retained[set_index - 1].values;
    for (const auto& [index, values] : kept_values)
      if (index == set_index) return values;
    throw io_error("internal: set " + std::to_string(set_index) + " not retained");
  };

  for (const std::string& kind : opt.exports) {
    if (kind == "histogram") {
      std::vector<std::pair<std::uint32_t, Histogram>> series;
      if (hist_selection.mode == SetSelection::Mode::pooled) {
        std::vector<double> pooled;
        pooled.reserve(cfg.total_sets * cfg.total_numbers);
        for (const SetResult& set : retained)
          for (std::uint64_t v : set.values)
            pooled.push_back(static_cast<double>(v));
        series.emplace_back(0, histogram(pooled, opt.bins));
      } else {
        for (std::uint32_t s : hist_indices) {
          const auto& values = values_of(s);
          std::vector<double> as_double(values.begin(), values.end());
          series.emplace_back(s, histogram(as_double, opt.bins));
        }
      }
      write_text_file(out_dir / "histogram.csv", histogram_csv(series));
    } else if (kind == "boxplot") {
      const auto indices = resolve_selection(
          box_selection, static_cast<std::uint32_t>(cfg.total_sets));
      write_text_file(out_dir / "boxplot.csv",
                      boxplot_csv(report.outcome.summaries, indices));
    } else if (kind == "stddev_percent") {
      write_text_file(out_dir / "stddev_percent.csv",
                      stddev_percent_csv(report.outcome.summaries));
    } else {
      throw config_error("export must be histogram|boxplot|stddev_percent, got '" +
                         kind + "'");
    }
  }

  if (want_dump) {
    if (opt.dump_raw == "bin")
      write_raw_binary(out_dir / "raw.bin", retained);
    else if (opt.dump_raw == "csv")
      write_raw_csv(out_dir / "raw.csv", retained);
    else
      throw config_error("dump-raw must be bin or csv, got '" + opt.dump_raw + "'");
  }

  const Moments& pooled = report.outcome.pooled;
  std::printf("layersum %s\n", kVersion);
  std::printf("layer=%s sets=%llu numbers=%llu additions=%llu max_number=%llu seed=%llu workers=%u\n",
              to_string(cfg.layer),
              static_cast<unsigned long long>(cfg.total_sets),
              static_cast<unsigned long long>(cfg.total_numbers),
              static_cast<unsigned long long>(cfg.total_additions),
              static_cast<unsigned long long>(cfg.max_number),
              static_cast<unsigned long long>(cfg.seed.value), cfg.workers);
  std::printf("pooled: count=%llu mean=%.4f std_dev=%.4f skew=%.4f exkurt=%.4f\n",
              static_cast<unsigned long long>(pooled.count()), pooled.mean(),
              pooled.std_dev_sample(), pooled.skewness(), pooled.excess_kurtosis());
  std::printf("draws=%llu wall=%.2fs\n",
              static_cast<unsigned long long>(report.outcome.total_draws),
              report.outcome.wall_seconds);
  std::printf("wrote %s\n", (out_dir / "report.json").string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"layered random-summation simulator and analysis toolkit"};
  app.get_formatter()->column_width(34);

  CliOptions opt;
  app.add_option("--layer", opt.layer, "scheme: 1|2|3|fixed")
      ->check(CLI::IsMember({"1", "2", "3", "fixed"}));
  app.add_option("--k", opt.fixed_k, "summand count (fixed mode)");
  app.add_option("--max-number", opt.max_number, "each draw is uniform on {1..m}");
  app.add_option("--numbers", opt.numbers, "values per set (n)");
  app.add_option("--sets", opt.sets, "number of sets (S)");
  app.add_option("--additions", opt.additions, "summand-count ceiling (T)");
  app.add_option("--seed", opt.seed, "master seed: 64-bit integer or 'random'");
  app.add_option("--workers", opt.workers,
                 "worker threads (default: LAYERSUM_WORKERS or hardware)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", opt.out_dir, "output directory (default: .)");
  app.add_option("--format", opt.format, "report format: json adds report.json only; csv adds summaries.csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--export", opt.exports,
                 "series to write: histogram|boxplot|stddev_percent (repeatable)");
  app.add_option("--bins", opt.bins, "histogram bin count (default 100)")
      ->check(CLI::PositiveNumber);
  app.add_option("--select", opt.select,
                 "sets for histogram/boxplot exports: pooled|all|twelve|i,j,k");
  app.add_option("--dump-raw", opt.dump_raw, "write every generated value: bin|csv")
      ->check(CLI::IsMember({"bin", "csv"}));
  app.add_option("--profile", opt.profile, "parameter preset: paper|desk")
      ->check(CLI::IsMember({"paper", "desk"}));
  app.add_option("--config", opt.config_file, "JSON config file (flags override)");
  app.add_flag("--table02", opt.table02,
               "emit the six-row first/last-set metrics table with oracle columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run_main(opt, app);
  } catch (const config_error& e) {
    std::cerr << "layersum: config error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "layersum: I/O error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "layersum: error: " << e.what() << "\n";
    return 1;
  }
}
