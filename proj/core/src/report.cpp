#include "layersum/report.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "layersum/version.hpp"
#include "text_util.hpp"

namespace layersum {

namespace {

using ordered_json = nlohmann::ordered_json;

// NaN is not representable in JSON; nlohmann would emit null anyway, but do it
// explicitly so the schema can say "number or null".
ordered_json json_number(double value) {
  if (std::isnan(value)) return nullptr;
  return value;
}

ordered_json summary_to_json(const SetSummary& s) {
  ordered_json j;
  j["set_index"] = s.set_index;
  if (s.realized_k) j["realized_k"] = *s.realized_k;
  j["count"] = s.count;
  j["mean"] = json_number(s.mean);
  j["median"] = json_number(s.median);
  j["std_dev"] = json_number(s.std_dev);
  j["skewness"] = json_number(s.skewness);
  j["excess_kurtosis"] = json_number(s.excess_kurtosis);
  j["min"] = json_number(s.min);
  j["q1"] = json_number(s.q1);
  j["q3"] = json_number(s.q3);
  j["max"] = json_number(s.max);
  j["outliers"] = s.outlier_count;
  j["pct_mean"] = json_number(s.pct_mean);
  j["pct_median"] = json_number(s.pct_median);
  j["pct_std"] = json_number(s.pct_std);
  j["jb_stat"] = json_number(s.jb_stat);
  j["jb_p"] = json_number(s.jb_p);
  if (s.sw_w) {
    j["sw_w"] = json_number(*s.sw_w);
    j["sw_p"] = json_number(*s.sw_p);
  }
  j["ks_d"] = json_number(s.ks_d);
  j["ks_p"] = json_number(s.ks_p);
  return j;
}

ordered_json config_to_json(const RunConfig& cfg) {
  ordered_json j;
  j["layer"] = to_string(cfg.layer);
  if (cfg.layer == LayerKind::fixed) j["k"] = cfg.fixed_k;
  j["max_number"] = cfg.max_number;
  j["numbers"] = cfg.total_numbers;
  j["sets"] = cfg.total_sets;
  j["additions"] = cfg.total_additions;
  j["seed"] = cfg.seed.value;
  return j;
}

template <typename T>
T get_field(const ordered_json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  const auto& field = j.at(key);
  if (!field.is_number_unsigned() && !field.is_number_integer())
    throw config_error(std::string(key) + " must be an unsigned integer");
  if (field.is_number_integer() && field.template get<std::int64_t>() < 0)
    throw config_error(std::string(key) + " must be non-negative");
  return field.template get<T>();
}

}  // namespace

RunReport run(const RunConfig& cfg, const SetSink& sink) {
  RunReport report;
  report.config = cfg;
  report.outcome = generate_run(cfg, sink);
  report.version = kVersion;
  return report;
}

std::string report_to_json(const RunReport& report) {
  ordered_json j;
  j["tool"] = {{"name", "layersum"}, {"version", report.version}};
  j["config"] = config_to_json(report.config);
  // KS p-values are computed with mu/sigma fitted from each set, which makes
  // them anti-conservative (Lilliefors); flag that property explicitly.
  j["ks_params_fitted_from_sample"] = true;
  ordered_json pooled;
  pooled["count"] = report.outcome.pooled.count();
  pooled["mean"] = json_number(report.outcome.pooled.mean());
  pooled["std_dev"] = json_number(report.outcome.pooled.std_dev_sample());
  pooled["skewness"] = json_number(report.outcome.pooled.skewness());
  pooled["excess_kurtosis"] = json_number(report.outcome.pooled.excess_kurtosis());
  j["pooled"] = pooled;
  j["total_draws"] = report.outcome.total_draws;
  ordered_json sets = ordered_json::array();
  for (const auto& s : report.outcome.summaries) sets.push_back(summary_to_json(s));
  j["sets"] = sets;
  return j.dump(2) + "\n";
}

std::string run_meta_to_json(const RunReport& report) {
  ordered_json j;
  j["wall_seconds"] = report.outcome.wall_seconds;
  j["workers"] = report.config.workers;
  return j.dump(2) + "\n";
}

std::string summaries_to_csv(const RunReport& report) {
  using detail::fmt_double;
  using detail::fmt_u64;
  std::string out =
      "set_index,realized_k,count,mean,median,std_dev,skewness,excess_kurtosis,"
      "min,q1,q3,max,outliers,pct_mean,pct_median,pct_std,jb_stat,jb_p,sw_w,sw_p,"
      "ks_d,ks_p\n";
  for (const auto& s : report.outcome.summaries) {
    out += fmt_u64(s.set_index);
    out += ',';
    out += s.realized_k ? fmt_u64(*s.realized_k) : "";
    out += ',';
    out += fmt_u64(s.count);
    for (double v : {s.mean, s.median, s.std_dev, s.skewness, s.excess_kurtosis,
                     s.min, s.q1, s.q3, s.max}) {
      out += ',';
      out += fmt_double(v);
    }
    out += ',';
    out += fmt_u64(s.outlier_count);
    for (double v : {s.pct_mean, s.pct_median, s.pct_std, s.jb_stat, s.jb_p}) {
      out += ',';
      out += fmt_double(v);
    }
    out += ',';
    out += s.sw_w ? fmt_double(*s.sw_w) : "";
    out += ',';
    out += s.sw_p ? fmt_double(*s.sw_p) : "";
    out += ',';
    out += fmt_double(s.ks_d);
    out += ',';
    out += fmt_double(s.ks_p);
    out += '\n';
  }
  return out;
}

std::string render_config(const RunConfig& cfg) {
  return config_to_json(cfg).dump(2) + "\n";
}

RunConfig parse_config_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw config_error("config file must hold a JSON object");

  static const char* known[] = {"layer", "k",    "max_number", "numbers",
                                "sets",  "additions", "seed",  "workers"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw config_error("unknown config field '" + key + "'");
  }

  RunConfig cfg;
  if (j.contains("layer")) {
    const auto& layer = j.at("layer");
    if (layer.is_string()) {
      cfg.layer = layer_from_string(layer.get<std::string>());
    } else if (layer.is_number_integer() || layer.is_number_unsigned()) {
      cfg.layer = layer_from_string(std::to_string(layer.get<std::uint64_t>()));
    } else {
      throw config_error("layer must be a string or integer");
    }
  }
  cfg.fixed_k = get_field<std::uint64_t>(j, "k", cfg.fixed_k);
  cfg.max_number = get_field<std::uint64_t>(j, "max_number", cfg.max_number);
  cfg.total_numbers = get_field<std::uint64_t>(j, "numbers", cfg.total_numbers);
  cfg.total_sets = get_field<std::uint64_t>(j, "sets", cfg.total_sets);
  cfg.total_additions = get_field<std::uint64_t>(j, "additions", cfg.total_additions);
  cfg.seed.value = get_field<std::uint64_t>(j, "seed", cfg.seed.value);
  cfg.workers = get_field<unsigned>(j, "workers", cfg.workers);
  return cfg;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.empty()) throw io_error("empty output path");
  std::error_code ec;
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw io_error("write failed for " + path.string());
}

}  // namespace layersum
