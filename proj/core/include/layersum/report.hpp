#pragma once

#include <filesystem>
#include <string>

#include "layersum/config.hpp"
#include "layersum/run.hpp"

namespace layersum {

/// Everything a run produces. The JSON report emitted by report_to_json()
/// is a pure function of (config, seed): the volatile fields (wall time,
/// worker count) go to the separate run-meta document instead, so reports
/// from different worker counts or invocations compare byte-identical.
struct RunReport {
  RunConfig config;
  RunOutcome outcome;
  std::string version;
};

/// Validate, execute and package a run.
RunReport run(const RunConfig& cfg, const SetSink& sink = {});

/// Deterministic JSON document: config echo, per-set summaries ordered by
/// set_index, pooled moments, total draw count.
std::string report_to_json(const RunReport& report);

/// Volatile companion document: wall time and worker count.
std::string run_meta_to_json(const RunReport& report);

/// Per-set summaries as CSV (one row per set).
std::string summaries_to_csv(const RunReport& report);

/// Config echo as a JSON object; parse_config_json(render_config(cfg)) == cfg.
std::string render_config(const RunConfig& cfg);

/// Parses the JSON config-file format. Unknown keys and invariant violations
/// raise config_error naming the field.
RunConfig parse_config_json(const std::string& text);

/// Writes text to path, creating parent directories. Throws io_error.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace layersum
