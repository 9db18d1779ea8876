// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#pragma once

#include <wce/config.hpp>
#include <wce/metrics.hpp>

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace wce {

struct BatchOptions {
    std::filesystem::path out_dir;
    EnhanceConfig config;
    bool dump_intermediates = false;
    unsigned jobs = 1;
    // When false every wall_time_ms is reported as 0 so reports are reproducible byte for byte.
    bool record_timing = true;
};

struct ImageOutcome {
    std::filesystem::path input;
    std::filesystem::path output;
    bool ok = false;
    std::string message;
    MetricsReport report;
};

struct RunManifest {
    std::filesystem::path out_dir;
    EnhanceConfig config;
    std::vector<ImageOutcome> images; // sorted by input file name
    std::size_t ok_count = 0;
    // Mean of each metric over ok images where it is finite and defined.
    std::map<std::string, std::optional<double>> means;
};

/// A file yields itself; a directory yields its .png/.ppm files (not
/// recursive, previous *.enhanced.* outputs skipped), sorted by file name.
std::vector<std::filesystem::path> collect_inputs(const std::filesystem::path& in);

/// Enhances and scores every input, writing X.enhanced.png (and the debug
/// planes when requested) into opts.out_dir. Per-image failures are recorded,
/// never thrown.
RunManifest run_batch(const std::vector<std::filesystem::path>& inputs, const BatchOptions& opts);

nlohmann::json to_json(const RunManifest& manifest);

/// Header line plus one row per ok image.
std::string manifest_csv(const RunManifest& manifest);

} // namespace wce
