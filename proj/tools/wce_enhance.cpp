// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/batch.hpp>
#include <wce/image_io.hpp>
#include <wce/pipeline.hpp>
#include <wce/report.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct EnhanceArgs {
    std::string in;
    std::string out;
    std::string config;
    std::string report;
    bool dump_intermediates = false;
    bool omit_timing = false;
    unsigned jobs = 1;
};

struct MetricsArgs {
    std::string orig;
    std::string enh;
    std::string config;
};

wce::EnhanceConfig config_from(const std::string& path)
{
    return path.empty() ? wce::EnhanceConfig{} : wce::load_config(path);
}

bool write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    return static_cast<bool>(out);
}

int cmd_enhance(const EnhanceArgs& args)
{
    wce::BatchOptions opts;
    try {
        opts.config = config_from(args.config);
    } catch (const wce::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    opts.out_dir = args.out;
    opts.dump_intermediates = args.dump_intermediates;
    opts.jobs = args.jobs;
    opts.record_timing = !args.omit_timing;

    if (!fs::exists(args.in)) {
        std::cerr << "error: " << args.in << ": no such file or directory\n";
        return kExitFailure;
    }
    const auto inputs = wce::collect_inputs(args.in);
    if (inputs.empty()) {
        std::cerr << "error: no .png or .ppm images in " << args.in << '\n';
        return kExitFailure;
    }

    wce::RunManifest manifest;
    try {
        manifest = wce::run_batch(inputs, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }

    fs::path json_path = args.report.empty() ? fs::path(args.out) / "report.json" : fs::path(args.report);
    if (json_path.extension() == ".csv") {
        json_path.replace_extension(".json");
    }
    fs::path csv_path = json_path;
    csv_path.replace_extension(".csv");
    if (json_path.has_parent_path()) {
        fs::create_directories(json_path.parent_path());
    }
    bool written = write_file(json_path, wce::to_json(manifest).dump(2) + "\n");
    written = write_file(csv_path, wce::manifest_csv(manifest)) && written;

    for (const auto& img : manifest.images) {
        if (!img.ok) {
            std::cerr << "error: " << img.input.string() << ": " << img.message << '\n';
        }
    }
    if (!written) {
        std::cerr << "error: cannot write report " << json_path << '\n';
        return kExitFailure;
    }
    std::cout << manifest.ok_count << "/" << manifest.images.size() << " images enhanced; report: " << json_path.string()
              << ", " << csv_path.string() << '\n';
    return manifest.ok_count == manifest.images.size() ? kExitOk : kExitFailure;
}

int cmd_metrics(const MetricsArgs& args)
{
    wce::EnhanceConfig cfg;
    try {
        cfg = config_from(args.config);
    } catch (const wce::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    try {
        const wce::RgbImage orig = wce::load_image(args.orig);
        const wce::RgbImage enh = wce::load_image(args.enh);
        const wce::MetricsReport report = wce::evaluate(orig, enh, cfg);
        std::cout << wce::to_json(report).dump(2) << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Capsule endoscopy image enhancement and quality scoring"};
    app.require_subcommand(1);

    EnhanceArgs enhance_args;
    auto* enhance = app.add_subcommand("enhance", "Enhance a PNG file or a directory of PNG files");
    enhance->add_option("--in", enhance_args.in, "Input image or directory")->required();
    enhance->add_option("--out", enhance_args.out, "Output directory")->required();
    enhance->add_option("--config", enhance_args.config, "key = value configuration file");
    enhance->add_option("--report", enhance_args.report,
                        "JSON manifest path; the CSV is written next to it (default <out>/report.json)");
    enhance->add_flag("--dump-intermediates", enhance_args.dump_intermediates,
                      "Also write X.In.png, X.L.png, X.rs.png, X.Sc.png and X.hist.json");
    enhance->add_option("--jobs", enhance_args.jobs, "Images processed concurrently")
        ->check(CLI::Range(1u, 256u));
    enhance->add_flag("--omit-timing", enhance_args.omit_timing,
                      "Report wall_time_ms as 0 so reports are reproducible");

    MetricsArgs metrics_args;
    auto* metrics = app.add_subcommand("metrics", "Score an original/enhanced pair and print JSON");
    metrics->add_option("--orig", metrics_args.orig, "Original image")->required();
    metrics->add_option("--enh", metrics_args.enh, "Enhanced image")->required();
    metrics->add_option("--config", metrics_args.config, "key = value configuration file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (enhance->parsed()) {
        return cmd_enhance(enhance_args);
    }
    return cmd_metrics(metrics_args);
}
