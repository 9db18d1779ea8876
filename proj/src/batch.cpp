// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/batch.hpp>

#include <wce/image_io.hpp>
#include <wce/pipeline.hpp>
#include <wce/report.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <fstream>
#include <thread>

namespace wce {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

bool is_image_name(const fs::path& p)
{
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext != ".png" && ext != ".ppm") {
        return false;
    }
    return p.stem().extension() != ".enhanced";
}

bool by_file_name(const fs::path& a, const fs::path& b)
{
    return a.filename().string() < b.filename().string()
           || (a.filename() == b.filename() && a.string() < b.string());
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
        throw ImageIoError(IoErrorKind::unwritable, path, "write failed");
    }
}

ImageOutcome process_one(const fs::path& input, const BatchOptions& opts)
{
    ImageOutcome outcome;
    outcome.input = input;
    const std::string stem = input.stem().string();
    outcome.output = opts.out_dir / (stem + ".enhanced.png");
    try {
        const RgbImage img = load_image(input);
        TimedEnhancement run = enhance_and_evaluate(img, opts.config, opts.dump_intermediates);
        save_image(run.result.image, outcome.output);
        if (opts.dump_intermediates && run.result.debug) {
            const DebugBundle& dbg = *run.result.debug;
            save_plane(dbg.i_n, opts.out_dir / (stem + ".In.png"));
            save_plane(dbg.l, opts.out_dir / (stem + ".L.png"));
            save_plane(dbg.r_s, opts.out_dir / (stem + ".rs.png"));
            save_plane(dbg.s_c, opts.out_dir / (stem + ".Sc.png"));
            write_text(opts.out_dir / (stem + ".hist.json"), to_json(dbg.histogram, dbg.i_max).dump(2) + "\n");
        }
        if (!opts.record_timing) {
            run.report.wall_time_ms = 0.0;
        }
        outcome.report = run.report;
        outcome.ok = true;
    } catch (const std::exception& e) {
        outcome.ok = false;
        outcome.message = e.what();
    }
    return outcome;
}

void accumulate_means(RunManifest& m)
{
    struct Field {
        const char* name;
        std::optional<double> (*get)(const MetricsReport&);
    };
    static const Field fields[] = {
        {"irmle_orig", [](const MetricsReport& r) -> std::optional<double> { return r.irmle_orig; }},
        {"irmle_enh", [](const MetricsReport& r) -> std::optional<double> { return r.irmle_enh; }},
        {"irmle_ratio", [](const MetricsReport& r) { return r.irmle_ratio; }},
        {"cef", [](const MetricsReport& r) { return r.cef; }},
        {"loe", [](const MetricsReport& r) -> std::optional<double> { return r.loe; }},
        {"psnr", [](const MetricsReport& r) -> std::optional<double> { return r.psnr; }},
        {"ssim", [](const MetricsReport& r) -> std::optional<double> { return r.ssim; }},
        {"wall_time_ms", [](const MetricsReport& r) -> std::optional<double> { return r.wall_time_ms; }},
    };
    for (const Field& f : fields) {
        double sum = 0.0;
        std::size_t n = 0;
        for (const ImageOutcome& img : m.images) {
            if (!img.ok) {
                continue;
            }
            const auto v = f.get(img.report);
            if (v && std::isfinite(*v)) {
                sum += *v;
                ++n;
            }
        }
        m.means[f.name] = n ? std::optional<double>(sum / static_cast<double>(n)) : std::nullopt;
    }
}

} // namespace

std::vector<fs::path> collect_inputs(const fs::path& in)
{
    std::vector<fs::path> out;
    if (fs::is_directory(in)) {
        for (const auto& entry : fs::directory_iterator(in)) {
            if (entry.is_regular_file() && is_image_name(entry.path())) {
                out.push_back(entry.path());
            }
        }
    } else {
        out.push_back(in);
    }
    std::sort(out.begin(), out.end(), by_file_name);
    return out;
}

RunManifest run_batch(const std::vector<fs::path>& inputs, const BatchOptions& opts)
{
    opts.config.validate();
    fs::create_directories(opts.out_dir);

    std::vector<fs::path> sorted = inputs;
    std::sort(sorted.begin(), sorted.end(), by_file_name);

    RunManifest manifest;
    manifest.out_dir = opts.out_dir;
    manifest.config = opts.config;
    manifest.images.resize(sorted.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < sorted.size(); k = next++) {
            manifest.images[k] = process_one(sorted[k], opts);
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(sorted.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
    }

    manifest.ok_count = static_cast<std::size_t>(
        std::count_if(manifest.images.begin(), manifest.images.end(), [](const ImageOutcome& o) { return o.ok; }));
    accumulate_means(manifest);
    return manifest;
}

json to_json(const RunManifest& m)
{
    json images = json::array();
    json inputs = json::array();
    for (const ImageOutcome& img : m.images) {
        inputs.push_back(img.input.string());
        json entry{{"file", img.input.filename().string()}, {"input", img.input.string()}};
        if (img.ok) {
            entry["status"] = "ok";
            entry["output"] = img.output.string();
            entry["metrics"] = to_json(img.report);
        } else {
            entry["status"] = "error";
            entry["message"] = img.message;
        }
        images.push_back(std::move(entry));
    }
    json means = json::object();
    for (const auto& [name, value] : m.means) {
        means[name] = value ? json(std::isinf(*value) ? json("inf") : json(round_sig6(*value))) : json(nullptr);
    }
    return json{
        {"inputs", inputs},
        {"out_dir", m.out_dir.string()},
        {"config", to_json(m.config)},
        {"images", images},
        {"ok_count", m.ok_count},
        {"error_count", m.images.size() - m.ok_count},
        {"means", means},
    };
}

std::string manifest_csv(const RunManifest& m)
{
    std::string out = std::string(kCsvHeader) + "\n";
    for (const ImageOutcome& img : m.images) {
        if (img.ok) {
            out += csv_row(img.input.filename().string(), img.report) + "\n";
        }
    }
    return out;
}

} // namespace wce
