// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.
//
// usage: wce_acceptance <path-to-wce-enhance> <scratch-dir>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <wce/afgt.hpp>
#include <wce/color_space.hpp>
#include <wce/image_io.hpp>
#include <wce/metrics.hpp>
#include <wce/pipeline.hpp>
#include <wce/unsharp.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

using namespace wce;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int g_failures = 0;

void report(int id, const char* title, const Outcome& o)
{
    std::printf("criterion %2d: %s  %s (%s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) {
        ++g_failures;
    }
}

std::string fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));

std::string fmt(const char* format, ...)
{
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run(const std::string& cmd)
{
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<RgbImage> bundled_fixtures()
{
    std::vector<RgbImage> out;
    for (std::uint64_t seed = 1; seed <= testing::kFixtureCount; ++seed) {
        out.push_back(load_image(fs::path(WCE_FIXTURE_DIR) / testing::fixture_name(seed)));
    }
    return out;
}

bool histogram_ok(const IntensityHistogram& h)
{
    const double sum = std::accumulate(h.pdf.begin(), h.pdf.end(), 0.0);
    bool ok = std::abs(sum - 1.0) <= 1e-9 && std::abs(h.cdf_s[255] - 1.0) <= 1e-9;
    for (std::size_t k = 0; k < 256; ++k) {
        ok = ok && h.beta[k] >= 0.5 && h.beta[k] <= 1.0;
        if (k > 0) {
            ok = ok && h.cdf_s[k] >= h.cdf_s[k - 1] && h.beta[k] <= h.beta[k - 1];
        }
    }
    return ok;
}

Outcome afgt_oracle()
{
    const auto start = Clock::now();
    testing::Rng rng(1001);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const Plane p = testing::random_plane(rng, 16, 16);
        const NormalizedIntensity in = normalize_intensity(p);
        const Plane got = apply_afgt(in).l_plane;
        const oracle::AfgtTrace ref = oracle::afgt(in.plane, in.i_max * 255.0);
        for (std::size_t k = 0; k < got.size(); ++k) {
            worst = std::max(worst, std::abs(got[k] - ref.l[k]));
        }
    }
    const double elapsed = ms_since(start);
    return {worst <= 1e-9 && elapsed < 5000.0, fmt("max |diff| %.3g, %.0f ms", worst, elapsed)};
}

Outcome afgt_fixed_points()
{
    testing::Rng rng(1002);
    std::size_t out_of_range = 0, zero_moved = 0, one_moved = 0, zeros = 0, ones = 0;
    for (int n = 0; n < 1000; ++n) {
        const std::size_t w = 4 + rng.index(29), h = 4 + rng.index(29);
        Plane p = testing::random_plane(rng, w, h, 0.0, rng.uniform(0.05, 1.0));
        for (int k = 0; k < 3; ++k) {
            p[rng.index(p.size())] = 0.0;
        }
        NormalizedIntensity in = normalize_intensity(p);
        const Plane l = apply_afgt(in).l_plane;
        for (std::size_t k = 0; k < l.size(); ++k) {
            if (!(l[k] >= 0.0 && l[k] <= 1.0)) {
                ++out_of_range;
            }
            if (in.plane[k] == 0.0) {
                ++zeros;
                zero_moved += l[k] != 0.0;
            }
            if (in.plane[k] == 1.0) {
                ++ones;
                one_moved += l[k] != 1.0;
            }
        }
    }
    return {out_of_range == 0 && zero_moved == 0 && one_moved == 0 && zeros > 0 && ones > 0,
            fmt("%zu out of range; %zu/%zu zeros and %zu/%zu ones moved", out_of_range, zero_moved, zeros,
                one_moved, ones)};
}

Outcome histogram_machinery(const std::vector<RgbImage>& fixtures)
{
    std::size_t checked = 0, bad = 0;
    for (const RgbImage& img : fixtures) {
        ++checked;
        bad += !histogram_ok(analyze_histogram(normalize_intensity(mean_intensity(img))));
    }
    testing::Rng rng(1003);
    for (int n = 0; n < 500; ++n) {
        const RgbImage img = testing::random_image(rng, 20, 20, 0.0, rng.uniform(0.02, 1.0));
        ++checked;
        bad += !histogram_ok(analyze_histogram(normalize_intensity(mean_intensity(img))));
    }
    return {bad == 0, fmt("%zu of %zu histograms violate an invariant", bad, checked)};
}

Outcome round_trips(const fs::path& work)
{
    double worst = 0.0;
    for (int a = 0; a <= 16; ++a) {
        for (int b = 0; b <= 16; ++b) {
            for (int c = 0; c <= 16; ++c) {
                const RgbPixel in{a / 16.0, b / 16.0, c / 16.0};
                const RgbPixel out = to_rgb(to_hsi(in));
                worst = std::max({worst, std::abs(in.r - out.r), std::abs(in.g - out.g), std::abs(in.b - out.b)});
            }
        }
    }
    RgbImage levels(256, 1);
    for (std::size_t v = 0; v < 256; ++v) {
        levels.r[v] = decode_sample(static_cast<std::uint8_t>(v));
        levels.g[v] = decode_sample(static_cast<std::uint8_t>(255 - v));
        levels.b[v] = decode_sample(static_cast<std::uint8_t>((v * 97) % 256));
    }
    save_image(levels, work / "levels.png");
    const bool png_exact = load_image(work / "levels.png") == levels;
    return {worst <= 1e-6 && png_exact,
            fmt("HSI max error %.3g on 17^3 grid; PNG 256 levels %s", worst, png_exact ? "exact" : "differ")};
}

Outcome unsharp_contract()
{
    testing::Rng rng(1005);
    EnhanceConfig cfg;
    bool constant_ok = true;
    for (int n = 0; n < 50; ++n) {
        const std::size_t w = 3 + rng.index(40), h = 3 + rng.index(40);
        const Plane l = testing::random_plane(rng, w, h);
        constant_ok = constant_ok && unsharp_enhance(l, Plane(w, h, rng.uniform()), cfg).plane == l;
    }
    for (double v : {0.07, 0.5, 0.93}) {
        const RgbImage img(30, 30, v);
        const EnhanceResult r = enhance(img, cfg, true);
        constant_ok = constant_ok && r.debug->r_s == r.debug->l;
    }
    EnhanceConfig off = cfg;
    off.um_gain = 0.0;
    bool zero_gain_ok = true;
    for (int n = 0; n < 50; ++n) {
        const Plane l = testing::random_plane(rng, 25, 17);
        zero_gain_ok = zero_gain_ok && unsharp_enhance(l, testing::random_plane(rng, 25, 17), off).plane == l;
    }
    double worst_sum = 0.0;
    for (int size = 3; size <= 31; size += 2) {
        for (double sigma : {0.25, 0.5, 1.0, 1.5, 3.0, 10.0, 100.0}) {
            const GaussianKernel k = gaussian_kernel(size, sigma);
            const auto& w = k.weights();
            worst_sum = std::max(worst_sum, std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0));
        }
    }
    return {constant_ok && zero_gain_ok && worst_sum <= 1e-12,
            fmt("constant residual %s, zero gain %s, max |sum w - 1| %.3g", constant_ok ? "exact" : "nonzero",
                zero_gain_ok ? "exact" : "differs", worst_sum)};
}

Outcome metric_identities()
{
    testing::Rng rng(1006);
    std::size_t bad = 0;
    double worst_ssim = 0.0;
    for (int n = 0; n < 50; ++n) {
        const RgbImage a = testing::random_image(rng, 16 + rng.index(48), 16 + rng.index(48));
        const double s = ssim(a, a);
        worst_ssim = std::max(worst_ssim, std::abs(s - 1.0));
        bad += cef(a, a) != 1.0;
        bad += loe(a, a) != 0.0;
        bad += std::abs(s - 1.0) > 1e-9;
        bad += psnr(a, a) != kPsnrIdentical;
        bad += irmle(Plane(a.width(), a.height(), rng.uniform())) != 0.0;
    }
    return {bad == 0, fmt("%zu identity violations; max |ssim - 1| %.3g", bad, worst_ssim)};
}

Outcome loe_oracle()
{
    testing::Rng rng(1007);
    std::size_t mismatched = 0;
    for (int n = 0; n < 20; ++n) {
        const RgbImage a = testing::random_image(rng, 50, 50);
        const RgbImage b = testing::random_image(rng, 50, 50);
        const Plane la = lightness(a), lb = lightness(b);
        mismatched += order_inversions(la, lb) != oracle::pairwise_inversions(la, lb);
        mismatched += loe(a, b) != oracle::loe(a, b, 50);
    }
    double worst_monotone = 0.0;
    for (int n = 0; n < 10; ++n) {
        const RgbImage a = testing::random_image(rng, 50, 50, 0.05, 0.95);
        for (double gamma : {0.5, 2.0}) {
            RgbImage t = a;
            for (Plane* p : {&t.r, &t.g, &t.b}) {
                for (double& v : *p) {
                    v = std::pow(v, gamma);
                }
            }
            worst_monotone = std::max(worst_monotone, loe(a, t));
        }
    }
    return {mismatched == 0 && worst_monotone == 0.0,
            fmt("%zu mismatches against the pairwise count; max LOE under gamma 0.5/2.0 = %g", mismatched,
                worst_monotone)};
}

struct FixtureScores {
    MetricsReport report;
    double loe_minmax = 0.0;
};

std::vector<FixtureScores> score_fixtures(const std::vector<RgbImage>& fixtures)
{
    std::vector<FixtureScores> out;
    EnhanceConfig minmax;
    minmax.saturation_map = SaturationMap::minmax;
    for (const RgbImage& img : fixtures) {
        FixtureScores s;
        s.report = enhance_and_evaluate(img).report;
        s.loe_minmax = loe(img, quantize_8bit(enhance(img, minmax).image));
        out.push_back(s);
    }
    return out;
}

Outcome directional(const std::vector<FixtureScores>& scores)
{
    std::string detail;
    bool pass = scores.size() >= 5;
    for (std::size_t k = 0; k < scores.size(); ++k) {
        const MetricsReport& r = scores[k].report;
        const bool irmle_up = r.irmle_ratio && *r.irmle_ratio > 1.0;
        const bool cef_up = r.cef && *r.cef > 1.0;
        const bool loe_below = r.loe < scores[k].loe_minmax;
        pass = pass && irmle_up && cef_up && loe_below;
        detail += fmt("%s#%zu irmle_ratio %.3g%s cef %.3g%s loe %.3g vs minmax %.3g%s", k ? "; " : "", k + 1,
                      r.irmle_ratio.value_or(NAN), irmle_up ? "" : "!", r.cef.value_or(NAN), cef_up ? "" : "!", r.loe,
                      scores[k].loe_minmax, loe_below ? "" : "!");
    }
    return {pass, detail};
}

Outcome fidelity(const std::vector<FixtureScores>& scores)
{
    std::string detail;
    bool pass = scores.size() >= 5;
    for (std::size_t k = 0; k < scores.size(); ++k) {
        const MetricsReport& r = scores[k].report;
        const bool ok = r.ssim >= 0.8 && r.psnr >= 20.0;
        pass = pass && ok;
        detail += fmt("%s#%zu ssim %.3f psnr %.2f dB%s", k ? "; " : "", k + 1, r.ssim, r.psnr, ok ? "" : "!");
    }
    return {pass, detail};
}

Outcome realtime(const std::string& cli, const fs::path& work)
{
    const RgbImage img = testing::synthetic_wce_fixture(1);
    std::vector<double> times;
    for (int n = 0; n < 7; ++n) {
        const auto start = Clock::now();
        const EnhanceResult r = enhance(img);
        times.push_back(ms_since(start));
        (void)r;
    }
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];

    const fs::path in = work / "batch50";
    const fs::path out = work / "batch50_out";
    fs::remove_all(in);
    fs::remove_all(out);
    fs::create_directories(in);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        save_image(testing::synthetic_wce_fixture(seed), in / fmt("f%02u.png", static_cast<unsigned>(seed)));
    }
    const auto start = Clock::now();
    const int code = run("\"" + cli + "\" enhance --in \"" + in.string() + "\" --out \"" + out.string() + "\" --jobs 4");
    const double batch_ms = ms_since(start);
    return {median < 100.0 && code == 0 && batch_ms < 5000.0,
            fmt("enhance 360x360 median %.1f ms (max %.1f); CLI 50 images --jobs 4: %.0f ms, exit %d", median,
                times.back(), batch_ms, code)};
}

Outcome determinism(const std::string& cli, const fs::path& work, const std::vector<RgbImage>& fixtures)
{
    bool same_memory = true;
    for (const RgbImage& img : fixtures) {
        same_memory = same_memory && enhance(img).image == enhance(img).image;
    }

    const fs::path in = fs::path(WCE_FIXTURE_DIR);
    const fs::path out = work / "repeat_out";
    const fs::path keep = work / "repeat_keep";
    fs::remove_all(out);
    fs::remove_all(keep);
    fs::create_directories(keep);
    const std::string base = "\"" + cli + "\" enhance --in \"" + in.string() + "\" --out \"" + out.string() +
                             "\" --dump-intermediates --omit-timing";
    int codes = run(base + " --jobs 1");
    if (codes != 0 || !fs::is_directory(out)) {
        return {false, fmt("CLI run failed with exit %d", codes)};
    }
    for (const auto& e : fs::directory_iterator(out)) {
        fs::copy_file(e.path(), keep / e.path().filename());
    }
    std::size_t files = 0, differing = 0;
    for (const char* jobs : {" --jobs 4", " --jobs 3", " --jobs 1"}) {
        codes += run(base + jobs);
        for (const auto& e : fs::directory_iterator(keep)) {
            ++files;
            differing += slurp(e.path()) != slurp(out / e.path().filename());
        }
    }
    return {same_memory && codes == 0 && differing == 0 && files > 0,
            fmt("in-memory repeat %s; %zu file comparisons over 3 reruns, %zu differ", same_memory ? "identical" : "differs",
                files, differing)};
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 3) {
        std::fprintf(stderr, "usage: %s <wce-enhance> <scratch-dir>\n", argv[0]);
        return 2;
    }
    const std::string cli = fs::absolute(argv[1]).string();
    const fs::path work = fs::absolute(argv[2]);
    fs::create_directories(work);

    const std::vector<RgbImage> fixtures = bundled_fixtures();

    report(1, "AFGT matches the per-pixel oracle", afgt_oracle());
    report(2, "AFGT range and fixed points", afgt_fixed_points());
    report(3, "histogram machinery", histogram_machinery(fixtures));
    report(4, "RGB/HSI and PNG round trips", round_trips(work));
    report(5, "unsharp contract", unsharp_contract());
    report(6, "metric identities", metric_identities());
    report(7, "LOE oracle and monotone invariance", loe_oracle());
    const std::vector<FixtureScores> scores = score_fixtures(fixtures);
    report(8, "directional enhancement on fixtures", directional(scores));
    report(9, "fidelity bound on fixtures", fidelity(scores));
    report(10, "real-time suitability", realtime(cli, work));
    report(11, "determinism", determinism(cli, work, fixtures));

    std::printf("%d of 11 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
