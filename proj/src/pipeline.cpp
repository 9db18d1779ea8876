// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/pipeline.hpp>

#include <wce/image_io.hpp>

#include <chrono>

namespace wce {

EnhanceResult enhance(const RgbImage& img, const EnhanceConfig& cfg, bool keep_debug)
{
    validate(img);
    cfg.validate();
    if (img.pixel_count() == 0) {
        throw InvalidArgument("enhance: empty image");
    }

    HsiImage hsi = rgb_to_hsi(img);
    NormalizedIntensity norm = normalize_intensity(hsi.i);
    if (norm.degenerate()) {
        EnhanceResult out{img, std::nullopt};
        if (keep_debug) {
            out.debug = DebugBundle{norm.plane, norm.plane, norm.plane, hsi.s, hsi.s,
                                    analyze_histogram(norm, cfg.tau_imax_scale), 0.0};
        }
        return out;
    }

    AfgtResult afgt = apply_afgt(norm, cfg.tau_imax_scale);
    SharpenedIntensity r_s = unsharp_enhance(afgt.l_plane, norm.plane, cfg);
    Plane s_c = restore_saturation(hsi.s, r_s, norm, cfg);
    RestoredSaturation s_cm = map_saturation(s_c, cfg);

    EnhanceResult out;
    out.image = hsi_to_rgb(HsiImage{hsi.h, s_cm.plane, r_s.plane});
    if (keep_debug) {
        out.debug = DebugBundle{std::move(norm.plane), std::move(afgt.l_plane), std::move(r_s.plane),
                                std::move(s_c), std::move(s_cm.plane), afgt.histogram, norm.i_max};
    }
    return out;
}

MetricsReport evaluate(const RgbImage& orig, const RgbImage& enh, const EnhanceConfig& cfg)
{
    require_same_shape(orig, enh, "evaluate");
    MetricsReport report;
    report.irmle_orig = irmle(mean_intensity(orig));
    report.irmle_enh = irmle(mean_intensity(enh));
    if (report.irmle_orig > 0.0) {
        report.irmle_ratio = report.irmle_enh / report.irmle_orig;
    }
    try {
        report.cef = cef(orig, enh);
    } catch (const UndefinedMetric&) {
        report.cef.reset();
    }
    report.loe = loe(orig, enh, cfg);
    report.psnr = psnr(orig, enh, cfg.psnr_plane);
    report.ssim = ssim(orig, enh);
    return report;
}

TimedEnhancement enhance_and_evaluate(const RgbImage& img, const EnhanceConfig& cfg, bool keep_debug)
{
    const auto start = std::chrono::steady_clock::now();
    EnhanceResult result = enhance(img, cfg, keep_debug);
    const auto stop = std::chrono::steady_clock::now();

    MetricsReport report = evaluate(img, quantize_8bit(result.image), cfg);
    report.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return {std::move(result), report};
}

} // namespace wce
