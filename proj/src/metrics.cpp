// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/metrics.hpp>

#include <wce/afgt.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace wce {

namespace {

constexpr int kWindowArea = kEntropyWindow * kEntropyWindow;

std::size_t clamp_index(long v, std::size_t n)
{
    return static_cast<std::size_t>(std::clamp(v, 0L, static_cast<long>(n) - 1));
}

// Fenwick tree over ranks for prefix counts.
class CountTree {
public:
    explicit CountTree(std::size_t n) : tree_(n + 1, 0) {}

    void add(std::size_t rank)
    {
        for (std::size_t i = rank + 1; i < tree_.size(); i += i & (~i + 1)) {
            ++tree_[i];
        }
    }

    // Number of inserted ranks <= rank.
    std::size_t count_upto(std::size_t rank) const
    {
        std::size_t total = 0;
        for (std::size_t i = rank + 1; i > 0; i -= i & (~i + 1)) {
            total += tree_[i];
        }
        return total;
    }

private:
    std::vector<std::size_t> tree_;
};

// Dense rank of each value; equal values share a rank.
std::vector<std::size_t> dense_ranks(std::span<const double> values)
{
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> ranks(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        ranks[k] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), values[k]) - sorted.begin());
    }
    return ranks;
}

Plane luminance_8bit(const RgbImage& img)
{
    Plane out = mean_intensity(img);
    for (double& v : out) {
        v *= 255.0;
    }
    return out;
}

// Separable valid-region Gaussian filter.
Plane filter_valid(const Plane& in, const std::array<double, kSsimWindow>& taps)
{
    const std::size_t w = in.width();
    const std::size_t h = in.height();
    const std::size_t ow = w - kSsimWindow + 1;
    const std::size_t oh = h - kSsimWindow + 1;
    Plane rows(ow, h);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (int t = 0; t < kSsimWindow; ++t) {
                acc += taps[static_cast<std::size_t>(t)] * in(x + static_cast<std::size_t>(t), y);
            }
            rows(x, y) = acc;
        }
    }
    Plane out(ow, oh);
    for (std::size_t y = 0; y < oh; ++y) {
        for (std::size_t x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (int t = 0; t < kSsimWindow; ++t) {
                acc += taps[static_cast<std::size_t>(t)] * rows(x, y + static_cast<std::size_t>(t));
            }
            out(x, y) = acc;
        }
    }
    return out;
}

} // namespace

Plane local_entropy(const Plane& intensity)
{
    if (intensity.empty()) {
        throw InvalidArgument("local_entropy: empty plane");
    }
    const std::size_t w = intensity.width();
    const std::size_t h = intensity.height();
    constexpr long r = kEntropyWindow / 2;

    // Contribution of one bin holding c of the 81 samples, in fixed point so
    // the running sum is exact and free of drift.
    constexpr double kScale = 0x1.0p52;
    std::array<std::int64_t, kWindowArea + 1> term{};
    for (int c = 1; c <= kWindowArea; ++c) {
        const double p = static_cast<double>(c) / kWindowArea;
        term[static_cast<std::size_t>(c)] = std::llround(-p * std::log2(p) * kScale);
    }

    std::vector<std::uint8_t> levels(intensity.size());
    std::transform(intensity.begin(), intensity.end(), levels.begin(),
                   [](double v) { return static_cast<std::uint8_t>(level_of(v)); });
    auto level_at = [&](long x, long y) { return levels[clamp_index(y, h) * w + clamp_index(x, w)]; };

    Plane out(w, h);
    std::array<int, kHistogramBins> counts{};
    std::int64_t sum = 0;
    auto bump = [&](std::uint8_t level, int delta) {
        int& c = counts[level];
        sum -= term[static_cast<std::size_t>(c)];
        c += delta;
        sum += term[static_cast<std::size_t>(c)];
    };

    for (long y = 0; y < static_cast<long>(h); ++y) {
        counts.fill(0);
        sum = 0;
        for (long dy = -r; dy <= r; ++dy) {
            for (long dx = -r; dx <= r; ++dx) {
                bump(level_at(dx, y + dy), 1);
            }
        }
        for (long x = 0; x < static_cast<long>(w); ++x) {
            if (x > 0) {
                for (long dy = -r; dy <= r; ++dy) {
                    bump(level_at(x - r - 1, y + dy), -1);
                    bump(level_at(x + r, y + dy), 1);
                }
            }
            out(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) = static_cast<double>(sum) / kScale;
        }
    }
    return out;
}

double middle_third_mass(const Plane& intensity)
{
    const LevelTable pdf = compute_pdf(intensity.values());
    return std::accumulate(pdf.begin() + 85, pdf.begin() + 171, 0.0);
}

double irmle(const Plane& intensity)
{
    const Plane le = local_entropy(intensity);
    const double mean_le = std::accumulate(le.begin(), le.end(), 0.0) / static_cast<double>(le.size());
    return mean_le * middle_third_mass(intensity);
}

double colorfulness(const RgbImage& img)
{
    const std::size_t n = img.pixel_count();
    if (n == 0) {
        throw InvalidArgument("colorfulness: empty image");
    }
    double sum_rg = 0.0;
    double sum_yb = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sum_rg += img.r[k] - img.g[k];
        sum_yb += 0.5 * (img.r[k] + img.g[k]) - img.b[k];
    }
    const double mean_rg = sum_rg / static_cast<double>(n);
    const double mean_yb = sum_yb / static_cast<double>(n);
    double var_rg = 0.0;
    double var_yb = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double drg = img.r[k] - img.g[k] - mean_rg;
        const double dyb = 0.5 * (img.r[k] + img.g[k]) - img.b[k] - mean_yb;
        var_rg += drg * drg;
        var_yb += dyb * dyb;
    }
    var_rg /= static_cast<double>(n);
    var_yb /= static_cast<double>(n);
    return std::sqrt(var_rg + var_yb) + 0.3 * std::sqrt(mean_rg * mean_rg + mean_yb * mean_yb);
}

double cef(const RgbImage& orig, const RgbImage& enh)
{
    require_same_shape(orig, enh, "cef");
    const double base = colorfulness(orig);
    if (!(base > 0.0)) {
        throw UndefinedMetric("cef: original image has zero colorfulness");
    }
    return colorfulness(enh) / base;
}

Plane lightness(const RgbImage& img)
{
    Plane out(img.width(), img.height());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = std::max({img.r[k], img.g[k], img.b[k]});
    }
    return out;
}

Plane block_average(const Plane& plane, std::size_t grid)
{
    if (plane.empty() || grid == 0) {
        throw InvalidArgument("block_average: empty plane or zero grid");
    }
    const std::size_t w = plane.width();
    const std::size_t h = plane.height();
    const std::size_t ow = std::min(w, grid);
    const std::size_t oh = std::min(h, grid);
    if (ow == w && oh == h) {
        return plane;
    }
    Plane out(ow, oh);
    for (std::size_t by = 0; by < oh; ++by) {
        const std::size_t y0 = by * h / oh;
        const std::size_t y1 = (by + 1) * h / oh;
        for (std::size_t bx = 0; bx < ow; ++bx) {
            const std::size_t x0 = bx * w / ow;
            const std::size_t x1 = (bx + 1) * w / ow;
            double acc = 0.0;
            for (std::size_t y = y0; y < y1; ++y) {
                for (std::size_t x = x0; x < x1; ++x) {
                    acc += plane(x, y);
                }
            }
            out(bx, by) = acc / static_cast<double>((y1 - y0) * (x1 - x0));
        }
    }
    return out;
}

std::size_t order_inversions(const Plane& ref, const Plane& test)
{
    require_same_shape(ref, test, "order_inversions");
    const std::size_t m = ref.size();
    const std::vector<std::size_t> ref_rank = dense_ranks(ref.values());
    const std::vector<std::size_t> test_rank = dense_ranks(test.values());

    // For each x: a = #{y : ref(y) <= ref(x)}, b = #{y : test(y) <= test(x)},
    // c = #{y : both}. Pairs disagreeing on ">=" number a + b - 2c.
    std::vector<std::size_t> ref_upto(m, 0);
    std::vector<std::size_t> test_upto(m, 0);
    {
        std::vector<std::size_t> hist_ref(m, 0);
        std::vector<std::size_t> hist_test(m, 0);
        for (std::size_t k = 0; k < m; ++k) {
            ++hist_ref[ref_rank[k]];
            ++hist_test[test_rank[k]];
        }
        std::partial_sum(hist_ref.begin(), hist_ref.end(), hist_ref.begin());
        std::partial_sum(hist_test.begin(), hist_test.end(), hist_test.begin());
        for (std::size_t k = 0; k < m; ++k) {
            ref_upto[k] = hist_ref[ref_rank[k]];
            test_upto[k] = hist_test[test_rank[k]];
        }
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ref_rank[a] < ref_rank[b]; });

    CountTree tree(m);
    std::size_t total = 0;
    for (std::size_t start = 0; start < m;) {
        std::size_t stop = start;
        while (stop < m && ref_rank[order[stop]] == ref_rank[order[start]]) {
            tree.add(test_rank[order[stop]]);
            ++stop;
        }
        for (std::size_t k = start; k < stop; ++k) {
            const std::size_t x = order[k];
            const std::size_t both = tree.count_upto(test_rank[x]);
            total += ref_upto[x] + test_upto[x] - 2 * both;
        }
        start = stop;
    }
    return total;
}

double loe(const RgbImage& orig, const RgbImage& enh, const EnhanceConfig& cfg)
{
    require_same_shape(orig, enh, "loe");
    const auto grid = static_cast<std::size_t>(cfg.loe_grid);
    const Plane ref = block_average(lightness(orig), grid);
    const Plane test = block_average(lightness(enh), grid);
    const auto m = static_cast<double>(ref.size());
    return 100.0 * static_cast<double>(order_inversions(ref, test)) / (m * m);
}

double psnr(const RgbImage& orig, const RgbImage& enh, PsnrPlane plane)
{
    require_same_shape(orig, enh, "psnr");
    if (orig.pixel_count() == 0) {
        throw InvalidArgument("psnr: empty image");
    }
    double sse = 0.0;
    std::size_t count = 0;
    if (plane == PsnrPlane::rgb) {
        for (auto [a, b] : {std::pair{&orig.r, &enh.r}, std::pair{&orig.g, &enh.g}, std::pair{&orig.b, &enh.b}}) {
            for (std::size_t k = 0; k < a->size(); ++k) {
                const double d = 255.0 * ((*a)[k] - (*b)[k]);
                sse += d * d;
            }
            count += a->size();
        }
    } else {
        const Plane a = mean_intensity(orig);
        const Plane b = mean_intensity(enh);
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double d = 255.0 * (a[k] - b[k]);
            sse += d * d;
        }
        count = a.size();
    }
    const double mse = sse / static_cast<double>(count);
    if (mse == 0.0) {
        return kPsnrIdentical;
    }
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

Plane ssim_map(const Plane& a, const Plane& b)
{
    require_same_shape(a, b, "ssim");
    if (a.width() < kSsimWindow || a.height() < kSsimWindow) {
        throw InvalidArgument("ssim: image smaller than the 11x11 window");
    }
    std::array<double, kSsimWindow> taps{};
    double sum = 0.0;
    for (int t = 0; t < kSsimWindow; ++t) {
        const double d = t - kSsimWindow / 2;
        taps[static_cast<std::size_t>(t)] = std::exp(-d * d / (2.0 * kSsimSigma * kSsimSigma));
        sum += taps[static_cast<std::size_t>(t)];
    }
    for (double& t : taps) {
        t /= sum;
    }

    Plane aa(a.width(), a.height());
    Plane bb(a.width(), a.height());
    Plane ab(a.width(), a.height());
    for (std::size_t k = 0; k < a.size(); ++k) {
        aa[k] = a[k] * a[k];
        bb[k] = b[k] * b[k];
        ab[k] = a[k] * b[k];
    }
    const Plane mu_a = filter_valid(a, taps);
    const Plane mu_b = filter_valid(b, taps);
    const Plane e_aa = filter_valid(aa, taps);
    const Plane e_bb = filter_valid(bb, taps);
    const Plane e_ab = filter_valid(ab, taps);

    constexpr double c1 = (0.01 * 255.0) * (0.01 * 255.0);
    constexpr double c2 = (0.03 * 255.0) * (0.03 * 255.0);
    Plane out(mu_a.width(), mu_a.height());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double ma = mu_a[k];
        const double mb = mu_b[k];
        const double var_a = e_aa[k] - ma * ma;
        const double var_b = e_bb[k] - mb * mb;
        const double cov = e_ab[k] - ma * mb;
        out[k] = ((2.0 * ma * mb + c1) * (2.0 * cov + c2)) / ((ma * ma + mb * mb + c1) * (var_a + var_b + c2));
    }
    return out;
}

double ssim(const RgbImage& orig, const RgbImage& enh)
{
    require_same_shape(orig, enh, "ssim");
    const Plane map = ssim_map(luminance_8bit(orig), luminance_8bit(enh));
    return std::accumulate(map.begin(), map.end(), 0.0) / static_cast<double>(map.size());
}

} // namespace wce
