// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/image_io.hpp>
#include <wce/pipeline.hpp>
#include <wce/report.hpp>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <algorithm>
#include <cstdint>

namespace py = pybind11;

namespace {

using F64Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

// H x W x 3 array (float in [0,1] or uint8) -> RgbImage.
wce::RgbImage to_image(const py::array& input)
{
    const bool bytes = py::isinstance<py::array_t<std::uint8_t>>(input);
    F64Array arr = F64Array::ensure(input);
    if (!arr || arr.ndim() != 3 || arr.shape(2) != 3) {
        throw py::value_error("expected an H x W x 3 array");
    }
    const auto h = static_cast<std::size_t>(arr.shape(0));
    const auto w = static_cast<std::size_t>(arr.shape(1));
    wce::RgbImage img(w, h);
    const double scale = bytes ? 1.0 / 255.0 : 1.0;
    auto view = arr.unchecked<3>();
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            img.r(x, y) = view(y, x, 0) * scale;
            img.g(x, y) = view(y, x, 1) * scale;
            img.b(x, y) = view(y, x, 2) * scale;
        }
    }
    wce::validate(img);
    return img;
}

py::array_t<double> from_image(const wce::RgbImage& img)
{
    py::array_t<double> out({img.height(), img.width(), std::size_t{3}});
    auto view = out.mutable_unchecked<3>();
    for (std::size_t y = 0; y < img.height(); ++y) {
        for (std::size_t x = 0; x < img.width(); ++x) {
            view(y, x, 0) = img.r(x, y);
            view(y, x, 1) = img.g(x, y);
            view(y, x, 2) = img.b(x, y);
        }
    }
    return out;
}

wce::Plane to_plane(const py::array& input)
{
    F64Array arr = F64Array::ensure(input);
    if (!arr || arr.ndim() != 2) {
        throw py::value_error("expected a 2-D array");
    }
    const auto h = static_cast<std::size_t>(arr.shape(0));
    const auto w = static_cast<std::size_t>(arr.shape(1));
    return wce::Plane(w, h, std::vector<double>(arr.data(), arr.data() + w * h));
}

py::array_t<double> from_plane(const wce::Plane& plane)
{
    py::array_t<double> out({plane.height(), plane.width()});
    std::copy(plane.begin(), plane.end(), out.mutable_data());
    return out;
}

py::array_t<double> from_table(const wce::LevelTable& table)
{
    py::array_t<double> out(table.size());
    std::copy(table.begin(), table.end(), out.mutable_data());
    return out;
}

wce::EnhanceConfig config_or_default(const std::optional<wce::EnhanceConfig>& cfg)
{
    wce::EnhanceConfig out = cfg.value_or(wce::EnhanceConfig{});
    out.validate();
    return out;
}

py::dict histogram_dict(const wce::IntensityHistogram& hist)
{
    py::dict d;
    d["pdf"] = from_table(hist.pdf);
    d["pdf_s"] = from_table(hist.pdf_s);
    d["cdf_s"] = from_table(hist.cdf_s);
    d["beta"] = from_table(hist.beta);
    d["pdf_max"] = hist.pdf_max;
    d["pdf_min"] = hist.pdf_min;
    d["tau"] = hist.tau;
    d["r_bar"] = hist.r_bar;
    return d;
}

py::dict report_dict(const wce::MetricsReport& r)
{
    py::dict d;
    d["irmle_orig"] = r.irmle_orig;
    d["irmle_enh"] = r.irmle_enh;
    d["irmle_ratio"] = r.irmle_ratio;
    d["cef"] = r.cef;
    d["loe"] = r.loe;
    d["psnr"] = r.psnr;
    d["ssim"] = r.ssim;
    d["wall_time_ms"] = r.wall_time_ms;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Capsule endoscopy image enhancement (fraction gamma transform, unsharp mask, "
              "saturation restoration) and quality metrics";

    py::register_exception<wce::Error>(m, "WceError", PyExc_RuntimeError);
    py::register_exception<wce::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<wce::ImageIoError>(m, "ImageIoError", PyExc_IOError);
    py::register_exception<wce::UndefinedMetric>(m, "UndefinedMetric", PyExc_ArithmeticError);

    py::enum_<wce::SaturationMap>(m, "SaturationMap")
        .value("robust", wce::SaturationMap::robust)
        .value("minmax", wce::SaturationMap::minmax)
        .value("affine_after_clip", wce::SaturationMap::affine_after_clip);
    py::enum_<wce::TauImaxScale>(m, "TauImaxScale")
        .value("native255", wce::TauImaxScale::native255)
        .value("normalized", wce::TauImaxScale::normalized);
    py::enum_<wce::PsnrPlane>(m, "PsnrPlane")
        .value("rgb", wce::PsnrPlane::rgb)
        .value("intensity", wce::PsnrPlane::intensity);

    py::class_<wce::EnhanceConfig>(m, "EnhanceConfig")
        .def(py::init<>())
        .def_readwrite("um_gain", &wce::EnhanceConfig::um_gain)
        .def_readwrite("gaussian_size", &wce::EnhanceConfig::gaussian_size)
        .def_readwrite("gaussian_sigma", &wce::EnhanceConfig::gaussian_sigma)
        .def_readwrite("clip_fraction", &wce::EnhanceConfig::clip_fraction)
        .def_readwrite("saturation_map", &wce::EnhanceConfig::saturation_map)
        .def_readwrite("division_epsilon", &wce::EnhanceConfig::division_epsilon)
        .def_readwrite("tau_imax_scale", &wce::EnhanceConfig::tau_imax_scale)
        .def_readwrite("loe_grid", &wce::EnhanceConfig::loe_grid)
        .def_readwrite("psnr_plane", &wce::EnhanceConfig::psnr_plane)
        .def_readonly("histogram_bins", &wce::EnhanceConfig::histogram_bins)
        .def("validate", &wce::EnhanceConfig::validate)
        .def("__repr__", [](const wce::EnhanceConfig& c) { return wce::format_config(c); });

    m.def("parse_config", &wce::parse_config, py::arg("text"));
    m.def("load_config", &wce::load_config, py::arg("path"));

    m.def("load_image", [](const std::filesystem::path& p) { return from_image(wce::load_image(p)); },
          py::arg("path"), "Load a PNG/PPM as an H x W x 3 float64 array in [0,1].");
    m.def("save_image", [](const py::array& img, const std::filesystem::path& p) { wce::save_image(to_image(img), p); },
          py::arg("image"), py::arg("path"));

    m.def(
        "rgb_to_hsi",
        [](const py::array& img) {
            const wce::HsiImage hsi = wce::rgb_to_hsi(to_image(img));
            return py::make_tuple(from_plane(hsi.h), from_plane(hsi.s), from_plane(hsi.i));
        },
        py::arg("image"), "Returns (hue in radians, saturation, intensity) planes.");
    m.def(
        "hsi_to_rgb",
        [](const py::array& h, const py::array& s, const py::array& i) {
            return from_image(wce::hsi_to_rgb({to_plane(h), to_plane(s), to_plane(i)}));
        },
        py::arg("h"), py::arg("s"), py::arg("i"));

    m.def(
        "normalize_intensity",
        [](const py::array& plane) {
            const auto n = wce::normalize_intensity(to_plane(plane));
            return py::make_tuple(from_plane(n.plane), n.i_max);
        },
        py::arg("intensity"));
    m.def(
        "apply_afgt",
        [](const py::array& plane, double i_max, wce::TauImaxScale scale) {
            const auto result = wce::apply_afgt({to_plane(plane), i_max}, scale);
            return py::make_tuple(from_plane(result.l_plane), histogram_dict(result.histogram));
        },
        py::arg("normalized_intensity"), py::arg("i_max"), py::arg("tau_imax_scale") = wce::TauImaxScale::native255);
    m.def("gamma_of", &wce::gamma_of, py::arg("v"));

    m.def(
        "gaussian_kernel",
        [](int size, double sigma) {
            const auto k = wce::gaussian_kernel(size, sigma);
            return from_plane(wce::Plane(static_cast<std::size_t>(size), static_cast<std::size_t>(size), k.weights()));
        },
        py::arg("size"), py::arg("sigma"));
    m.def(
        "convolve",
        [](const py::array& plane, int size, double sigma) {
            return from_plane(wce::convolve(to_plane(plane), wce::gaussian_kernel(size, sigma)));
        },
        py::arg("plane"), py::arg("size") = 5, py::arg("sigma") = 1.0);

    m.def(
        "enhance",
        [](const py::array& img, const std::optional<wce::EnhanceConfig>& cfg, bool debug) -> py::object {
            const auto result = wce::enhance(to_image(img), config_or_default(cfg), debug);
            if (!debug) {
                return from_image(result.image);
            }
            const auto& dbg = *result.debug;
            py::dict d;
            d["i_n"] = from_plane(dbg.i_n);
            d["l"] = from_plane(dbg.l);
            d["r_s"] = from_plane(dbg.r_s);
            d["s_c"] = from_plane(dbg.s_c);
            d["s_cm"] = from_plane(dbg.s_cm);
            d["i_max"] = dbg.i_max;
            d["histogram"] = histogram_dict(dbg.histogram);
            return py::make_tuple(from_image(result.image), d);
        },
        py::arg("image"), py::arg("config") = py::none(), py::arg("debug") = false);

    m.def(
        "evaluate",
        [](const py::array& orig, const py::array& enh, const std::optional<wce::EnhanceConfig>& cfg) {
            return report_dict(wce::evaluate(to_image(orig), to_image(enh), config_or_default(cfg)));
        },
        py::arg("orig"), py::arg("enh"), py::arg("config") = py::none());
    m.def(
        "metrics_json",
        [](const py::array& orig, const py::array& enh, const std::optional<wce::EnhanceConfig>& cfg) {
            return wce::to_json(wce::evaluate(to_image(orig), to_image(enh), config_or_default(cfg))).dump(2);
        },
        py::arg("orig"), py::arg("enh"), py::arg("config") = py::none(),
        "The JSON document the `metrics` CLI subcommand prints.");

    m.def("local_entropy", [](const py::array& p) { return from_plane(wce::local_entropy(to_plane(p))); },
          py::arg("intensity"));
    m.def("irmle", [](const py::array& p) { return wce::irmle(to_plane(p)); }, py::arg("intensity"));
    m.def("colorfulness", [](const py::array& img) { return wce::colorfulness(to_image(img)); }, py::arg("image"));
    m.def("cef", [](const py::array& a, const py::array& b) { return wce::cef(to_image(a), to_image(b)); },
          py::arg("orig"), py::arg("enh"));
    m.def(
        "loe",
        [](const py::array& a, const py::array& b, const std::optional<wce::EnhanceConfig>& cfg) {
            return wce::loe(to_image(a), to_image(b), config_or_default(cfg));
        },
        py::arg("orig"), py::arg("enh"), py::arg("config") = py::none());
    m.def(
        "psnr",
        [](const py::array& a, const py::array& b, wce::PsnrPlane plane) {
            return wce::psnr(to_image(a), to_image(b), plane);
        },
        py::arg("orig"), py::arg("enh"), py::arg("plane") = wce::PsnrPlane::rgb);
    m.def("ssim", [](const py::array& a, const py::array& b) { return wce::ssim(to_image(a), to_image(b)); },
          py::arg("orig"), py::arg("enh"));

    m.attr("__version__") = "0.1.0";
}
