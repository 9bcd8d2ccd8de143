#include "tgvlab/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tgvlab {

namespace {

constexpr int kWidth = 880;
constexpr int kHeight = 540;
constexpr int kMarginLeft = 78;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 46;
constexpr int kMarginBottom = 58;

const char* kPalette[] = {"#1f6fb4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};
constexpr int kPaletteSize = 10;

std::string fmt(double v, const char* spec = "%.2f") {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt_tick(double v) {
    if (v == 0.0) return "0";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// 1-2-5 tick spacing with at most max_ticks intervals
double nice_step(double span, int max_ticks) {
    const double raw = span / max_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {1.0, 2.0, 5.0}) {
        if (mult * mag >= raw) return mult * mag;
    }
    return 10.0 * mag;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

SvgLinePlot::SvgLinePlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgLinePlot::add_series(std::string name, std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("series length mismatch");
    series_.push_back({std::move(name), std::move(x), std::move(y), false});
}

void SvgLinePlot::add_points(std::string name, std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("series length mismatch");
    series_.push_back({std::move(name), std::move(x), std::move(y), true});
}

void SvgLinePlot::add_vertical_marker(double x, std::string label) {
    markers_.emplace_back(x, std::move(label));
}

std::string SvgLinePlot::render() const {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series_) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    for (const auto& [x, label] : markers_) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
    }
    if (!std::isfinite(xmin) || !std::isfinite(ymin)) {
        xmin = 0.0; xmax = 1.0; ymin = 0.0; ymax = 1.0;
    }
    if (xmax == xmin) { xmax = xmin + 1.0; }
    if (ymax == ymin) { ymax = ymin + 1.0; }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto px = [&](double x) { return kMarginLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return kMarginTop + (ymax - y) / (ymax - ymin) * plot_h; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"26\" font-family=\"sans-serif\" font-size=\"17\""
        << " text-anchor=\"middle\">" << escape_xml(title_) << "</text>\n";

    // gridlines and ticks
    const double xstep = nice_step(xmax - xmin, 8);
    const double ystep = nice_step(ymax - ymin, 8);
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-9 * xstep; x += xstep) {
        svg << "<line x1=\"" << fmt(px(x)) << "\" y1=\"" << fmt(py(ymin)) << "\" x2=\""
            << fmt(px(x)) << "\" y2=\"" << fmt(py(ymax)) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << fmt(px(x)) << "\" y=\"" << fmt(kHeight - kMarginBottom + 18)
            << "\" text-anchor=\"middle\">" << fmt_tick(x) << "</text>\n";
    }
    for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-9 * ystep; y += ystep) {
        svg << "<line x1=\"" << fmt(px(xmin)) << "\" y1=\"" << fmt(py(y)) << "\" x2=\""
            << fmt(px(xmax)) << "\" y2=\"" << fmt(py(y)) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << fmt(kMarginLeft - 8) << "\" y=\"" << fmt(py(y) + 4)
            << "\" text-anchor=\"end\">" << fmt_tick(y) << "</text>\n";
    }
    svg << "</g>\n";

    // axes
    svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << fmt(plot_w)
        << "\" height=\"" << fmt(plot_h) << "\" fill=\"none\" stroke=\"#333333\"/>\n";
    svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 14
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
        << escape_xml(x_label_) << "</text>\n";
    svg << "<text x=\"20\" y=\"" << kMarginTop + plot_h / 2
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\""
        << " transform=\"rotate(-90 20 " << kMarginTop + plot_h / 2 << ")\">"
        << escape_xml(y_label_) << "</text>\n";

    // markers
    for (const auto& [x, label] : markers_) {
        svg << "<line x1=\"" << fmt(px(x)) << "\" y1=\"" << fmt(py(ymin)) << "\" x2=\""
            << fmt(px(x)) << "\" y2=\"" << fmt(py(ymax))
            << "\" stroke=\"#888888\" stroke-dasharray=\"5,4\"/>\n";
        svg << "<text x=\"" << fmt(px(x) + 5) << "\" y=\"" << kMarginTop + 16
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#555555\">"
            << escape_xml(label) << "</text>\n";
    }

    // data
    for (std::size_t s = 0; s < series_.size(); ++s) {
        const auto& S = series_[s];
        const char* color = kPalette[s % kPaletteSize];
        if (S.points_only) {
            svg << "<g fill=\"" << color << "\">\n";
            for (std::size_t i = 0; i < S.x.size(); ++i) {
                if (!std::isfinite(S.x[i]) || !std::isfinite(S.y[i])) continue;
                svg << "<circle cx=\"" << fmt(px(S.x[i])) << "\" cy=\"" << fmt(py(S.y[i]))
                    << "\" r=\"3\"/>\n";
            }
            svg << "</g>\n";
        } else {
            svg << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < S.x.size(); ++i) {
                if (!std::isfinite(S.x[i]) || !std::isfinite(S.y[i])) continue;
                svg << fmt(px(S.x[i])) << ',' << fmt(py(S.y[i])) << ' ';
            }
            svg << "\"/>\n";
        }
    }

    // legend
    if (!series_.empty()) {
        const double lx = kMarginLeft + plot_w - 150;
        double ly = kMarginTop + 12;
        svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
        for (std::size_t s = 0; s < series_.size(); ++s) {
            const char* color = kPalette[s % kPaletteSize];
            if (series_[s].points_only) {
                svg << "<circle cx=\"" << fmt(lx + 12) << "\" cy=\"" << fmt(ly - 4)
                    << "\" r=\"3\" fill=\"" << color << "\"/>\n";
            } else {
                svg << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\""
                    << fmt(lx + 24) << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << color
                    << "\" stroke-width=\"2\"/>\n";
            }
            svg << "<text x=\"" << fmt(lx + 30) << "\" y=\"" << fmt(ly) << "\">"
                << escape_xml(series_[s].name) << "</text>\n";
            ly += 16;
        }
        svg << "</g>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

void SvgLinePlot::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write plot: " + path);
    out << render();
}

}  // namespace tgvlab
